"""Triangular norms, n-ary folds, and residuals.

A continuous t-norm models conjunction of partial truths on [0, 1].  Three
families cover all continuous behavior: min (Goedel), product, and
bounded-sum (Lukasiewicz), optionally rescaled through a power automorphism
of the unit interval.  The residual of y by x is the greatest z with
T(z, x) <= y, and is the engine behind conditioning.

Run:  python demos/01_tnorms_and_residuals.py
"""

from posscheck import PowerTransform, TNorm

godel = TNorm.godel()
product = TNorm.product()
lukasiewicz = TNorm.lukasiewicz()

print("=== the three base t-norms ===")
pairs = [(0.3, 0.7), (0.3, 0.6), (0.9, 0.9), (1.0, 0.42)]
for a, b in pairs:
    print(f"  T({a}, {b}):  min={godel(a, b):.3f}  "
          f"product={product(a, b):.3f}  lukasiewicz={lukasiewicz(a, b):.3f}")

print()
print("=== n-ary folds (associativity makes the order irrelevant) ===")
values = [0.9, 0.9, 0.9]
for tn in (godel, product, lukasiewicz):
    print(f"  {tn.describe():<12} fold({values}) = {tn.fold(values):.3f}")
print(f"  the empty fold is the neutral element: {godel.fold([])}")

print()
print("=== Archimedean behavior ===")
print("folding 0.9 with itself: product and lukasiewicz sink below any")
print("threshold; min is idempotent and never moves:")
for tn in (godel, product, lukasiewicz):
    acc, steps = 0.9, 0
    while acc >= 0.1 and steps < 64:
        acc = tn.apply(acc, 0.9)
        steps += 1
    sank = "sank below 0.1 after %2d folds" % steps if acc < 0.1 else "never sinks"
    print(f"  {tn.describe():<12} {sank}   (class: {tn.classify()})")

print()
print("=== residuals: the greatest factor you can recover ===")
print("residual(y, x) = sup{z : T(z, x) <= y}")
cases = [(0.3, 0.7), (0.7, 0.3), (0.3, 0.6), (0.5, 0.0)]
for y, x in cases:
    print(f"  y={y}, x={x}:  min -> {godel.residual(y, x):.3f}   "
          f"product -> {product.residual(y, x):.3f}   "
          f"lukasiewicz -> {lukasiewicz.residual(y, x):.3f}")
print("  (residuating by x=0 gives 1: anything combines with 0 to stay 0)")

print()
print("=== power transforms ===")
print("rescaling through phi(x) = x**p keeps a t-norm continuous; the")
print("product family is closed under powers, the lukasiewicz family is not:")
squared = TNorm.lukasiewicz(2.0)
for a, b in [(0.9, 0.9), (0.8, 0.7)]:
    print(f"  T({a}, {b}):  lukasiewicz={lukasiewicz(a, b):.4f}   "
          f"lukasiewicz^2={squared(a, b):.4f}")
phi = PowerTransform(2.0)
y, x = 0.4, 0.9
direct = squared.residual(y, x)
pulled = phi.inverse(lukasiewicz.residual(phi.apply(y), phi.apply(x)))
print(f"  transformed residual({y}, {x}) = {direct:.6f}")
print(f"  pulled back through phi      = {pulled:.6f}   (they agree)")
