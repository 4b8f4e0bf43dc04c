"""Possibility tables: marginals, residual conditioning, a.e. equality.

A possibility distribution assigns each complete assignment a degree in
[0, 1], with maximum 1 (normality).  Marginalizing takes maxima instead of
sums; conditioning divides out a marginal through the t-norm residual.

Run:  python demos/02_distributions_and_conditioning.py
"""

from fractions import Fraction

import numpy as np

from posscheck import PossibilityTable, Schema, TNorm, ae_equal

schema = Schema.binary("X", "Y", "Z")

# the all-or-nothing diagonal: possible iff all three variables agree
diagonal = PossibilityTable.load(
    schema,
    [({"X": "0", "Y": "0", "Z": "0"}, 1.0), ({"X": "1", "Y": "1", "Z": "1"}, 1.0)],
    default=0.0,
)

print("=== marginals take maxima ===")
print("joint (1 iff x = y = z):")
print(diagonal.values)
pair = diagonal.marginalize(["X", "Y"])
print("marginal onto (X, Y): 1 iff x = y")
print(pair.values)
print("marginal onto Z alone is vacuous (identically 1):",
      diagonal.marginalize(["Z"]).values)

print()
print("=== conditioning via residuals ===")
tn = TNorm.product()
cond = diagonal.condition(tn, ["X"], ["Z"])
print("conditional of X given Z (product t-norm):")
print(cond.values)
print("Z is vacuous here, so conditioning changes nothing.")

mixed = PossibilityTable(Schema.binary("A", "B"), [[1.0, 0.4], [0.25, 0.0]])
cond = mixed.condition(tn, ["A"], ["B"])
print()
print("a less degenerate table over (A, B):")
print(mixed.values)
print("B-marginal:", mixed.marginalize(["B"]).values)
print("conditional of A given B:")
print(cond.values)
print("cells conditioned on a zero marginal residuate to 1 and are flagged:")
print("  vacuous cells:", cond.vacuous_assignments())

print()
print("=== the residual is the greatest solution ===")
joint = mixed.marginalize(["A", "B"])
given = np.broadcast_to(
    mixed.marginalize(["B"]).extend_values(joint.schema), joint.values.shape
)
print("recombining T(marginal, conditional) reproduces the joint exactly:")
print(tn.apply_array(given, cond.values))

print()
print("=== almost-everywhere equality ===")
ref = PossibilityTable(Schema.binary("X"), [0.5, 0.5])
h1 = PossibilityTable(Schema.binary("X"), [0.7, 0.7])
h2 = PossibilityTable(Schema.binary("X"), [0.9, 0.9])
for tn in (TNorm.godel(), TNorm.product()):
    ok, witness = ae_equal(h1, h2, ref, tn)
    verdict = "equal a.e." if ok else f"different (witness {witness})"
    print(f"  under {tn.describe():<8} 0.7 and 0.9 are {verdict} w.r.t. a 0.5 distribution")
print("min collapses both to 0.5; product keeps 0.35 vs 0.45 apart.")

print()
print("=== exact rational mode ===")
exact = PossibilityTable(
    Schema.binary("A", "B"),
    np.array([[Fraction(1), Fraction(3, 10)], [Fraction(1, 5), Fraction(7, 10)]],
             dtype=object),
)
cond = exact.condition(TNorm.product(), ["A"], ["B"])
print("conditionals of an exact table stay exact:")
print(cond.values)
