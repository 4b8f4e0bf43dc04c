"""Continuous t-norms: evaluation, n-ary folds, residuals and power transforms.

Three base t-norms are supported (Goedel = min, product, Lukasiewicz =
max(0, a+b-1)), optionally rescaled through a power automorphism of the
unit interval.  All operations accept floats or exact rationals
(``fractions.Fraction``); attaching a transform forces floating point.
"""

import math
import warnings
from dataclasses import dataclass
from functools import reduce
from typing import Optional

import numpy as np

from .errors import DomainError, ModelFormatError
from .numeric import require_unit

GODEL = "godel"
PRODUCT = "product"
LUKASIEWICZ = "lukasiewicz"
BASES = (GODEL, PRODUCT, LUKASIEWICZ)

STRICT = "strict"
NILPOTENT = "nilpotent"
NON_ARCHIMEDEAN = "non_archimedean"

# Exponents far outside this range underflow double precision before the
# inverse transform can undo them.
SUPPORTED_EXPONENT_RANGE = (0.1, 10.0)


@dataclass(frozen=True)
class PowerTransform:
    """Unit-interval automorphism x -> x**p with p > 0.

    Closed under composition (exponents multiply) and has the closed-form
    inverse x -> x**(1/p), so round trips stay within float round-off.
    """

    p: float

    def __post_init__(self):
        if not self.p > 0:
            raise DomainError(f"power transform exponent must be positive, got {self.p!r}")
        lo, hi = SUPPORTED_EXPONENT_RANGE
        if not lo <= self.p <= hi:
            warnings.warn(
                f"exponent {self.p} outside the supported range [{lo}, {hi}]; "
                "results may lose precision",
                stacklevel=2,
            )

    def apply(self, x):
        return x ** self.p

    def inverse(self, x):
        return x ** (1.0 / self.p)

    @staticmethod
    def compose(transforms):
        """Collapse a sequence of power transforms into one (exponents multiply)."""
        p = 1.0
        for t in transforms:
            p *= t.p
        return PowerTransform(p)


@dataclass(frozen=True)
class TNorm:
    """A continuous t-norm: one of the three bases plus an optional transform.

    Instances are immutable and hashable; every method is a pure function,
    safe to call concurrently.
    """

    base: str
    transform: Optional[PowerTransform] = None

    def __post_init__(self):
        if self.base not in BASES:
            raise ModelFormatError(f"unknown t-norm base {self.base!r}")
        if self.base == GODEL and self.transform is not None:
            # min commutes with every monotone bijection, so the transform
            # is a no-op; drop it rather than carry dead weight.
            warnings.warn(
                "automorphism transforms leave the Goedel t-norm unchanged; ignoring it",
                stacklevel=2,
            )
            object.__setattr__(self, "transform", None)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def godel(cls):
        return cls(GODEL)

    @classmethod
    def product(cls, power=None):
        return cls(PRODUCT, PowerTransform(power) if power is not None else None)

    @classmethod
    def lukasiewicz(cls, power=None):
        return cls(LUKASIEWICZ, PowerTransform(power) if power is not None else None)

    # -- scalar operations -----------------------------------------------------

    def apply(self, a, b):
        """T(a, b); commutative, associative, isotone, with T(1, a) = a."""
        require_unit(a, "a")
        require_unit(b, "b")
        return self._apply_unchecked(a, b)

    __call__ = apply

    def _apply_unchecked(self, a, b):
        if self.base == GODEL:
            return min(a, b)
        if self.transform is None:
            if self.base == PRODUCT:
                return a * b
            return max(a + b - 1, 0)
        phi, inv = self.transform.apply, self.transform.inverse
        if self.base == PRODUCT:
            return min(inv(phi(a) * phi(b)), 1.0)
        return inv(max(phi(a) + phi(b) - 1.0, 0.0))

    def fold(self, values):
        """Left fold of the binary operation; the empty fold is the unit 1."""
        values = list(values)
        for v in values:
            require_unit(v, "fold argument")
        if not values:
            return 1
        return reduce(self._apply_unchecked, values)

    def residual(self, y, x):
        """Greatest z with T(z, x) <= y, i.e. sup{z in [0,1] : T(z, x) <= y}.

        For continuous t-norms this is the maximal T-inverse of x w.r.t. y
        whenever an inverse exists; residuating by 0 yields 1.
        """
        require_unit(y, "y")
        require_unit(x, "x")
        return self._residual_unchecked(y, x)

    def _residual_unchecked(self, y, x):
        if self.transform is not None:
            fy, fx = self.transform.apply(y), self.transform.apply(x)
            value = min(self.transform.inverse(self._base_residual(fy, fx)), 1.0)
            if self.base == LUKASIEWICZ:
                # the inverse transform amplifies round-off at the truncation
                # boundary; step down ulps so T(value, x) <= y really holds
                for _ in range(4):
                    if self._apply_unchecked(value, x) <= y:
                        break
                    value = math.nextafter(value, 0.0)
            return value
        return self._base_residual(y, x)

    def _base_residual(self, y, x):
        if x <= y:
            return 1
        # below here x > y, in particular x > 0
        if self.base == GODEL:
            return y
        if self.base == PRODUCT:
            return y / x
        return y - x + 1

    # -- vectorized operations (numpy float64 or object arrays) ----------------

    def apply_array(self, a, b):
        """Elementwise T over broadcastable arrays; no per-cell range checks."""
        if self.base == GODEL:
            return np.minimum(a, b)
        if self.transform is None:
            if self.base == PRODUCT:
                return a * b
            return np.maximum(a + b - 1, 0)
        phi, inv = self.transform.apply, self.transform.inverse
        if self.base == PRODUCT:
            return np.minimum(inv(phi(a) * phi(b)), 1.0)
        return inv(np.maximum(phi(a) + phi(b) - 1.0, 0.0))

    def fold_arrays(self, arrays, shape=None, dtype=None):
        """Fold a sequence of broadcastable arrays; empty folds give ones."""
        arrays = list(arrays)
        if not arrays:
            return np.ones(shape or (), dtype=dtype or float)
        return reduce(self.apply_array, arrays)

    def residual_array(self, y, x):
        """Elementwise residual of ``y`` by ``x`` over equal-shaped arrays."""
        raw_y, raw_x = y, x
        y = np.asarray(y)
        x = np.asarray(x)
        if self.transform is not None:
            y = self.transform.apply(y)
            x = self.transform.apply(x)
        out = np.ones(np.broadcast_shapes(y.shape, x.shape), dtype=y.dtype)
        y, x = np.broadcast_arrays(y, x)
        strict = x > y
        if self.base == GODEL:
            out[strict] = y[strict]
        elif self.base == PRODUCT:
            out[strict] = y[strict] / x[strict]
        else:
            out[strict] = y[strict] - x[strict] + 1
        if self.transform is not None:
            out = np.minimum(self.transform.inverse(out), 1.0)
            if self.base == LUKASIEWICZ:
                for _ in range(4):
                    over = self.apply_array(out, raw_x) > raw_y
                    if not over.any():
                        break
                    out = np.where(over, np.nextafter(out, 0.0), out)
        return out

    # -- classification ---------------------------------------------------------

    def classify(self):
        """'strict' (product family), 'nilpotent' (Lukasiewicz family) or
        'non_archimedean' (Goedel)."""
        if self.base == PRODUCT:
            return STRICT
        if self.base == LUKASIEWICZ:
            return NILPOTENT
        return NON_ARCHIMEDEAN

    @property
    def is_archimedean(self):
        return self.base != GODEL

    # -- serialization ------------------------------------------------------------

    def to_json_dict(self):
        doc = {"base": self.base}
        if self.transform is not None:
            doc["automorphism"] = {"type": "power", "p": self.transform.p}
        return doc

    @classmethod
    def from_json_dict(cls, doc):
        if not isinstance(doc, dict) or "base" not in doc:
            raise ModelFormatError("t-norm document must be an object with a 'base' field")
        transform = None
        auto = doc.get("automorphism")
        if auto is not None:
            if not isinstance(auto, dict) or auto.get("type") != "power":
                raise ModelFormatError("only {'type': 'power', 'p': ...} automorphisms are supported")
            try:
                transform = PowerTransform(float(auto["p"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise ModelFormatError(f"bad automorphism exponent: {exc}") from exc
        return cls(doc["base"], transform)

    def describe(self):
        label = self.base
        if self.transform is not None:
            label += f"^{self.transform.p:g}"
        return label
