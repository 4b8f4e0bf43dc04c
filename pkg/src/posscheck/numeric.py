"""Tolerance-aware comparison helpers.

Every equality test in the package funnels through a single absolute
tolerance ``eps`` (default 1e-9).  Passing ``eps=0`` switches to exact
comparison, which is the intended companion of exact-rational tables
whose cells are ``fractions.Fraction`` values.
"""

import numpy as np

from .errors import DomainError

DEFAULT_EPSILON = 1e-9


def values_equal(a, b, eps=DEFAULT_EPSILON):
    """True if two unit-interval scalars agree within ``eps`` (exactly if 0)."""
    if eps == 0:
        return a == b
    return abs(a - b) <= eps


def mismatch_mask(a, b, eps=DEFAULT_EPSILON):
    """Boolean array marking cells where two arrays disagree beyond ``eps``."""
    if eps == 0:
        return np.asarray(a != b, dtype=bool)
    return np.asarray(abs(a - b) > eps, dtype=bool)


def first_true(mask):
    """Multi-index of the first True cell, or None.

    "First" means the first hit when the leading axis varies fastest, i.e.
    the smallest index tuple read right-to-left.  This matches the order in
    which assignments of a product space are conventionally listed when the
    first variable cycles quickest.
    """
    mask = np.asarray(mask, dtype=bool)
    if not mask.any():
        return None
    if mask.ndim == 0:
        return ()
    best = min(tuple(row[::-1]) for row in np.argwhere(mask))
    return tuple(int(i) for i in best[::-1])


def require_unit(value, name="value"):
    """Raise DomainError unless ``value`` lies in [0, 1]."""
    if not (0 <= value <= 1):
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def require_unit_array(values, name="values"):
    """Raise DomainError unless every entry of ``values`` lies in [0, 1]."""
    arr = np.asarray(values)
    if arr.size and (bool((arr < 0).any()) or bool((arr > 1).any())):
        raise DomainError(f"{name} must lie in [0, 1]")
    return arr
