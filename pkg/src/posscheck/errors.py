"""Exception hierarchy shared by all posscheck modules."""


class PosscheckError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PosscheckError):
    """A numeric value lies outside the unit interval [0, 1]."""


class SchemaError(PosscheckError):
    """Unknown variable or label, or two objects disagree on their schema."""


class NormalityError(PosscheckError):
    """A possibility table that must be normal (max value 1) is not."""


class DisjointnessError(PosscheckError):
    """Variable groups that must be pairwise disjoint overlap."""


class ArityError(PosscheckError):
    """An axiom was instantiated with the wrong number of groups."""


class LimitError(PosscheckError):
    """An enumeration exceeds its configured size limit."""


class CrispnessError(PosscheckError):
    """A table required to be crisp ({0,1}-valued) is not."""


class PositivityError(PosscheckError):
    """A table required to be strictly positive contains a zero."""


class UnsupportedTNormError(PosscheckError):
    """The requested operation is not defined for this t-norm family."""


class InternalInconsistencyError(PosscheckError):
    """Engine results contradict a theorem; indicates an implementation bug."""


class ModelFormatError(PosscheckError):
    """A model file or JSON document does not match the expected layout."""
