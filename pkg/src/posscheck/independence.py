"""Conditional T-independence between variable groups and the graphoid axioms.

A group statement (A independent of B given S) holds when recombining the
residual conditional of A given S with the marginal of B union S through the
t-norm reproduces the joint marginal of A, B, S at every assignment.  For
continuous t-norms this pointwise test is equivalent to the almost-everywhere
form stated on conditional distributions; ``independent_via_ae_equality``
implements that slower form for cross-checking.
"""

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Optional

import numpy as np

from .errors import ArityError, DisjointnessError, LimitError
from .numeric import DEFAULT_EPSILON, first_true, mismatch_mask
from .possibility import PossibilityTable
from .tnorm import TNorm

SYMMETRY = "symmetry"
DECOMPOSITION = "decomposition"
WEAK_UNION = "weak_union"
CONTRACTION = "contraction"
INTERSECTION = "intersection"
AXIOMS = (SYMMETRY, DECOMPOSITION, WEAK_UNION, CONTRACTION, INTERSECTION)

# Conventional short names (A1..A5) used by the CLI and the literature.
AXIOM_ALIASES = {
    "a1": SYMMETRY,
    "a2": DECOMPOSITION,
    "a3": WEAK_UNION,
    "a4": CONTRACTION,
    "a5": INTERSECTION,
}


def canonical_axiom(name):
    key = str(name).lower()
    key = AXIOM_ALIASES.get(key, key)
    if key not in AXIOMS:
        raise ArityError(f"unknown axiom {name!r}")
    return key


@dataclass(frozen=True)
class IndependenceStatement:
    """A triple of pairwise-disjoint variable groups: a independent of b given s."""

    a: tuple
    b: tuple
    given: tuple = ()

    def __post_init__(self):
        a = tuple(sorted(set(self.a)))
        b = tuple(sorted(set(self.b)))
        given = tuple(sorted(set(self.given)))
        if not a or not b:
            raise DisjointnessError("both independence sides must be nonempty")
        if set(a) & set(b) or set(a) & set(given) or set(b) & set(given):
            raise DisjointnessError("statement groups must be pairwise disjoint")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "given", given)

    def __str__(self):
        lhs = ",".join(self.a)
        rhs = ",".join(self.b)
        cond = ",".join(self.given) if self.given else "{}"
        return f"I({lhs}; {rhs} | {cond})"

    def to_json_dict(self):
        return {"a": list(self.a), "b": list(self.b), "given": list(self.given)}


@dataclass(frozen=True, eq=False)
class IndependenceResult:
    statement: IndependenceStatement
    holds: bool
    witness: Optional[dict] = None

    def __bool__(self):
        return self.holds


def independent(table: PossibilityTable, tn: TNorm, statement: IndependenceStatement,
                eps=DEFAULT_EPSILON) -> IndependenceResult:
    """Decide conditional T-independence of the statement's groups.

    The witness, when the statement fails, is the first assignment of the
    involved variables (first variable cycling fastest) where the t-norm
    recombination misses the joint marginal.
    """
    return _evaluate(table, tn, statement, eps)


def _evaluate(table, tn, statement, eps, cache=None):
    if cache is not None:
        hit = cache.get(statement)
        if hit is not None:
            return hit
    schema = table.schema
    a = schema.in_order(statement.a)
    b = schema.in_order(statement.b)
    s = schema.in_order(statement.given)
    joint = table.marginalize(set(a) | set(b) | set(s))
    m_as = table.marginalize(set(a) | set(s))
    m_s = table.marginalize(s)
    m_bs = table.marginalize(set(b) | set(s))
    conditional = tn.residual_array(
        m_as.values,
        np.broadcast_to(m_s.extend_values(m_as.schema), m_as.values.shape),
    )
    lhs = tn.apply_array(
        _expand(conditional, m_as.schema, joint.schema),
        m_bs.extend_values(joint.schema),
    )
    idx = first_true(mismatch_mask(lhs, joint.values, eps))
    if idx is None:
        result = IndependenceResult(statement, True)
    else:
        result = IndependenceResult(statement, False, joint.schema.assignment(idx))
    if cache is not None:
        cache[statement] = result
    return result


def _expand(values, schema, superschema):
    arr = values
    own = set(schema.variables)
    for i, name in enumerate(superschema.variables):
        if name not in own:
            arr = np.expand_dims(arr, axis=i)
    return arr


def independent_via_ae_equality(table: PossibilityTable, tn: TNorm,
                                statement: IndependenceStatement,
                                eps=DEFAULT_EPSILON) -> IndependenceResult:
    """Direct almost-everywhere form of the independence test.

    Compares the residual conditional of (A,B) given S against the t-norm
    combination of the residual conditionals of A and B given S, where both
    sides count as equal when they agree after combination with the
    conditioning marginal.  Slower than ``independent`` but a useful oracle.
    """
    schema = table.schema
    a = schema.in_order(statement.a)
    b = schema.in_order(statement.b)
    s = schema.in_order(statement.given)
    cond_ab = table.condition(tn, tuple(a) + tuple(b), s)
    cond_a = table.condition(tn, a, s)
    cond_b = table.condition(tn, b, s)
    m_s = table.marginalize(s)
    union_schema = cond_ab.schema
    pi_s = np.broadcast_to(m_s.extend_values(union_schema), union_schema.shape)
    lhs = tn.apply_array(cond_ab.values, pi_s)
    rhs = tn.apply_array(
        tn.apply_array(
            _expand(cond_a.values, cond_a.schema, union_schema),
            _expand(cond_b.values, cond_b.schema, union_schema),
        ),
        pi_s,
    )
    idx = first_true(mismatch_mask(lhs, rhs, eps))
    if idx is None:
        return IndependenceResult(statement, True)
    return IndependenceResult(statement, False, union_schema.assignment(idx))


# -- graphoid axioms ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class AxiomReport:
    """Outcome of one axiom instantiation.

    ``consequent_holds`` is None when the consequent was skipped because an
    antecedent already failed (scans do this); ``holds`` is False exactly
    when every antecedent holds and the consequent fails.
    """

    axiom: str
    groups: tuple
    antecedents: tuple
    consequent: IndependenceStatement
    consequent_holds: Optional[bool]
    holds: bool
    witness: Optional[dict] = None


def _axiom_statements(axiom, groups):
    if axiom == SYMMETRY:
        x, y, z = groups
        return [IndependenceStatement(x, y, z)], IndependenceStatement(y, x, z)
    x, y, z, w = groups
    if axiom == DECOMPOSITION:
        return [IndependenceStatement(x, y + z, w)], IndependenceStatement(x, z, w)
    if axiom == WEAK_UNION:
        return [IndependenceStatement(x, y + z, w)], IndependenceStatement(x, y, z + w)
    if axiom == CONTRACTION:
        return (
            [IndependenceStatement(x, y, z + w), IndependenceStatement(x, z, w)],
            IndependenceStatement(x, y + z, w),
        )
    # intersection
    return (
        [IndependenceStatement(x, y, z + w), IndependenceStatement(x, z, y + w)],
        IndependenceStatement(x, y + z, w),
    )


def _check_instance(table, tn, axiom, groups, eps, cache, lazy):
    antecedent_stmts, consequent_stmt = _axiom_statements(axiom, groups)
    antecedents = []
    all_true = True
    for stmt in antecedent_stmts:
        res = _evaluate(table, tn, stmt, eps, cache)
        antecedents.append((stmt, res.holds))
        all_true = all_true and res.holds
    if lazy and not all_true:
        return AxiomReport(axiom, groups, tuple(antecedents), consequent_stmt, None, True)
    cons = _evaluate(table, tn, consequent_stmt, eps, cache)
    violated = all_true and not cons.holds
    return AxiomReport(
        axiom,
        groups,
        tuple(antecedents),
        consequent_stmt,
        cons.holds,
        not violated,
        cons.witness if violated else None,
    )


def check_axiom(table: PossibilityTable, tn: TNorm, axiom, groups,
                eps=DEFAULT_EPSILON) -> AxiomReport:
    """Test one axiom instantiation, evaluating every antecedent and the consequent.

    ``groups`` is a sequence of variable groups: (X, Y, Z) for symmetry and
    (X, Y, Z, W) for the rest, with W possibly empty.
    """
    axiom = canonical_axiom(axiom)
    groups = tuple(tuple(g) for g in groups)
    expected = 3 if axiom == SYMMETRY else 4
    if len(groups) != expected:
        raise ArityError(f"{axiom} takes {expected} groups, got {len(groups)}")
    if axiom != SYMMETRY and not all(groups[:3]):
        raise ArityError(f"{axiom} needs nonempty X, Y and Z groups (only W may be empty)")
    flat = [v for g in groups for v in g]
    if len(flat) != len(set(flat)):
        raise DisjointnessError("axiom groups must be pairwise disjoint")
    return _check_instance(table, tn, axiom, groups, eps, cache={}, lazy=False)


def scan_axioms(table: PossibilityTable, tn: TNorm, axioms=None, scan_limit=6,
                eps=DEFAULT_EPSILON):
    """Exhaustively instantiate axioms over all disjoint group assignments.

    X, Y, Z range over nonempty groups; W (where the axiom has one) may be
    empty; variables may stay unused.  Consequents are only evaluated when
    all antecedents hold, so vacuously-true reports carry
    ``consequent_holds=None``.  Raises LimitError when the schema exceeds
    ``scan_limit`` variables.
    """
    names = table.schema.variables
    if len(names) > scan_limit:
        raise LimitError(
            f"schema has {len(names)} variables, scan limit is {scan_limit}"
        )
    if axioms is None:
        axioms = AXIOMS
    axioms = [canonical_axiom(a) for a in axioms]
    cache = {}
    reports = []
    for axiom in axioms:
        n_roles = 3 if axiom == SYMMETRY else 4
        for roles in iter_product(range(n_roles + 1), repeat=len(names)):
            groups = tuple(
                tuple(v for v, r in zip(names, roles) if r == k)
                for k in range(n_roles)
            )
            if not groups[0] or not groups[1] or not groups[2]:
                continue
            reports.append(
                _check_instance(table, tn, axiom, groups, eps, cache, lazy=True)
            )
    return reports


def violations(reports):
    """The subset of axiom reports that are actual violations."""
    return [r for r in reports if not r.holds]
