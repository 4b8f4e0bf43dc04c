"""Unit and property tests for t-norm evaluation, folds, residuals, transforms."""

import math
import warnings
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posscheck import DomainError, PowerTransform, TNorm
from posscheck.tnorm import NILPOTENT, NON_ARCHIMEDEAN, STRICT

from conftest import ALL_TNORMS, BASE_TNORMS, oracle_apply, oracle_residual

EPS = 1e-9
GRID = [i / 20 for i in range(21)]
COARSE = [0.0, 0.25, 0.5, 0.75, 1.0]

unit_floats = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
tnorm_specs = st.sampled_from(ALL_TNORMS)


class TestApply:
    def test_godel_is_min(self):
        assert TNorm.godel().apply(0.3, 0.7) == 0.3

    def test_lukasiewicz_truncates(self):
        assert TNorm.lukasiewicz().apply(0.3, 0.6) == 0.0

    @pytest.mark.parametrize("tn", ALL_TNORMS, ids=lambda t: t.describe())
    def test_one_is_neutral(self, tn):
        assert tn.apply(1.0, 0.42) == pytest.approx(0.42, abs=EPS)

    def test_transformed_product_matches_direct_evaluation(self):
        # phi(x) = x^2: T(0.5, 0.5) = phi_inv(0.25 * 0.25) = 0.0625 ** 0.5
        assert TNorm.product(2.0).apply(0.5, 0.5) == pytest.approx(0.0625 ** 0.5, abs=EPS)

    def test_out_of_range_rejected(self):
        with pytest.raises(DomainError):
            TNorm.godel().apply(1.2, 0.5)
        with pytest.raises(DomainError):
            TNorm.godel().apply(0.5, -0.1)

    @pytest.mark.parametrize("tn", ALL_TNORMS, ids=lambda t: t.describe())
    def test_boundary_conditions_on_grid(self, tn):
        for a in COARSE:
            assert tn.apply(1.0, a) == pytest.approx(a, abs=EPS)
            assert tn.apply(0.0, a) == pytest.approx(0.0, abs=EPS)
            assert tn.apply(a, a) <= a + EPS

    @pytest.mark.parametrize("tn", ALL_TNORMS, ids=lambda t: t.describe())
    def test_laws_on_the_coarse_grid(self, tn):
        # associativity, commutativity and monotonicity over every triple of
        # a 0.05-step grid
        for a in GRID:
            for b in GRID:
                ab = tn.apply(a, b)
                assert ab == pytest.approx(tn.apply(b, a), abs=EPS)
                for c in GRID:
                    assert tn.apply(ab, c) == pytest.approx(
                        tn.apply(a, tn.apply(b, c)), abs=EPS
                    )
                    if c >= b:
                        assert tn.apply(a, c) >= ab - EPS

    @given(tn=tnorm_specs, a=unit_floats, b=unit_floats)
    def test_commutative_and_below_min(self, tn, a, b):
        ab = tn.apply(a, b)
        assert ab == pytest.approx(tn.apply(b, a), abs=EPS)
        assert ab <= min(a, b) + EPS
        assert -EPS <= ab <= 1 + EPS

    @given(tn=tnorm_specs, a=unit_floats, b=unit_floats, c=unit_floats)
    def test_associative(self, tn, a, b, c):
        left = tn.apply(tn.apply(a, b), c)
        right = tn.apply(a, tn.apply(b, c))
        assert left == pytest.approx(right, abs=EPS)

    @given(tn=tnorm_specs, a1=unit_floats, a2=unit_floats, b1=unit_floats, b2=unit_floats)
    def test_isotone(self, tn, a1, a2, b1, b2):
        lo_a, hi_a = sorted((a1, a2))
        lo_b, hi_b = sorted((b1, b2))
        assert tn.apply(lo_a, lo_b) <= tn.apply(hi_a, hi_b) + EPS

    @given(tn=tnorm_specs, a=unit_floats, b=unit_floats)
    def test_matches_reference_formulas(self, tn, a, b):
        assert tn.apply(a, b) == pytest.approx(oracle_apply(tn, a, b), abs=1e-7)


class TestFold:
    def test_lukasiewicz_triple(self):
        # pairwise folding: T(T(0.9, 0.9), 0.9) = T(0.8, 0.9) = 0.7
        tn = TNorm.lukasiewicz()
        by_pairs = tn.apply(tn.apply(0.9, 0.9), 0.9)
        assert tn.fold([0.9, 0.9, 0.9]) == pytest.approx(by_pairs, abs=EPS)
        assert by_pairs == pytest.approx(0.7, abs=EPS)

    def test_godel_is_nary_min(self):
        assert TNorm.godel().fold([0.2, 0.9, 0.5]) == 0.2

    @pytest.mark.parametrize("tn", ALL_TNORMS, ids=lambda t: t.describe())
    def test_empty_fold_is_one(self, tn):
        assert tn.fold([]) == 1

    @given(tn=tnorm_specs, values=st.lists(unit_floats, max_size=6))
    def test_order_independent(self, tn, values):
        forward = tn.fold(values)
        assert forward == pytest.approx(tn.fold(values[::-1]), abs=1e-7)

    @pytest.mark.parametrize("tn", ALL_TNORMS, ids=lambda t: t.describe())
    def test_archimedean_witness(self, tn):
        # folding 0.9 with itself: Archimedean families sink below 0.1,
        # min stays at 0.9 forever
        acc = 0.9
        sank = False
        for _ in range(64):
            acc = tn.apply(acc, 0.9)
            if acc < 0.1:
                sank = True
                break
        assert sank == tn.is_archimedean
        if not tn.is_archimedean:
            assert acc == 0.9


class TestResidual:
    def test_godel_closed_form(self):
        tn = TNorm.godel()
        assert tn.residual(0.3, 0.7) == 0.3
        assert tn.residual(0.7, 0.3) == 1

    def test_product_closed_form(self):
        assert TNorm.product().residual(0.3, 0.6) == pytest.approx(0.5, abs=EPS)

    def test_lukasiewicz_closed_form(self):
        assert TNorm.lukasiewicz().residual(0.3, 0.7) == pytest.approx(0.6, abs=EPS)

    @pytest.mark.parametrize("tn", ALL_TNORMS, ids=lambda t: t.describe())
    def test_residual_by_one_is_identity(self, tn):
        for y in COARSE:
            assert tn.residual(y, 1.0) == pytest.approx(y, abs=EPS)

    @pytest.mark.parametrize("tn", ALL_TNORMS, ids=lambda t: t.describe())
    def test_residual_by_zero_is_one(self, tn):
        for y in COARSE:
            assert tn.residual(y, 0.0) == 1

    @pytest.mark.parametrize("tn", ALL_TNORMS, ids=lambda t: t.describe())
    def test_sup_definition_on_grid(self, tn):
        # brute-force sup{z : T(z, x) <= y} on a fine z-grid
        zs = [i / 400 for i in range(401)]
        for y in COARSE:
            for x in COARSE:
                sup = max((z for z in zs if tn.apply(z, x) <= y + 1e-12), default=0.0)
                assert tn.residual(y, x) == pytest.approx(sup, abs=1 / 400 + 1e-9)

    @pytest.mark.parametrize("tn", ALL_TNORMS, ids=lambda t: t.describe())
    def test_solves_inequality_and_is_maximal(self, tn):
        # power transforms square a perturbation, pushing 10*eps below double
        # resolution near the truncation boundary; probe those with a coarser
        # step that float evaluation can still see
        delta = 10 * EPS if tn.transform is None else 1e-4
        for y in GRID:
            for x in GRID:
                r = tn.residual(y, x)
                assert tn.apply(r, x) <= y + EPS
                if r < 1:
                    assert tn.apply(min(r + delta, 1.0), x) > y

    @pytest.mark.parametrize("p", [0.5, 2.0, 3.0])
    @pytest.mark.parametrize("base", ["product", "lukasiewicz"])
    def test_transform_consistency(self, base, p):
        # transformed residual equals pulling back through the automorphism
        plain = TNorm(base)
        transformed = TNorm(base, PowerTransform(p))
        phi = PowerTransform(p)
        for y in GRID:
            for x in GRID:
                direct = transformed.residual(y, x)
                pulled = phi.inverse(plain.residual(phi.apply(y), phi.apply(x)))
                assert direct == pytest.approx(pulled, abs=EPS)

    @given(tn=tnorm_specs, y=unit_floats, x=unit_floats)
    def test_matches_reference_formulas(self, tn, y, x):
        assert tn.residual(y, x) == pytest.approx(oracle_residual(tn, y, x), abs=1e-7)


class TestExactMode:
    def test_base_operations_stay_rational(self):
        y, x = Fraction(3, 10), Fraction(3, 5)
        assert TNorm.product().residual(y, x) == Fraction(1, 2)
        assert TNorm.lukasiewicz().residual(Fraction(3, 10), Fraction(7, 10)) == Fraction(3, 5)
        assert TNorm.godel().apply(Fraction(1, 3), Fraction(1, 2)) == Fraction(1, 3)
        assert TNorm.lukasiewicz().fold([Fraction(9, 10)] * 3) == Fraction(7, 10)

    def test_fraction_arrays(self):
        arr = np.array([Fraction(1, 2), Fraction(3, 4)], dtype=object)
        out = TNorm.product().apply_array(arr, arr)
        assert list(out) == [Fraction(1, 4), Fraction(9, 16)]
        res = TNorm.product().residual_array(
            np.array([Fraction(1, 4)], dtype=object), np.array([Fraction(1, 2)], dtype=object)
        )
        assert res[0] == Fraction(1, 2)


class TestClassify:
    def test_families(self):
        assert TNorm.product().classify() == STRICT
        assert TNorm.product(2.0).classify() == STRICT
        assert TNorm.lukasiewicz().classify() == NILPOTENT
        assert TNorm.lukasiewicz(0.5).classify() == NILPOTENT
        assert TNorm.godel().classify() == NON_ARCHIMEDEAN

    def test_archimedean_flag(self):
        assert TNorm.product().is_archimedean
        assert TNorm.lukasiewicz().is_archimedean
        assert not TNorm.godel().is_archimedean


class TestTransforms:
    def test_nonpositive_exponent_rejected(self):
        with pytest.raises(DomainError):
            PowerTransform(0.0)
        with pytest.raises(DomainError):
            PowerTransform(-1.0)

    def test_extreme_exponent_warns(self):
        with pytest.warns(UserWarning):
            PowerTransform(50.0)

    def test_round_trip(self):
        phi = PowerTransform(3.0)
        for x in GRID:
            assert phi.inverse(phi.apply(x)) == pytest.approx(x, abs=EPS)
        assert phi.apply(0.0) == 0.0
        assert phi.apply(1.0) == 1.0

    def test_composition_multiplies_exponents(self):
        composed = PowerTransform.compose([PowerTransform(2.0), PowerTransform(3.0)])
        assert composed.p == 6.0

    def test_godel_transform_collapses_with_warning(self):
        with pytest.warns(UserWarning):
            tn = TNorm("godel", PowerTransform(2.0))
        assert tn.transform is None
        assert tn == TNorm.godel()


class TestSerialization:
    def test_round_trip(self):
        for tn in ALL_TNORMS:
            assert TNorm.from_json_dict(tn.to_json_dict()) == tn

    def test_plain_base(self):
        assert TNorm.from_json_dict({"base": "godel"}) == TNorm.godel()
        doc = TNorm.lukasiewicz(2.0).to_json_dict()
        assert doc == {"base": "lukasiewicz", "automorphism": {"type": "power", "p": 2.0}}
