import time
import unittest

import pytest

from nano_kschur._catalan import catalan_chl
from nano_kschur._cores import cover_z, k_skew, to_bounded, to_core
from nano_kschur._kschur import (
    NotInSpanError,
    alternating_cover_sum,
    bounded_partition,
    branch,
    chen_ideal,
    cover_operator,
    cvr,
    delta_k,
    downpath_straighten,
    expansion_to_symfunc,
    hl_expand,
    horizontal_pieri,
    is_kweight,
    kschur,
    partial_restriction,
    restriction_difference,
    schur_expand,
    skew_linking_check,
    smt_weight_poly,
    straighten,
    straightening_admits,
    straightening_intervals,
    vertical_pieri,
    vsmt_weight_poly,
)
from nano_kschur._symfunc import e_perp, hall_pair_e, hall_pair_h
from nano_kschur._vertex import chl
from nano_kschur.base import (
    CoverResult,
    IndexedRootIdeal,
    KExpansion,
    RootIdeal,
    SkewDiagram,
    SymFunc,
    TPoly,
    partitions,
    strip,
)

T = TPoly((0, 1))


def t(exponent):
    return TPoly.monomial(1, exponent)


def s(*parts, coeff=1):
    return SymFunc.schur(parts, coeff)


class TestIndexing(unittest.TestCase):
    def test_kweights(self):
        self.assertTrue(is_kweight((1, 2), 2))
        self.assertFalse(is_kweight((1, 3), 3))
        self.assertFalse(is_kweight((3,), 2))

    def test_bounded_partition(self):
        self.assertEqual(bounded_partition((2, 1), 2, 4), (2, 1, 0, 0))
        with self.assertRaises(ValueError):
            bounded_partition((1, 2), 2)
        with self.assertRaises(ValueError):
            bounded_partition((3,), 2)

    def test_delta_k(self):
        self.assertEqual(delta_k((3, 3, 2, 1), 4).roots(), {(1, 3), (1, 4), (2, 4)})
        # adding a column and raising k leaves the ideal unchanged
        self.assertEqual(delta_k((4, 4, 3, 2), 5), delta_k((3, 3, 2, 1), 4))
        self.assertEqual(delta_k((2, 1), 3), RootIdeal.empty(2))


class TestKSchur(unittest.TestCase):
    def test_small(self):
        self.assertEqual(kschur((), 3), SymFunc.one())
        self.assertEqual(kschur((1, 1), 1), s(1, 1) + s(2, coeff=T))
        self.assertEqual(kschur((2, 1), 2), chl((2, 1)))
        self.assertEqual(kschur((2, 1), 2), s(2, 1) + s(3, coeff=T))

    def test_stability(self):
        for mu in partitions(4):
            self.assertEqual(kschur(mu, 4), s(*mu))

    def test_schur_expansion_3321(self):
        expected = SymFunc(
            {
                (5, 4): t(3),
                (4, 4, 1): t(2),
                (5, 3, 1): t(2),
                (4, 3, 2): t(1),
                (4, 3, 1, 1): t(1),
                (3, 3, 2, 1): 1,
            }
        )
        self.assertEqual(kschur((3, 3, 2, 1), 4), expected)
        self.assertEqual(schur_expand((3, 3, 2, 1), 4), expected)

    def test_expansion_methods(self):
        self.assertEqual(schur_expand((1, 1, 1, 1), 1), chl((1, 1, 1, 1)))
        self.assertEqual(schur_expand((2, 1), 2, method="branching"), s(2, 1) + s(3, coeff=T))
        with self.assertRaises(ValueError):
            schur_expand((2, 1), 2, method="guess")

    def test_expansion_to_symfunc(self):
        expansion = KExpansion(2, {(2, 1): 1, (1, 1): T})
        self.assertEqual(
            expansion_to_symfunc(expansion), kschur((2, 1), 2) + kschur((1, 1), 2) * T
        )


class TestStraightening(unittest.TestCase):
    def test_cvr(self):
        self.assertEqual(
            cvr((3, 3, 3, 2, 1), 2, 4),
            CoverResult(weight=(4, 2, 2, 2, 1), bounce=1, is_partition=True),
        )
        self.assertEqual(
            cvr((2,) * 8 + (1,), 6, 4),
            CoverResult(weight=(3, 3, 2, 2, 2, 1, 1, 1, 1), bounce=4, is_partition=True),
        )
        self.assertFalse(cvr((2,) * 9, 6, 4).is_partition)

    def test_cvr_without_a_run(self):
        self.assertEqual(cvr((3, 2, 1), 1, 4), CoverResult(weight=(2, 2, 1), bounce=0, is_partition=True))
        self.assertEqual(cvr((1, 1), 1, 4), CoverResult(weight=(0, 1), bounce=0, is_partition=False))

    def test_cvr_row_out_of_range(self):
        with self.assertRaises(ValueError):
            cvr((2, 1), 3, 4)
        with self.assertRaises(ValueError):
            cvr((2, 1), 0, 4)
        with self.assertRaises(ValueError):
            cvr((5,), 1, 4)

    def test_straighten(self):
        self.assertEqual(straighten((3, 3, 3, 2, 1), 2, 4), KExpansion(4, {(4, 2, 2, 2, 1): T}))
        self.assertEqual(
            straighten((2,) * 8 + (1,), 6, 4),
            KExpansion(4, {(3, 3, 2, 2, 2, 1, 1, 1, 1): t(4)}),
        )
        self.assertEqual(straighten((2,) * 9, 6, 4), KExpansion(4))
        self.assertEqual(straighten((4, 3, 2, 2, 2, 2, 2, 2, 2), 6, 4), KExpansion(4))
        self.assertEqual(straighten((1, 1), 1, 4), KExpansion(4))

    def test_small_straightening_matches_direct_evaluation(self):
        lam = (2, 2, 1)
        for z in range(1, 4):
            mu = tuple(p - (1 if i == z - 1 else 0) for i, p in enumerate(lam))
            assert expansion_to_symfunc(straighten(lam, z, 2)) == kschur(mu, 2)

    def test_nine_row_direct_evaluation(self):
        start = time.perf_counter()
        lowered = kschur((2, 2, 2, 2, 2, 1, 2, 2, 1), 4)
        target = kschur((3, 3, 2, 2, 2, 1, 1, 1, 1), 4)
        elapsed = time.perf_counter() - start
        self.assertEqual(lowered, target * t(4))
        self.assertLess(elapsed, 5)
        self.assertEqual(kschur((2, 2, 2, 2, 2, 1, 2, 2, 2), 4), SymFunc.zero())

    def test_intervals(self):
        lam = (2,) * 8 + (1,)
        self.assertEqual(straightening_intervals(lam, 6, 4), [(6, 8), (3, 5)])
        self.assertTrue(straightening_admits(lam, 6, 4, range(1, 9)))
        self.assertTrue(straightening_admits(lam, 6, 4, range(1, 3)))
        self.assertFalse(straightening_admits(lam, 6, 4, range(1, 7)))
        self.assertEqual(straightening_intervals((2,) * 9, 6, 4), [(6, 9), (3, 5)])

    def test_cover_matches_cvr(self):
        lam = (2,) * 8 + (1,)
        tau = cover_z(to_core(lam, 4), 6)
        self.assertEqual(to_bounded(tau), strip(cvr(lam, 6, 4).weight))


class TestPieri(unittest.TestCase):
    def test_small(self):
        self.assertEqual(vertical_pieri((1, 1), 1, 1), KExpansion(1, {(1,): TPoly((1, 1))}))
        self.assertEqual(horizontal_pieri((1, 1), 1, 1), KExpansion(1, {(1,): TPoly((1, 1))}))

    def test_degenerate_degrees(self):
        self.assertEqual(vertical_pieri((2, 1), 2, 0), KExpansion(2, {(2, 1): 1}))
        self.assertEqual(vertical_pieri((1, 1), 1, 3), KExpansion(1))

    def test_partial_restriction(self):
        expected = KExpansion(
            3,
            {
                (2, 2, 2, 2, 1, 1): t(2) + t(3) + t(4),
                (3, 2, 2, 1, 1, 1): t(4),
                (2, 2, 2, 2, 2): t(3),
            },
        )
        self.assertEqual(partial_restriction((2,) * 6, 3, 2, 4), expected)

    def test_downpath_straightening(self):
        lam = (2, 2, 1)
        for m in range(1, 4):
            self.assertEqual(downpath_straighten(lam, 2, m), restriction_difference(lam, 2, 1, m))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_vertical_pieri_matches_e_perp(d):
    value = kschur((2, 2, 1), 2)
    assert expansion_to_symfunc(vertical_pieri((2, 2, 1), 2, d)) == e_perp(d, value)


def test_branch_22221():
    expected = KExpansion(
        4,
        {(3, 2, 2, 2): t(2), (3, 3, 2, 1): t(3), (3, 3, 1, 1, 1): t(2), (2, 2, 2, 2, 1): 1},
    )
    found = branch((2, 2, 2, 2, 1), 3)
    assert found == expected
    # the 3321 tableau has cover spins 1, 1, 1, 0, 0
    assert expansion_to_symfunc(found) == kschur((2, 2, 2, 2, 1), 3)


@pytest.mark.parametrize("eta", list(partitions(3)))
def test_weight_polynomials(eta):
    value = kschur((2, 1), 2)
    assert smt_weight_poly((2, 1), 2, eta) == hall_pair_h(value, eta)
    assert vsmt_weight_poly((2, 1), 2, eta) == hall_pair_e(value, eta)


class TestCoverOperators(unittest.TestCase):
    def test_single_box(self):
        one = KExpansion(1, {(1,): 1})
        self.assertEqual(cover_operator(one, 1), KExpansion(1, {(): 1}))
        self.assertEqual(cover_operator(one, 2), KExpansion(1))

    def test_alternating_sum_vanishes(self):
        start = KExpansion(2, {(2, 1): 1})
        for m in (1, 2):
            self.assertEqual(alternating_cover_sum(m, start, 2), KExpansion(2))
        self.assertEqual(alternating_cover_sum(0, start, 2), start)


class TestChenIdeal(unittest.TestCase):
    def test_skew_linking(self):
        self.assertEqual(chen_ideal(SkewDiagram((2, 1), ())), RootIdeal.empty(2))
        bad = SkewDiagram((2, 2), (1,))
        self.assertFalse(skew_linking_check(bad))
        with self.assertRaises(ValueError):
            chen_ideal(bad)

    def test_k_skew_ideal(self):
        """Row counts of the ideal only; the Catalan equality is swept by the chen suite."""
        lam = (6, 6, 4, 3, 3, 2, 1, 1, 1, 1)
        skew = k_skew(lam, 7)
        self.assertEqual(skew.inner, (5, 4, 1, 1, 1))
        self.assertTrue(skew_linking_check(skew))
        psi = chen_ideal(skew)
        self.assertEqual(psi.rowcounts, (8, 6, 3, 2, 1, 0, 0, 0, 0, 0))
        self.assertEqual(delta_k(lam, 7).rowcounts, (8, 7, 4, 2, 1, 0, 0, 0, 0, 0))
        self.assertTrue(psi.roots() <= delta_k(lam, 7).roots())

    def test_catalan_equality(self):
        for lam in [(3, 2, 1), (4, 2, 2, 1), (2, 2, 2, 1, 1)]:
            psi = chen_ideal(k_skew(lam, 4))
            self.assertEqual(catalan_chl(IndexedRootIdeal(psi, lam)), kschur(lam, 4))


class TestHallLittlewoodBasis(unittest.TestCase):
    def test_expand(self):
        self.assertEqual(hl_expand(chl((2, 1)), 2, 2), {(2, 1): TPoly((1,))})
        self.assertEqual(hl_expand(SymFunc.zero(), 2, 2), {})

    def test_out_of_span(self):
        with self.assertRaises(NotInSpanError) as ctx:
            hl_expand(s(3), 2, 2)
        self.assertEqual(ctx.exception.residual, s(3))
