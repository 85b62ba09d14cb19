from itertools import product

import pytest

from nano_kschur._catalan import (
    catalan_chl,
    catalan_series,
    catalan_t1,
    complement_weights,
    downpath_expand,
    evaluate_terms,
    expand_recurrence,
    mirror_predicates,
    mirror_removable_roots,
    raise_root,
    restrict_trailing,
    subset_lower,
)
from nano_kschur._rootideal import all_root_ideals
from nano_kschur._symfunc import e_perp, specialize
from nano_kschur._vertex import chl
from nano_kschur.base import IndexedRootIdeal, MirrorConclusion, RootIdeal, SymFunc, TPoly

T = TPoly((0, 1))


def s(*parts, coeff=1):
    return SymFunc.schur(parts, coeff)


def H(rowcounts, gamma):
    return IndexedRootIdeal(RootIdeal(len(gamma), rowcounts), gamma)


def test_indexed_root_ideal_length():
    with pytest.raises(ValueError):
        IndexedRootIdeal(RootIdeal.empty(2), (1, 2, 3))


def test_raising():
    assert raise_root((1, 1, 1), (1, 3)) == (2, 1, 0)
    assert raise_root((1, 1, 1), (1, 3), times=2) == (3, 1, -1)
    assert complement_weights(H((1, 0), (1, 1)), T) == {(1, 1): TPoly((1,))}


def test_empty_ideal_is_schur():
    assert catalan_chl(H((0, 0), (0, 2))) == s(1, 1, coeff=-1)
    assert catalan_chl(H((0, 0), (1, 2))) == SymFunc.zero()
    assert catalan_chl(H((0, 0, 0), (2, 1, 1))) == s(2, 1, 1)


def _summed_over_weights(iri):
    total = SymFunc()
    for gamma, coeff in complement_weights(iri, TPoly((0, -1))).items():
        total = total + chl(gamma) * coeff
    return total


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_column_evaluation_matches_weight_sum(ell):
    for psi in all_root_ideals(ell):
        for gamma in [(2,) * ell, tuple(range(ell, 0, -1)), tuple((-1) ** i for i in range(ell))]:
            iri = IndexedRootIdeal(psi, gamma)
            assert catalan_chl(iri) == _summed_over_weights(iri)


def test_full_ideal_is_chl():
    for gamma in [(0, 2), (1, 1), (2, 0), (1, -1)]:
        assert catalan_chl(H((1, 0), gamma)) == chl(gamma)


@pytest.mark.parametrize("ell", [1, 2])
def test_series_agrees(ell):
    for psi in all_root_ideals(ell):
        for gamma in product(range(-1, 3), repeat=ell):
            iri = IndexedRootIdeal(psi, gamma)
            assert catalan_series(iri) == catalan_chl(iri)


def test_series_agrees_ell_three():
    for psi in all_root_ideals(3):
        iri = IndexedRootIdeal(psi, (2, 1, 1))
        assert catalan_series(iri) == catalan_chl(iri)


def test_t1():
    assert catalan_t1(H((1, 0), (1, 1))) == s(2) + s(1, 1)
    assert catalan_t1(H((0, 0), (1, 1))) == s(1, 1)
    iri = H((1, 1, 0), (2, 1, 1))
    assert catalan_t1(iri) == specialize(catalan_chl(iri), 1)


class TestRecurrences:
    def test_addable(self):
        iri = H((1, 0, 0), (1, 1, 1))
        first, second = expand_recurrence(iri, (2, 3), "addable")
        assert first.iri.psi == RootIdeal(3, (1, 1, 0))
        assert second.iri.gamma == (1, 2, 0)
        assert second.multiplier == TPoly((0, -1))
        assert evaluate_terms([first, second]) == catalan_chl(iri)

    def test_removable(self):
        iri = H((2, 1, 0), (1, 1, 1))
        terms = expand_recurrence(iri, (2, 3), "removable")
        assert terms[0].iri.psi == RootIdeal(3, (2, 0, 0))
        assert terms[1].multiplier == T
        assert evaluate_terms(terms) == catalan_chl(iri)

    def test_rejects_bad_roots(self):
        iri = H((2, 1, 0), (1, 1, 1))
        with pytest.raises(ValueError):
            expand_recurrence(iri, (1, 3), "removable")
        with pytest.raises(ValueError):
            expand_recurrence(iri, (1, 2), "addable")
        with pytest.raises(ValueError):
            expand_recurrence(iri, (1, 2), "sideways")

    def test_downpath(self):
        iri = H((2, 1, 0), (2, 1, 0))
        terms = downpath_expand(iri, 1)
        assert [t.multiplier for t in terms] == [TPoly((1,)), T, TPoly((0, 0, 1))]
        assert terms[0].iri.gamma == (2, 1, 0)
        assert evaluate_terms(terms) == catalan_chl(iri)
        with pytest.raises(ValueError):
            downpath_expand(iri, 4)


def test_pushdown_and_trailing_zero():
    iri = H((1, 0, 0), (2, 1, 0))
    value = catalan_chl(iri)
    for d in range(4):
        assert subset_lower(d, [1, 2, 3], iri) == e_perp(d, value)
    assert restrict_trailing(iri) == H((0, 0), (2, 1))
    assert catalan_chl(restrict_trailing(iri)) == value
    with pytest.raises(ValueError):
        restrict_trailing(H((0, 0), (1, 1)))


def test_sl2_cancellation():
    iri = H((1, 1, 0), (2, 1, 1))
    partner = H((1, 1, 0), (0, 3, 1))
    assert catalan_chl(iri) + catalan_chl(partner) == SymFunc.zero()


def test_subset_lowering_is_not_a_function_of_the_value():
    iri = H((0, 0), (1, 2))
    assert catalan_chl(iri) == SymFunc.zero()
    assert subset_lower(1, [1], iri) == s(1, 1, coeff=-1)
    with pytest.raises(ValueError):
        subset_lower(1, [3], iri)


class TestMirror:
    def test_toggle(self):
        iri = H((4, 1, 1, 0, 0), (3, 1, 2, 1, 1))
        assert mirror_predicates(iri, 2, 2, 2) == MirrorConclusion.MIRROR_I_ZERO
        assert catalan_chl(iri) == SymFunc.zero()

    def test_equal_removable(self):
        iri = H((5, 3, 2, 1, 1, 0), (3, 2, 2, 1, 1, 1))
        assert mirror_predicates(iri, 2, 2, 4) == MirrorConclusion.MIRROR_II_REMOVABLE_EQUAL
        assert mirror_removable_roots(iri.psi, 2, 4) == [(1, 2), (5, 6)]

    def test_subset_lowering_variant(self):
        iri = H((2, 0, 0), (3, 1, 2))
        assert mirror_predicates(iri, 2, 2, 2) == MirrorConclusion.MIRROR_I_ZERO
        assert mirror_predicates(iri, 2, 2, 2, rows={2, 3}) == MirrorConclusion.MIRROR_I_ZERO
        assert mirror_predicates(iri, 2, 2, 2, rows={1, 2}) == MirrorConclusion.NOT_APPLICABLE
        assert subset_lower(1, {2, 3}, iri) == SymFunc.zero()
        assert subset_lower(1, {1, 2}, iri) == s(3, 1, 1, coeff=-1) + s(4, 1, coeff=TPoly((0, -1)))

    def test_out_of_range(self):
        iri = H((2, 0, 0), (3, 1, 2))
        with pytest.raises(ValueError):
            mirror_predicates(iri, 2, 1, 2)
        with pytest.raises(ValueError):
            mirror_predicates(iri, 1, 2, 3)
        assert mirror_predicates(iri, 1, 1, 1) == MirrorConclusion.NOT_APPLICABLE
