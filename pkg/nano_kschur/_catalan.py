"""Catalan functions H(psi; gamma) and the identities used to check them."""

from itertools import combinations
from typing import Iterable, Literal, Optional

from ._rootideal import (
    addable_roots,
    bounce,
    bounce_query,
    down,
    downpath,
    has_ceiling,
    has_mirror,
    has_wall,
    removable_roots,
    up,
)
from ._symfunc import h_product, straightened
from ._utils import logger
from ._vertex import jing_b
from .base import (
    IndexedRootIdeal,
    MirrorConclusion,
    RecurrenceTerm,
    Root,
    RootIdeal,
    SymFunc,
    TPoly,
    Weight,
)

MINUS_T = TPoly((0, -1))
T = TPoly((0, 1))


def raise_root(gamma: Weight, root: Root, times: int = 1) -> Weight:
    """Apply the raising operator ``R_{ij}`` to ``gamma`` ``times`` times."""
    i, j = root
    gamma = list(gamma)
    gamma[i - 1] += times
    gamma[j - 1] -= times
    return tuple(gamma)


def lower_subset(gamma: Weight, subset: Iterable[int]) -> Weight:
    gamma = list(gamma)
    for s in subset:
        gamma[s - 1] -= 1
    return tuple(gamma)


def complement_weights(iri: IndexedRootIdeal, step: TPoly) -> dict[Weight, TPoly]:
    """Expand ``prod (1 + step * R_alpha)`` over the roots outside ``psi`` applied to ``gamma``."""
    weights: dict[Weight, TPoly] = {iri.gamma: TPoly((1,))}
    for root in iri.psi.complement():
        expanded = dict(weights)
        for gamma, coeff in weights.items():
            raised = raise_root(gamma, root)
            expanded[raised] = expanded.get(raised, TPoly()) + coeff * step
        weights = {g: c for g, c in expanded.items() if c}
    return weights


def catalan_chl(iri: IndexedRootIdeal) -> SymFunc:
    """Evaluate ``H(psi; gamma)`` as a signed sum of compositional Hall-Littlewood functions.

    The sum runs over subsets ``S`` of the complement of ``psi``, with term
    ``(-t)^|S| chl(gamma + sum_{(i,j) in S} (e_i - e_j))``. Columns are handled from
    ``ell`` down to 1: choosing the roots of column ``j`` fixes entry ``j``, so
    ``B_{gamma'_j}`` is applied right away and the roots' raises on earlier rows are
    carried as a pending vector. Terms with the same pending vector are merged.
    """
    psi, gamma, ell = iri.psi, iri.gamma, iri.ell
    columns: dict[int, list[int]] = {}
    for i, j in psi.complement():
        columns.setdefault(j, []).append(i)
    states: dict[Weight, SymFunc] = {(0,) * ell: SymFunc.one()}
    for j in range(ell, 0, -1):
        column = columns.get(j, [])
        merged: dict[Weight, list] = {}
        for pending, f in states.items():
            for size in range(len(column) + 1):
                value = jing_b(gamma[j - 1] + pending[j - 1] - size, f)
                if not value:
                    continue
                coeff = TPoly.monomial(-1 if size % 2 else 1, size)
                for rows in combinations(column, size):
                    raised = list(pending)
                    raised[j - 1] = 0
                    for i in rows:
                        raised[i - 1] += 1
                    merged.setdefault(tuple(raised), []).extend(
                        (lam, c * coeff) for lam, c in value.items()
                    )
        states = {key: SymFunc(terms) for key, terms in merged.items()}
        states = {key: f for key, f in states.items() if f}
        logger.debug(f"catalan_chl: column {j} leaves {len(states)} pending states")
    return states.get((0,) * ell, SymFunc())


def catalan_t1(iri: IndexedRootIdeal) -> SymFunc:
    """``H(psi; gamma)`` at ``t = 1`` as a signed sum of products of complete homogeneous functions."""
    result = SymFunc()
    for gamma, coeff in complement_weights(iri, TPoly((-1,))).items():
        result = result + h_product(gamma) * coeff
    return result


def catalan_series(iri: IndexedRootIdeal) -> SymFunc:
    """Evaluate ``H(psi; gamma)`` straight from the raising-operator series.

    Roots are processed from the bottom row up. Once every root of row ``c`` is
    placed, entry ``c`` can only go down, so a state with ``delta_c < c - ell``
    contributes nothing. A potential ``sum (ell - i) delta_i`` that grows with
    every raising operator caps the search.
    """
    psi, gamma, ell = iri.psi, iri.gamma, iri.ell
    if ell > 6:
        logger.warning(f"catalan_series with ell={ell} may be slow")
    roots = sorted(psi.roots(), key=lambda r: (-r[0], r[1]))
    last_index = {}
    for idx, (row, _) in enumerate(roots):
        last_index[row] = idx
    # rows complete before placing roots[idx]
    complete = [
        [c for c in range(1, ell + 1) if last_index.get(c, -1) < idx]
        for idx in range(len(roots) + 1)
    ]
    bound = sum(gamma) + ell * (ell - 1) // 2
    potential_max = sum((ell - i) * bound for i in range(1, ell + 1))

    def potential(delta):
        return sum((ell - i) * d for i, d in enumerate(delta, start=1))

    def admissible(delta, idx):
        return all(delta[c - 1] >= c - ell for c in complete[idx])

    terms: dict[Weight, TPoly] = {}

    def _walk(idx, delta, degree):
        if not admissible(delta, idx) or potential(delta) > potential_max:
            return
        if idx == len(roots):
            terms[delta] = terms.get(delta, TPoly()) + TPoly.monomial(1, degree)
            return
        i, j = roots[idx]
        times = 0
        current = delta
        while current[j - 1] >= j - ell and potential(current) <= potential_max:
            _walk(idx + 1, current, degree + times)
            times += 1
            current = raise_root(current, (i, j))

    _walk(0, gamma, 0)
    logger.debug(f"catalan_series: {len(terms)} raised weights for gamma={gamma}")
    result = SymFunc()
    for delta, coeff in terms.items():
        result = result + straightened(delta, coeff)
    return result


# Recurrences -----------------------------------------------------------------------
def expand_recurrence(
    iri: IndexedRootIdeal, root: Root, mode: Literal["addable", "removable"]
) -> tuple[RecurrenceTerm, RecurrenceTerm]:
    psi, gamma = iri.psi, iri.gamma
    if mode == "addable":
        if root not in addable_roots(psi):
            raise ValueError(f"{root} is not addable to {psi.rowcounts}")
        bigger = psi.with_root(root)
        return (
            RecurrenceTerm(IndexedRootIdeal(bigger, gamma), TPoly((1,))),
            RecurrenceTerm(IndexedRootIdeal(bigger, raise_root(gamma, root)), MINUS_T),
        )
    if mode == "removable":
        if root not in removable_roots(psi):
            raise ValueError(f"{root} is not removable from {psi.rowcounts}")
        return (
            RecurrenceTerm(IndexedRootIdeal(psi.without_root(root), gamma), TPoly((1,))),
            RecurrenceTerm(IndexedRootIdeal(psi, raise_root(gamma, root)), T),
        )
    raise ValueError(f"Unknown recurrence mode {mode}")


def downpath_expand(iri: IndexedRootIdeal, m: int) -> list[RecurrenceTerm]:
    """Iterate the removable-root recurrence along the downpath of ``m``."""
    psi, gamma = iri.psi, iri.gamma
    if not 1 <= m <= psi.ell:
        raise ValueError(f"Row {m} out of range for ell={psi.ell}")
    terms = []
    for z in downpath(psi, m):
        below = down(psi, z)
        psi_z = psi if below is None else psi.without_root((z, below))
        weight = list(gamma)
        weight[m - 1] += 1
        weight[z - 1] -= 1
        terms.append(
            RecurrenceTerm(
                IndexedRootIdeal(psi_z, tuple(weight)),
                TPoly.monomial(1, bounce(psi, m, z)),
            )
        )
    return terms


def evaluate_terms(terms: Iterable[RecurrenceTerm], evaluator=catalan_chl) -> SymFunc:
    result = SymFunc()
    for term in terms:
        result = result + evaluator(term.iri) * term.multiplier
    return result


def subset_lower(d: int, rows: Iterable[int], iri: IndexedRootIdeal) -> SymFunc:
    """``sum over d-subsets S of rows`` of ``H(psi; gamma - e_S)``.

    Acts on the indexed root ideal, not on the symmetric function it evaluates to.
    """
    rows = sorted(set(rows))
    if any(not 1 <= r <= iri.ell for r in rows):
        raise ValueError(f"Rows {rows} not inside [1, {iri.ell}]")
    result = SymFunc()
    for subset in combinations(rows, d):
        result = result + catalan_chl(IndexedRootIdeal(iri.psi, lower_subset(iri.gamma, subset)))
    return result


# Mirror rules -----------------------------------------------------------------------
def mirror_predicates(
    iri: IndexedRootIdeal,
    y: int,
    z: int,
    w: int,
    rows: Optional[Iterable[int]] = None,
) -> MirrorConclusion:
    """Report which vanishing or equality conclusion the hypotheses on ``y <= z <= w`` give."""
    psi, mu, ell = iri.psi, iri.gamma, iri.ell
    if not 1 <= y <= z <= w < ell:
        raise ValueError(f"Need 1 <= y <= z <= w < {ell}, got {(y, z, w)}")
    query = bounce_query(psi, y, w)
    if query is None or z not in query.path:
        return MirrorConclusion.NOT_APPLICABLE
    path = query.path
    if y == w:
        mirror_rows = ()
    else:
        top = bounce_query(psi, y, up(psi, w))
        mirror_rows = top.path if top is not None else None
    if mirror_rows is None:
        return MirrorConclusion.NOT_APPLICABLE
    if not has_ceiling(psi, y) or not has_wall(psi, w):
        return MirrorConclusion.NOT_APPLICABLE
    if not all(has_mirror(psi, x) for x in mirror_rows):
        return MirrorConclusion.NOT_APPLICABLE
    if rows is not None:
        rows = set(rows)
        if any((x in rows) != (x + 1 in rows) for x in path):
            return MirrorConclusion.NOT_APPLICABLE
    if all(mu[x - 1] == mu[x] for x in path):
        return MirrorConclusion.MIRROR_II_REMOVABLE_EQUAL
    if mu[z - 1] == mu[z] - 1 and all(mu[x - 1] == mu[x] for x in path if x != z):
        return MirrorConclusion.MIRROR_I_ZERO
    return MirrorConclusion.NOT_APPLICABLE


def mirror_removable_roots(psi: RootIdeal, y: int, w: int) -> list[Root]:
    """Removable roots in column ``y`` or row ``w + 1``, the ones the equality conclusion drops."""
    return sorted(
        (row, col) for row, col in removable_roots(psi) if col == y or row == w + 1
    )


def restrict_trailing(iri: IndexedRootIdeal) -> IndexedRootIdeal:
    """Delete the last row and column when ``gamma_ell = 0``; the Catalan function is unchanged."""
    if iri.ell < 2 or iri.gamma[-1] != 0:
        raise ValueError(f"Weight {iri.gamma} does not end in zero")
    counts = tuple(max(n - 1, 0) for n in iri.psi.rowcounts[:-1])
    return IndexedRootIdeal(RootIdeal(iri.ell - 1, counts), iri.gamma[:-1])
