"""Graded k-Schur functions as Catalan functions, with their straightening, Pieri and branching rules."""

from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Optional

from ._catalan import catalan_chl, subset_lower
from ._cores import enumerate_tableaux, to_bounded
from ._rootideal import bounce, downpath, up, uppath
from ._utils import logger
from ._vertex import chl
from .base import (
    CoverResult,
    IndexedRootIdeal,
    KExpansion,
    KWeight,
    Partition,
    RootIdeal,
    SkewDiagram,
    StrongMarkedTableau,
    SymFunc,
    TPoly,
    Weight,
    is_partition,
    pad,
    partitions,
)

Evaluator = Callable[[IndexedRootIdeal], SymFunc]


class NotInSpanError(ValueError):
    """Raised when a symmetric function is not a combination of the Hall-Littlewood basis."""

    def __init__(self, residual: SymFunc, message: str):
        super().__init__(message)
        self.residual = residual


def is_kweight(mu: Iterable[int], k: int) -> bool:
    try:
        KWeight(tuple(mu), k)
    except ValueError:
        return False
    return True


def bounded_partition(lam: Iterable[int], k: int, ell: Optional[int] = None) -> Weight:
    """Validate a partition with parts at most ``k`` and pad it to length ``ell``."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    if lam and lam[0] > k:
        raise ValueError(f"{lam} has a part larger than k={k}")
    return pad(lam, len(lam) if ell is None else ell)


def delta_k(mu: Iterable[int], k: int) -> RootIdeal:
    """The root ideal ``{(i, j) : k - mu_i + i < j}`` in ``ell x ell``."""
    kw = KWeight(tuple(mu), k)
    ell = kw.ell
    counts = tuple(
        max(0, min(ell - i, ell - (k - m + i))) for i, m in enumerate(kw.mu, start=1)
    )
    return RootIdeal(ell, counts)


def kschur(mu: Iterable[int], k: int, evaluator: Evaluator = catalan_chl) -> SymFunc:
    """``H(Delta^k(mu); mu)``; ``mu`` may be any weight in the generalized index set."""
    mu = tuple(mu)
    if not mu:
        return SymFunc.one()
    return evaluator(IndexedRootIdeal(delta_k(mu, k), mu))


def expansion_to_symfunc(
    expansion: KExpansion, evaluator: Evaluator = catalan_chl
) -> SymFunc:
    result = SymFunc()
    for mu, coeff in expansion.items():
        result = result + kschur(mu, expansion.k, evaluator) * coeff
    return result


# Straightening -------------------------------------------------------------------------
def _constant_on(mu: Weight, a: int, b: int) -> bool:
    if a < 1 or b > len(mu):
        return False
    return len(set(mu[a - 1 : b])) <= 1


def _cvr_data(lam: Iterable[int], z: int, k: int):
    lam = bounded_partition(lam, k)
    ell = len(lam)
    if not 1 <= z <= ell:
        raise ValueError(f"Row {z} out of range for ell={ell}")
    mu = list(lam)
    mu[z - 1] -= 1
    mu = tuple(mu)
    psi = delta_k(mu, k)
    path = uppath(psi, z)
    c = len(path)
    h, y = 0, None
    if z < ell and lam[z - 1] == lam[z]:
        top = z + 1
        for _ in range(c):
            top = up(psi, top) if top is not None else None
        if top is not None:
            y = top - 1
            for candidate in range(1, ell - z + 1):
                intervals = [(z + 1, z + candidate), (y + 1, y + candidate)]
                intervals += [(x, x + candidate) for x in path[1:]]
                if all(_constant_on(mu, a, b) for a, b in intervals):
                    h = candidate
                else:
                    break
            if h == 0:
                y = None
    return lam, mu, psi, path, c, h, y


def cvr(lam: Iterable[int], z: int, k: int) -> CoverResult:
    """Straighten ``lam - e_z`` into ``t^bounce`` times a single k-Schur index.

    ``is_partition`` is false exactly when ``lam_{z+h} = lam_{z+h+1}``, in which
    case the k-Schur function of ``lam - e_z`` vanishes.
    """
    lam, mu, _, _, c, h, y = _cvr_data(lam, z, k)
    ell = len(lam)
    weight = list(lam)
    if h:
        for i in range(y + 1, y + h + 1):
            weight[i - 1] += 1
    for i in range(z, z + h + 1):
        weight[i - 1] -= 1
    below = lam[z + h] if z + h < ell else 0
    return CoverResult(weight=tuple(weight), bounce=h * c, is_partition=lam[z + h - 1] > below)


def straighten(lam: Iterable[int], z: int, k: int) -> KExpansion:
    """``s^(k)_{lam - e_z}`` as ``t^bounce s^(k)_{cvr}`` or zero."""
    result = cvr(lam, z, k)
    if not result.is_partition:
        return KExpansion(k)
    return KExpansion(k, {result.weight: TPoly.monomial(1, result.bounce)})


def straightening_intervals(lam: Iterable[int], z: int, k: int) -> list[tuple[int, int]]:
    """The intervals ``[x, x + h_x]`` for ``x`` in the uppath of ``z``."""
    lam, mu, psi, path, c, h, _ = _cvr_data(lam, z, k)
    ell = len(lam)
    below = lam[z + h] if z + h < ell else 0
    if lam[z + h - 1] > below:
        c_prime = -1
    else:
        c_prime = 0
        for i in range(1, c):
            rows = path[1 : i + 1]
            if all(
                x + h + 1 <= ell and mu[x + h - 1] == mu[x + h] for x in rows
            ):
                c_prime = i
            else:
                break
    return [
        (x, min(x + (h + 1 if s <= c_prime else h), ell)) for s, x in enumerate(path)
    ]


def straightening_admits(lam: Iterable[int], z: int, k: int, rows: Iterable[int]) -> bool:
    """Whether subset lowering over ``rows`` commutes with straightening ``lam - e_z``."""
    rows = set(rows)
    for a, b in straightening_intervals(lam, z, k):
        inside = [x in rows for x in range(a, b + 1)]
        if any(inside) and not all(inside):
            return False
    return True


def downpath_straighten(lam: Iterable[int], k: int, m: int) -> KExpansion:
    """``sum over z in downpath(m)`` of ``t^{B(m, z)}`` times the straightened ``lam - e_z``."""
    lam = bounded_partition(lam, k)
    phi = delta_k(lam, k)
    result = KExpansion(k)
    for z in downpath(phi, m):
        result = result + straighten(lam, z, k) * TPoly.monomial(1, bounce(phi, m, z))
    return result


# Pieri rules ---------------------------------------------------------------------------
def _collect(tableaux: Iterable[StrongMarkedTableau], k: int) -> KExpansion:
    return KExpansion(
        k, [(to_bounded(T.inside), TPoly.monomial(1, T.spin)) for T in tableaux]
    )


def vertical_pieri(mu: Iterable[int], k: int, d: int) -> KExpansion:
    """``e_d^perp s^(k)_mu`` summed over vertical strong marked tableaux of weight ``(d)``."""
    mu = bounded_partition(mu, k)
    return _collect(enumerate_tableaux(mu, k, (d,), vertical=True), k)


def horizontal_pieri(mu: Iterable[int], k: int, d: int) -> KExpansion:
    mu = bounded_partition(mu, k)
    return _collect(enumerate_tableaux(mu, k, (d,), vertical=False), k)


def partial_restriction(mu: Iterable[int], k: int, d: int, m: int) -> KExpansion:
    """Vertical tableaux of weight ``(d)`` whose marks all lie in ``[1, m]``."""
    mu = bounded_partition(mu, k)
    tableaux = enumerate_tableaux(mu, k, (d,), vertical=True)
    return _collect((T for T in tableaux if all(r <= m for r in T.marks)), k)


def restriction_difference(mu: Iterable[int], k: int, d: int, m: int) -> KExpansion:
    """Vertical tableaux of weight ``(d)`` whose largest mark is exactly ``m``."""
    mu = bounded_partition(mu, k)
    tableaux = enumerate_tableaux(mu, k, (d,), vertical=True)
    return _collect((T for T in tableaux if T.marks and max(T.marks) == m), k)


def subset_lower_kschur(mu: Iterable[int], k: int, d: int, m: int) -> SymFunc:
    """Subset lowering over ``[1, m]`` applied to ``(Delta^k(mu), mu)``."""
    mu = tuple(mu)
    return subset_lower(d, range(1, m + 1), IndexedRootIdeal(delta_k(mu, k), mu))


# Branching and Schur expansion -----------------------------------------------------------
def branch(mu: Iterable[int], k: int, ell: Optional[int] = None) -> KExpansion:
    """Expand ``s^(k)_mu`` in the ``(k+1)``-Schur basis."""
    mu = bounded_partition(mu, k, ell)
    shifted = tuple(m + 1 for m in mu)
    tableaux = enumerate_tableaux(shifted, k + 1, (len(mu),), vertical=True)
    return _collect(tableaux, k + 1)


def schur_expand(
    mu: Iterable[int], k: int, ell: Optional[int] = None, method: str = "tableaux"
) -> SymFunc:
    """Schur expansion of ``s^(k)_mu``; every coefficient lies in ``N[t]``.

    ``method="tableaux"`` sums ``t^spin s_inside`` over vertical tableaux of
    weight ``(ell^m)`` on ``mu + m^ell`` with ``m = max(|mu| - k, 0)``.
    ``method="branching"`` branches repeatedly until ``k >= |mu|``.
    """
    mu = bounded_partition(mu, k, ell)
    ell = len(mu)
    if method == "tableaux":
        m = max(sum(mu) - k, 0)
        shifted = tuple(part + m for part in mu)
        tableaux = enumerate_tableaux(shifted, k + m, (ell,) * m, vertical=True)
        return SymFunc(
            [(to_bounded(T.inside), TPoly.monomial(1, T.spin)) for T in tableaux]
        )
    if method == "branching":
        expansion = KExpansion(k, {mu: 1})
        while expansion.k < sum(mu):
            step = KExpansion(expansion.k + 1)
            for nu, coeff in expansion.items():
                step = step + branch(nu, expansion.k, ell) * coeff
            expansion = step
        return SymFunc(list(expansion.items()))
    raise ValueError(f"Unknown expansion method {method}")


# Weight polynomials -------------------------------------------------------------------
def smt_weight_poly(mu: Iterable[int], k: int, eta: Iterable[int]) -> TPoly:
    mu = bounded_partition(mu, k)
    return sum(
        (TPoly.monomial(1, T.spin) for T in enumerate_tableaux(mu, k, tuple(eta))),
        TPoly(),
    )


def vsmt_weight_poly(mu: Iterable[int], k: int, eta: Iterable[int]) -> TPoly:
    mu = bounded_partition(mu, k)
    return sum(
        (
            TPoly.monomial(1, T.spin)
            for T in enumerate_tableaux(mu, k, tuple(eta), vertical=True)
        ),
        TPoly(),
    )


# Strong cover operators ------------------------------------------------------------------
def cover_operator(expansion: KExpansion, r: int) -> KExpansion:
    """``u_r``: remove one strong cover marked ``r`` from each basis element."""
    k = expansion.k
    result = KExpansion(k)
    for mu, coeff in expansion.items():
        tableaux = enumerate_tableaux(mu, k, (1,))
        result = result + _collect((T for T in tableaux if T.marks == (r,)), k) * coeff
    return result


def _apply_words(expansion: KExpansion, words) -> KExpansion:
    result = KExpansion(expansion.k)
    for word in words:
        value = expansion
        for r in word:
            value = cover_operator(value, r)
            if not value:
                break
        result = result + value
    return result


def e_tilde(d: int, expansion: KExpansion, ell: int) -> KExpansion:
    """Sum of ``u_{i_1} ... u_{i_d}`` over ``i_1 > ... > i_d``, applied left to right."""
    words = combinations(range(ell, 0, -1), d)
    return _apply_words(expansion, words)


def h_tilde(d: int, expansion: KExpansion, ell: int) -> KExpansion:
    """Sum of ``u_{i_1} ... u_{i_d}`` over ``i_1 <= ... <= i_d``, applied left to right."""
    words = combinations_with_replacement(range(1, ell + 1), d)
    return _apply_words(expansion, words)


def alternating_cover_sum(m: int, expansion: KExpansion, ell: int) -> KExpansion:
    """``sum_i (-1)^i h~_{m-i} e~_i``; vanishes for ``m > 0``."""
    result = KExpansion(expansion.k)
    for i in range(m + 1):
        term = e_tilde(i, h_tilde(m - i, expansion, ell), ell)
        result = result + (term if i % 2 == 0 else -term)
    return result


# Skew-linking diagrams ---------------------------------------------------------------------
def skew_linking_check(skew: SkewDiagram) -> bool:
    """Row lengths and column lengths of the skew shape are both partitions."""
    return is_partition(skew.row_lengths) and is_partition(skew.column_lengths)


def chen_ideal(skew: SkewDiagram) -> RootIdeal:
    """The root ideal with removable roots ``(i, mu_{eta_i} + i)`` for ``i <= len(eta)``."""
    if not skew_linking_check(skew):
        raise ValueError(f"{skew.outer}/{skew.inner} is not a skew-linking diagram")
    ell = len(skew.outer)
    columns = skew.column_lengths
    counts = []
    for i in range(1, ell + 1):
        if i <= len(skew.inner):
            first = columns[skew.inner[i - 1] - 1] + i
            counts.append(max(0, min(ell - i, ell + 1 - first)))
        else:
            counts.append(0)
    return RootIdeal(ell, tuple(counts))


# Hall-Littlewood basis -------------------------------------------------------------------
def hl_expand(f: SymFunc, k: int, ell: int) -> dict[Partition, TPoly]:
    """Coefficients of ``f`` on ``{chl(lam) : lam_1 <= k, len(lam) <= ell}``.

    ``chl(lam)`` is ``s_lam`` plus terms dominating ``lam``, so eliminating from
    the lexicographically smallest partition upward never divides.
    """
    residual = f
    coeffs: dict[Partition, TPoly] = {}
    for degree in sorted(f.degrees()):
        for lam in reversed(list(partitions(degree))):
            c = residual.coefficient(lam)
            if not c:
                continue
            if (lam and lam[0] > k) or len(lam) > ell:
                raise NotInSpanError(
                    residual, f"s{list(lam)} survives outside the span for k={k}, ell={ell}"
                )
            coeffs[lam] = c
            residual = residual - chl(lam) * c
    if residual:
        raise NotInSpanError(residual, f"Residual {residual} left after elimination")
    logger.debug(f"hl_expand: {len(coeffs)} basis elements for k={k}, ell={ell}")
    return coeffs
