"""Hall-Littlewood vertex operators and compositional Hall-Littlewood functions."""

from functools import lru_cache
from typing import Iterable

from ._symfunc import _remove_horizontal_strips, schur_straighten
from .base import Partition, SymFunc, TPoly


@lru_cache(maxsize=None)
def _jing_on_schur(m: int, lam: Partition) -> SymFunc:
    # B_m = sum_j t^j S_{m+j} h_j^perp, and S_n s_mu = s_{(n, mu)}
    terms = []
    for j in range(sum(lam) + 1):
        for mu in _remove_horizontal_strips(lam, j):
            straight = schur_straighten((m + j,) + mu)
            if straight is None:
                continue
            sign, nu = straight
            terms.append((nu, TPoly.monomial(sign, j)))
    return SymFunc(terms)


def jing_b(m: int, f: SymFunc) -> SymFunc:
    """Apply the vertex operator ``B_m`` to ``f``.

    ``B_m f = sum_{i,j >= 0} (-1)^i t^j h_{m+i+j} e_i^perp h_j^perp f``. The sum over
    ``i`` is Bernstein's operator ``S_{m+j}``, which prepends a row and straightens,
    so each Schur term costs one straightening per horizontal strip.
    """
    terms = []
    for lam, c in f.items():
        for nu, d in _jing_on_schur(m, lam).items():
            terms.append((nu, d * c))
    return SymFunc(terms)


@lru_cache(maxsize=None)
def _chl(gamma: tuple[int, ...]) -> SymFunc:
    if not gamma:
        return SymFunc.one()
    return jing_b(gamma[0], _chl(gamma[1:]))


def chl(gamma: Iterable[int]) -> SymFunc:
    """Compositional Hall-Littlewood function ``B_{gamma_1} ... B_{gamma_ell} . 1``."""
    return _chl(tuple(int(g) for g in gamma))


def jing_word(word: Iterable[int], f: SymFunc) -> SymFunc:
    """Apply ``B_{m_1} B_{m_2} ... B_{m_r}`` to ``f``, rightmost operator first."""
    for m in reversed(tuple(word)):
        f = jing_b(m, f)
    return f
