"""Schur-basis arithmetic: straightening, Pieri rules, perp operators, pairing and omega."""

from functools import lru_cache
from typing import Iterable, Optional

from .base import Partition, SymFunc, TPoly, conjugate, strip


def schur_straighten(gamma: Iterable[int]) -> Optional[tuple[int, Partition]]:
    """Straighten ``s_gamma`` for an arbitrary integer weight.

    Returns ``None`` when ``gamma + rho`` has a negative or a repeated entry,
    otherwise the sign of the sorting permutation and ``sort(gamma + rho) - rho``.
    """
    gamma = tuple(gamma)
    ell = len(gamma)
    shifted = [g + ell - 1 - i for i, g in enumerate(gamma)]
    if any(v < 0 for v in shifted) or len(set(shifted)) != ell:
        return None
    inversions = sum(
        1
        for i in range(ell)
        for j in range(i + 1, ell)
        if shifted[i] < shifted[j]
    )
    ordered = sorted(shifted, reverse=True)
    return (-1 if inversions % 2 else 1, strip(v - (ell - 1 - i) for i, v in enumerate(ordered)))


def straightened(gamma: Iterable[int], coeff=1) -> SymFunc:
    """``coeff * s_gamma`` written in the Schur basis."""
    result = schur_straighten(gamma)
    if result is None:
        return SymFunc()
    sign, lam = result
    return SymFunc({lam: TPoly.coerce(coeff) * sign})


# Strips ------------------------------------------------------------------------------
@lru_cache(maxsize=None)
def _add_horizontal_strips(lam: Partition, n: int) -> tuple[Partition, ...]:
    rows = list(lam) + [0]
    out = []

    def _fill(i, left, acc):
        if i == len(rows):
            if left == 0:
                out.append(strip(acc))
            return
        upper = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for extra in range(upper, -1, -1):
            _fill(i + 1, left - extra, acc + [rows[i] + extra])

    _fill(0, n, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _add_vertical_strips(lam: Partition, n: int) -> tuple[Partition, ...]:
    rows = list(lam) + [0] * n
    out = []

    def _fill(i, left, acc):
        if left == 0:
            out.append(strip(acc + rows[i:]))
            return
        if i == len(rows):
            return
        for extra in (1, 0):
            if extra > left:
                continue
            value = rows[i] + extra
            if i > 0 and value > acc[-1]:
                continue
            _fill(i + 1, left - extra, acc + [value])

    _fill(0, n, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _remove_horizontal_strips(lam: Partition, d: int) -> tuple[Partition, ...]:
    rows = list(lam)
    out = []

    def _fill(i, left, acc):
        if i == len(rows):
            if left == 0:
                out.append(strip(acc))
            return
        floor = rows[i + 1] if i + 1 < len(rows) else 0
        for removed in range(min(left, rows[i] - floor), -1, -1):
            _fill(i + 1, left - removed, acc + [rows[i] - removed])

    _fill(0, d, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _remove_vertical_strips(lam: Partition, d: int) -> tuple[Partition, ...]:
    rows = list(lam)
    out = []

    def _fill(i, left, acc):
        if left == 0:
            if acc and i < len(rows) and rows[i] > acc[-1]:
                return
            out.append(strip(acc + rows[i:]))
            return
        if i == len(rows):
            return
        for removed in (1, 0):
            value = rows[i] - removed
            if removed > left or (acc and value > acc[-1]):
                continue
            _fill(i + 1, left - removed, acc + [value])

    _fill(0, d, [])
    return tuple(out)


def _apply(f: SymFunc, strips) -> SymFunc:
    terms = []
    for lam, c in f.items():
        for mu in strips(lam):
            terms.append((mu, c))
    return SymFunc(terms)


def h_multiply(n: int, f: SymFunc) -> SymFunc:
    """Multiply by ``h_n`` (horizontal-strip Pieri rule); ``h_n = 0`` for ``n < 0``."""
    if n < 0:
        return SymFunc()
    return _apply(f, lambda lam: _add_horizontal_strips(lam, n))


def e_multiply(n: int, f: SymFunc) -> SymFunc:
    if n < 0:
        return SymFunc()
    return _apply(f, lambda lam: _add_vertical_strips(lam, n))


def h_perp(d: int, f: SymFunc) -> SymFunc:
    """Adjoint of multiplication by ``h_d``: remove horizontal strips of size ``d``."""
    if d < 0:
        return SymFunc()
    return _apply(f, lambda lam: _remove_horizontal_strips(lam, d))


def e_perp(d: int, f: SymFunc) -> SymFunc:
    if d < 0:
        return SymFunc()
    return _apply(f, lambda lam: _remove_vertical_strips(lam, d))


def h_product(gamma: Iterable[int]) -> SymFunc:
    result = SymFunc.one()
    for g in reversed(tuple(gamma)):
        if g < 0:
            return SymFunc()
        result = h_multiply(g, result)
    return result


def hall_pair_h(f: SymFunc, lam: Iterable[int]) -> TPoly:
    """``<f, h_lam>``, the constant term of ``h_{lam_1}^perp h_{lam_2}^perp ... f``."""
    for part in strip(lam):
        f = h_perp(part, f)
    return f.coefficient(())


def hall_pair_e(f: SymFunc, lam: Iterable[int]) -> TPoly:
    for part in strip(lam):
        f = e_perp(part, f)
    return f.coefficient(())


def omega(f: SymFunc) -> SymFunc:
    return SymFunc({conjugate(lam): c for lam, c in f.items()})


def dominance_leq(a: Iterable[int], b: Iterable[int]) -> bool:
    """True when every prefix sum of ``b`` is at least the matching prefix sum of ``a``."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError(f"Dominance needs equal lengths, got {len(a)} and {len(b)}")
    total_a = total_b = 0
    for x, y in zip(a, b):
        total_a += x
        total_b += y
        if total_a > total_b:
            return False
    return True


def specialize(f: SymFunc, t: int) -> SymFunc:
    return f.map_coefficients(lambda c: TPoly((c.evaluate(t),)))


def is_schur_positive(f: SymFunc) -> bool:
    return all(c.is_nonnegative() for _, c in f.items())

