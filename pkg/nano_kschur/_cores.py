"""(k+1)-cores: the bijection with k-bounded partitions, offset sequences and strong marked tableaux."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

import networkx as nx

from ._utils import logger
from .base import (
    Core,
    OffsetView,
    Partition,
    SkewDiagram,
    StrongMarkedCover,
    StrongMarkedTableau,
    as_partition,
    conjugate,
    contains,
    strip,
)


def hook_lengths(shape: Iterable[int]) -> list[list[int]]:
    shape = as_partition(shape)
    conj = conjugate(shape)
    return [
        [row - c + conj[c] - r - 1 for c in range(row)]
        for r, row in enumerate(shape)
    ]


def is_core(shape: Iterable[int], n: int) -> bool:
    return all(h != n for row in hook_lengths(shape) for h in row)


def to_bounded(kappa: Core) -> Partition:
    """Row ``r`` counts the boxes of row ``r`` of ``kappa`` with hook length at most ``k``."""
    return strip(
        sum(1 for h in row if h <= kappa.k) for row in hook_lengths(kappa.shape)
    )


@lru_cache(maxsize=None)
def _to_core(lam: Partition, k: int) -> Partition:
    rows = [0] * len(lam)
    for i in range(len(lam) - 1, -1, -1):
        shift = 0
        while lam[i] + sum(1 for j in range(i + 1, len(lam)) if rows[j] >= shift + 1) > k:
            shift += 1
        rows[i] = lam[i] + shift
    return tuple(rows)


def to_core(lam: Iterable[int], k: int) -> Core:
    """The unique ``(k+1)``-core whose bounded partition is ``lam``, built from the bottom row up."""
    lam = as_partition(lam)
    if lam and lam[0] > k:
        raise ValueError(f"{lam} has a part larger than k={k}")
    return Core(_to_core(lam, k), k + 1)


def k_skew(lam: Iterable[int], k: int) -> SkewDiagram:
    """Boxes of ``core(lam)`` with hook length at most ``k``; row ``r`` has ``lam_r`` of them."""
    lam = as_partition(lam)
    kappa = to_core(lam, k)
    inner = tuple(kappa.shape[i] - lam[i] for i in range(len(lam)))
    return SkewDiagram(kappa.shape, strip(inner))


# Edge and offset sequences ---------------------------------------------------------
def row_map(kappa: Core, z: int) -> int:
    """Diagonal of the north step on the east border of row ``z``: ``kappa_z - z + 1``."""
    if z < 1:
        raise ValueError(f"Row index must be positive, got {z}")
    return kappa.row(z) - z + 1


def _beads(shape: Partition) -> frozenset[int]:
    return frozenset(row - z + 1 for z, row in enumerate(shape, start=1))


def _is_bead(shape: Partition, beads: frozenset[int], i: int) -> bool:
    return i <= -len(shape) or i in beads


def edge_sequence(kappa: Core, lo: int, hi: int) -> tuple[int, ...]:
    """Bits ``p_lo .. p_hi`` of the border word; ``p_{f(z)} = 1`` marks the north step of row ``z``."""
    beads = _beads(kappa.shape)
    return tuple(1 if _is_bead(kappa.shape, beads, i) else 0 for i in range(lo, hi + 1))


@lru_cache(maxsize=None)
def offsets(kappa: Core) -> OffsetView:
    """Extended offset sequence on a window covering every row of ``kappa`` plus one period."""
    n = kappa.n
    shape = kappa.shape
    beads = _beads(shape)
    bottom = -len(shape)
    lo = bottom - n
    hi = (shape[0] if shape else 0) + n
    values = []
    for i in range(lo, hi + 1):
        j = (bottom - i) // n
        while _is_bead(shape, beads, i + n * j):
            j += 1
        values.append(j)
    return OffsetView(core=kappa, lo=lo, hi=hi, d=tuple(values))


def _core_from_beads(bead_window: list[int], n: int) -> Core:
    ordered = sorted(bead_window, reverse=True)
    rows = [b + z - 1 for z, b in enumerate(ordered, start=1)]
    return Core(strip(rows), n)


def reflect(kappa: Core, r: int, s: int) -> Core:
    """Apply ``t_{r,s}``: swap the border bits ``p_{r+in}`` and ``p_{s+in}`` for every ``i``."""
    n = kappa.n
    if not r < s or (s - r) % n == 0:
        raise ValueError(f"t_{{{r},{s}}} is not a reflection for n={n}")
    gap = s - r
    shape = kappa.shape
    beads = _beads(shape)
    top = shape[0] if shape else 0
    lo = min(-len(shape), r, s) - gap - n
    hi = max(top + 1, r, s) + gap + n
    new_beads = []
    for x in range(lo, hi + 1):
        if (x - r) % n == 0:
            source = x + gap
        elif (x - s) % n == 0:
            source = x - gap
        else:
            source = x
        if _is_bead(shape, beads, source):
            new_beads.append(x)
    return _core_from_beads(new_beads, n)


# Strong covers -----------------------------------------------------------------------
@dataclass(frozen=True)
class Component:
    head: int
    height: int
    cells: frozenset


def is_strong_cover(tau: Core, kappa: Core) -> bool:
    return (
        tau.n == kappa.n
        and contains(kappa.shape, tau.shape)
        and sum(to_bounded(tau)) + 1 == sum(to_bounded(kappa))
    )


def _check_cover(tau: Core, kappa: Core):
    if not is_strong_cover(tau, kappa):
        raise ValueError(f"{tau.shape} => {kappa.shape} is not a strong cover for n={kappa.n}")


@lru_cache(maxsize=None)
def components(tau: Core, kappa: Core) -> tuple[Component, ...]:
    """Connected components of ``kappa / tau``, ordered by head row."""
    inner = tau.shape + (0,) * (len(kappa.shape) - len(tau.shape))
    cells = [
        (r, c)
        for r, row in enumerate(kappa.shape, start=1)
        for c in range(inner[r - 1] + 1, row + 1)
    ]
    graph = nx.Graph()
    graph.add_nodes_from(cells)
    cell_set = set(cells)
    for r, c in cells:
        for neighbour in ((r + 1, c), (r, c + 1)):
            if neighbour in cell_set:
                graph.add_edge((r, c), neighbour)
    found = []
    for group in nx.connected_components(graph):
        rows = {r for r, _ in group}
        found.append(Component(head=min(rows), height=len(rows), cells=frozenset(group)))
    return tuple(sorted(found, key=lambda comp: comp.head))


def markings(tau: Core, kappa: Core) -> tuple[int, ...]:
    """Allowed marks of ``tau => kappa``: the head rows of the components of ``kappa / tau``."""
    _check_cover(tau, kappa)
    return tuple(comp.head for comp in components(tau, kappa))


def cover_spin(tau: Core, kappa: Core, mark: int) -> int:
    comps = components(tau, kappa)
    if mark not in {comp.head for comp in comps}:
        raise ValueError(f"{mark} is not a marking of {tau.shape} => {kappa.shape}")
    height = comps[0].height
    below = sum(1 for comp in comps if comp.head > mark)
    return len(comps) * (height - 1) + below


def marked_cover(tau: Core, kappa: Core, mark: int) -> StrongMarkedCover:
    _check_cover(tau, kappa)
    return StrongMarkedCover(tau=tau, kappa=kappa, mark=mark, spin=cover_spin(tau, kappa, mark))


def spin(cover: StrongMarkedCover) -> int:
    """``c (h - 1) + N`` for ``c`` components of height ``h``, ``N`` of them below the mark."""
    return cover_spin(cover.tau, cover.kappa, cover.mark)


def covers_by_offsets(kappa: Core, r: int, s: int) -> bool:
    """Whether ``t_{r,s} kappa => kappa``, read off the offset sequence."""
    d = offsets(kappa)
    if not s - kappa.n < r < s:
        return False
    if d[r] >= d[s]:
        return False
    return all(not d[r] <= d[i] <= d[s] for i in range(r + 1, s))


@lru_cache(maxsize=None)
def strong_covers(kappa: Core) -> tuple[Core, ...]:
    """Every ``tau`` with ``tau => kappa``; one period of ``r`` covers every reflection."""
    n = kappa.n
    found = set()
    for r in range(0, n):
        for s in range(r + 1, r + n):
            if covers_by_offsets(kappa, r, s):
                found.add(reflect(kappa, r, s))
    return tuple(sorted(found, key=lambda c: c.shape))


def _subshapes(shape: Partition):
    def _gen(i, bound):
        if i == len(shape):
            yield ()
            return
        for part in range(min(bound, shape[i]), -1, -1):
            for rest in _gen(i + 1, part):
                yield (part,) + rest

    for sub in _gen(0, shape[0] if shape else 0):
        yield strip(sub)


def brute_force_covers(kappa: Core) -> tuple[Core, ...]:
    """Every ``tau => kappa`` found by scanning all subshapes of ``kappa``."""
    target = sum(to_bounded(kappa)) - 1
    found = []
    for sub in _subshapes(kappa.shape):
        if is_core(sub, kappa.n):
            tau = Core(sub, kappa.n)
            if sum(to_bounded(tau)) == target:
                found.append(tau)
    return tuple(sorted(found, key=lambda c: c.shape))


def southwest_row(tau: Core, kappa: Core) -> int:
    """Head row of the southwestmost component of ``kappa / tau``."""
    return components(tau, kappa)[-1].head


def cover_z(kappa: Core, z: int) -> Optional[Core]:
    """The cover ``tau => kappa`` whose southwestmost component starts in row ``z``, if any."""
    if z < 1:
        raise ValueError(f"Row index must be positive, got {z}")
    lam = to_bounded(kappa)
    if z > len(lam) or lam[z - 1] == 0:
        return None
    n = kappa.n
    d = offsets(kappa)
    s = row_map(kappa, z)
    r = None
    for i in range(s - 1, s - n, -1):
        if 0 <= d[i] <= d[s]:
            r = i
            break
    if r is None or d[r] != 0:
        return None
    return reflect(kappa, r, s)


# Tableaux ------------------------------------------------------------------------
@lru_cache(maxsize=None)
def _marked_covers_below(kappa: Core) -> tuple[StrongMarkedCover, ...]:
    out = []
    for z in range(1, len(to_bounded(kappa)) + 1):
        tau = cover_z(kappa, z)
        if tau is None:
            continue
        for mark in markings(tau, kappa):
            out.append(marked_cover(tau, kappa, mark))
    return tuple(out)


def _blocks(eta: tuple[int, ...]) -> list[int]:
    """Block number of each cover position ``1..|eta|`` (index 0 unused)."""
    owner = [0]
    for b, size in enumerate(eta):
        owner.extend([b] * size)
    return owner


def enumerate_tableaux(
    mu: Iterable[int], k: int, eta: Iterable[int], vertical: bool = False
) -> list[StrongMarkedTableau]:
    """All (vertical) strong marked tableaux of weight ``eta`` and outside ``mu``.

    Within each block of ``eta`` the marks weakly decrease, or strictly increase
    when ``vertical``. Sorted by the ``(southwest row, mark)`` pairs read from
    the outside in.
    """
    mu = as_partition(mu)
    eta = strip(eta)
    if any(e < 0 for e in eta):
        raise ValueError(f"Weight {eta} has a negative entry")
    outside = to_core(mu, k)
    total = sum(eta)
    owner = _blocks(eta)
    # how many positions of the same block sit below position i
    depth = [0] * (total + 1)
    for i in range(2, total + 1):
        depth[i] = depth[i - 1] + 1 if owner[i] == owner[i - 1] else 0

    found = []

    def _descend(i, kappa, chain):
        if i == 0:
            found.append(tuple(reversed(chain)))
            return
        upper = chain[-1].mark if chain and owner[i] == owner[i + 1] else None
        for cover in _marked_covers_below(kappa):
            if upper is not None:
                if vertical and not cover.mark < upper:
                    continue
                if not vertical and not cover.mark >= upper:
                    continue
            if vertical and cover.mark <= depth[i]:
                continue
            _descend(i - 1, cover.tau, chain + [cover])

    _descend(total, outside, [])
    tableaux = [
        StrongMarkedTableau(outside=outside, covers=covers, eta=eta, vertical=vertical)
        for covers in found
    ]
    tableaux.sort(key=_canonical_key)
    logger.debug(
        f"enumerate_tableaux: {len(tableaux)} tableaux for mu={mu}, k={k}, eta={eta}, vertical={vertical}"
    )
    return tableaux


def _canonical_key(tableau: StrongMarkedTableau):
    return tuple(
        (southwest_row(c.tau, c.kappa), c.mark) for c in reversed(tableau.covers)
    )


def render_tableau(tableau: StrongMarkedTableau) -> str:
    """Filled diagram: cells added by cover ``i`` read ``i``, the last one in the marked row starred."""
    outside = tableau.outside.shape
    grid = [["."] * row for row in outside]
    for index, cover in enumerate(tableau.covers, start=1):
        inner = cover.tau.shape
        for r, row in enumerate(cover.kappa.shape):
            start = inner[r] if r < len(inner) else 0
            for c in range(start, row):
                grid[r][c] = str(index)
        r = cover.mark - 1
        grid[r][cover.kappa.shape[r] - 1] = f"{index}*"
    width = max((len(cell) for row in grid for cell in row), default=1)
    return "\n".join(" ".join(cell.rjust(width) for cell in row) for row in grid)
