"""Root-ideal combinatorics: removable and addable roots, the bounce graph and its paths."""

from typing import Optional

import networkx as nx

from .base import (
    BounceQuery,
    BounceStep,
    Root,
    RootIdeal,
    StructurePredicates,
    Weight,
)


def removable_roots(psi: RootIdeal) -> set[Root]:
    return {
        (r, psi.first_col(r))
        for r in range(1, psi.ell + 1)
        if psi.rowcount(r) > 0 and psi.rowcount(r + 1) < psi.rowcount(r)
    }


def addable_roots(psi: RootIdeal) -> set[Root]:
    out = set()
    for r in range(1, psi.ell + 1):
        col = psi.ell - psi.rowcount(r)
        above = psi.rowcount(r - 1) if r > 1 else psi.ell
        if col > r and above >= psi.rowcount(r) + 1:
            out.add((r, col))
    return out


def down(psi: RootIdeal, r: int) -> Optional[int]:
    for row, col in removable_roots(psi):
        if row == r:
            return col
    return None


def up(psi: RootIdeal, r: int) -> Optional[int]:
    for row, col in removable_roots(psi):
        if col == r:
            return row
    return None


def bounce_graph(psi: RootIdeal) -> nx.DiGraph:
    """Rows ``1..ell`` with an edge ``r -> down(r)`` for every removable root ``(r, down(r))``."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, psi.ell + 1))
    for row, col in sorted(removable_roots(psi)):
        graph.add_edge(row, col, root=(row, col))
    return graph


def bounce_steps(psi: RootIdeal) -> list[BounceStep]:
    steps = []
    for row, col in sorted(removable_roots(psi)):
        steps.append(BounceStep("down", row, col))
        steps.append(BounceStep("up", col, row))
    return steps


def downpath(psi: RootIdeal, r: int) -> tuple[int, ...]:
    graph = bounce_graph(psi)
    path = [r]
    while graph.out_degree(path[-1]):
        path.append(next(iter(graph.successors(path[-1]))))
    return tuple(path)


def uppath(psi: RootIdeal, r: int) -> tuple[int, ...]:
    graph = bounce_graph(psi)
    path = [r]
    while graph.in_degree(path[-1]):
        path.append(next(iter(graph.predecessors(path[-1]))))
    return tuple(path)


def chain_top(psi: RootIdeal, r: int) -> int:
    return uppath(psi, r)[-1]


def chain_bottom(psi: RootIdeal, r: int) -> int:
    return downpath(psi, r)[-1]


def bounce_query(psi: RootIdeal, a: int, b: int) -> Optional[BounceQuery]:
    """The bounce path from ``a`` down to ``b`` and its number of edges, if ``b`` lies below ``a``."""
    if not 1 <= a <= b <= psi.ell:
        raise ValueError(f"Need 1 <= a <= b <= {psi.ell}, got a={a}, b={b}")
    graph = bounce_graph(psi)
    if not nx.has_path(graph, a, b):
        return None
    path = tuple(nx.shortest_path(graph, a, b))
    return BounceQuery(path=path, bounce=len(path) - 1)


def bpath(psi: RootIdeal, a: int, b: int) -> tuple[int, ...]:
    query = bounce_query(psi, a, b)
    if query is None:
        raise ValueError(f"Row {b} is not on the downpath of row {a}")
    return query.path


def bounce(psi: RootIdeal, a: int, b: int) -> int:
    return len(bpath(psi, a, b)) - 1


def has_wall(psi: RootIdeal, r: int) -> bool:
    return 1 <= r < psi.ell and psi.rowcount(r) == psi.rowcount(r + 1)


def has_ceiling(psi: RootIdeal, c: int) -> bool:
    return 1 <= c < psi.ell and psi.column_length(c) == psi.column_length(c + 1)


def has_mirror(psi: RootIdeal, r: int) -> bool:
    removable = removable_roots(psi)
    return any(
        row == r and col > r + 1 and (r + 1, col + 1) in removable
        for row, col in removable
    )


def structure_predicates(psi: RootIdeal, index: int) -> StructurePredicates:
    if not 1 <= index < psi.ell:
        raise ValueError(f"Index {index} out of range for ell={psi.ell}")
    return StructurePredicates(
        wall=has_wall(psi, index),
        ceiling=has_ceiling(psi, index),
        mirror=has_mirror(psi, index),
    )


def walls(psi: RootIdeal) -> list[int]:
    return [r for r in range(1, psi.ell) if has_wall(psi, r)]


def ceilings(psi: RootIdeal) -> list[int]:
    return [c for c in range(1, psi.ell) if has_ceiling(psi, c)]


def mirrors(psi: RootIdeal) -> list[int]:
    return [r for r in range(1, psi.ell) if has_mirror(psi, r)]


def swap_roots(psi: RootIdeal, i: int) -> set[Root]:
    """Image of the roots of ``psi`` under the simple transposition of ``i`` and ``i+1``."""
    swap = {i: i + 1, i + 1: i}
    return {(swap.get(a, a), swap.get(b, b)) for a, b in psi.roots()}


def is_tau_invariant(psi: RootIdeal, i: int) -> bool:
    return swap_roots(psi, i) == psi.roots()


def sl2_partner(gamma: Weight, i: int) -> Weight:
    """``e_{i+1} - e_i + tau_i gamma``; pairs with ``gamma`` to cancel when ``psi`` is tau_i-invariant."""
    gamma = list(gamma)
    gamma[i - 1], gamma[i] = gamma[i] - 1, gamma[i - 1] + 1
    return tuple(gamma)


def all_root_ideals(ell: int) -> list[RootIdeal]:
    """Every root ideal in ``ell x ell``, listed by row counts in lexicographic order."""
    out = []

    def _fill(i, bound, counts):
        if i > ell:
            out.append(RootIdeal(ell, tuple(counts)))
            return
        for n in range(0, min(bound, ell - i) + 1):
            _fill(i + 1, n, counts + [n])

    _fill(1, ell, [])
    return out
