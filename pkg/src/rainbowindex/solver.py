"""Exact rainbow-index computation by iterative-deepening search.

For palettes c = lower bound, lower bound + 1, ... the solver runs a
backtracking search over canonical edge colorings (color t+1 may appear
only after color t has), so exactly one representative per
color-permutation class is visited.  Edges are assigned in BFS order
from vertex 0, and partial assignments are pruned with an optimistic
check that treats uncolored edges as uniquely colored; that relaxation
never understates feasibility, so pruning is sound.  The first palette
admitting a valid coloring is the exact index, because all smaller
palettes were exhausted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil
from typing import Optional

from .graphs import Graph, is_connected
from .rainbow import EdgeColoring, partial_failure
from .steiner import all_pairs_distances, diameter, sdiam3

DEFAULT_BUDGET = 10**8


class BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    When exact, ``value`` is the index and ``witness`` a verified
    coloring achieving it.  On budget exhaustion ``value`` is None and
    [lower, upper] brackets the index: lower counts the palettes proven
    infeasible, upper comes from the trivial all-distinct coloring (or a
    caller-supplied bound), and ``witness`` is that fallback coloring.
    """

    value: Optional[int]
    witness: Optional[EdgeColoring]
    nodes_explored: int
    lower_bound_used: int
    exact: bool
    lower: int
    upper: int


def lower_bound(g: Graph, k: int) -> int:
    """Steiner-diameter lower bound on the k-rainbow index (k=2: the
    diameter; k=3: sdiam3).  Vacuous small graphs fall back to what the
    vertex count supports."""
    if k not in (2, 3):
        raise ValueError(f"k must be 2 or 3, got {k}")
    if not is_connected(g):
        raise ValueError("lower_bound requires a connected graph")
    if g.n < 2:
        return 0
    if k == 3 and g.n >= 3:
        return sdiam3(g)
    return diameter(g)


def bfs_edge_order(g: Graph) -> list[int]:
    """Edge indices ordered by BFS from vertex 0, so early edges cluster
    in one region and partial-infeasibility pruning bites sooner."""
    order: list[int] = []
    seen_edge = [False] * g.m
    visited = [False] * g.n
    visited[0] = True
    queue = [0]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for e, w in g.incidence[u]:
            if not seen_edge[e]:
                seen_edge[e] = True
                order.append(e)
            if not visited[w]:
                visited[w] = True
                queue.append(w)
    return order


def canonicalize_colors(colors: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel colors by first appearance, producing the canonical
    representative of the color-permutation class."""
    relabel: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return tuple(out)


def _hard_triples_first(g: Graph) -> list[tuple[int, int, int]]:
    """Triples sorted by decreasing Steiner distance: the hardest sets
    fail first, so pruning checks exit early."""
    if g.n < 3:
        return []
    d = all_pairs_distances(g)
    trips = list(combinations(range(g.n), 3))
    trips.sort(key=lambda t: -(d[t[0]] + d[t[1]] + d[t[2]]).min())
    return trips


def _search_palette(
    g: Graph,
    k: int,
    palette: int,
    order: list[int],
    triple_order: list[tuple[int, int, int]],
    counter: list[int],
    budget: int,
) -> Optional[list[int]]:
    """Backtracking search for a canonical k-rainbow coloring with the
    given palette.  Returns colors by edge index, or None if exhausted.
    Raises BudgetExhausted when the node budget runs out.
    """
    m = g.m
    colors: list[Optional[int]] = [None] * m
    stride = max(1, ceil(m / 4))

    def dfs(pos: int, maxc: int) -> bool:
        e = order[pos]
        depth = pos + 1
        limit = min(maxc + 1, palette - 1)
        for t in range(limit + 1):
            counter[0] += 1
            if counter[0] > budget:
                raise BudgetExhausted()
            colors[e] = t
            if depth == m or depth % stride == 0:
                bad = partial_failure(g, colors, k, triple_order)
            else:
                bad = None
            if bad is None:
                if depth == m:
                    return True
                if dfs(pos + 1, max(maxc, t)):
                    return True
        colors[e] = None
        return False

    if m == 0:
        return []
    if dfs(0, -1):
        assert None not in colors  # a successful leaf assigned every edge
        return colors
    return None


def rx_exact(
    g: Graph,
    k: int = 3,
    budget: int = DEFAULT_BUDGET,
    known_upper: Optional[int] = None,
) -> SolveResult:
    """Exact k-rainbow index with a witness coloring.

    Iterative deepening over the palette size starting at the Steiner
    lower bound; always terminates at palette m, where the all-distinct
    coloring makes every tree rainbow.  A graph too small to have any
    k-set is vacuously colorable with one color.
    """
    if k not in (2, 3):
        raise ValueError(f"k must be 2 or 3, got {k}")
    if not is_connected(g):
        raise ValueError("rx_exact requires a connected graph")
    if g.m == 0:
        return SolveResult(0, EdgeColoring((), 0), 0, 0, True, 0, 0)

    lb = max(1, lower_bound(g, k))
    order = bfs_edge_order(g)
    triple_order = _hard_triples_first(g) if k == 3 else []
    counter = [0]
    proven = lb
    for c in range(lb, g.m + 1):
        try:
            found = _search_palette(g, k, c, order, triple_order, counter, budget)
        except BudgetExhausted:
            upper = min(known_upper, g.m) if known_upper is not None else g.m
            fallback = EdgeColoring(tuple(range(g.m)), g.m)
            return SolveResult(
                None, fallback, counter[0], lb, False, proven, upper
            )
        if found is not None:
            witness = EdgeColoring(tuple(found), c)
            return SolveResult(c, witness, counter[0], lb, True, c, c)
        proven = c + 1
    raise AssertionError("palette m admits the all-distinct coloring")
