"""Shortest-path distances, Steiner distance of 3-sets, and sdiam3.

A minimum tree through three terminals is either a path through them or
a spider with one branch vertex, so its size is the minimum over all
centers v of d(v,a) + d(v,b) + d(v,c).  Everything here exploits that
identity; it does not hold for four or more terminals.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .graphs import Graph, is_connected


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Hop distances from source; math.inf for unreachable vertices."""
    dist = [float("inf")] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adjacency[u]:
            if dist[w] == float("inf"):
                dist[w] = du + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> np.ndarray:
    """n x n matrix of hop counts, np.inf sentinel for disconnected pairs."""
    d = np.full((g.n, g.n), np.inf)
    for s in range(g.n):
        d[s] = bfs_distances(g, s)
    return d


def diameter(g: Graph) -> int:
    """Largest pairwise distance; requires a connected graph."""
    if not is_connected(g):
        raise ValueError("diameter requires a connected graph")
    if g.n == 1:
        return 0
    return int(all_pairs_distances(g).max())


@dataclass(frozen=True)
class SteinerResult:
    """Minimum tree through three terminals.

    value: tree size in edges; witness: its edge set as normalized
    vertex pairs; center: the median vertex realizing the minimum.
    """

    value: int
    witness: tuple[tuple[int, int], ...]
    center: int


def _min_parents(g: Graph, source: int) -> tuple[list[float], list[int]]:
    """BFS distances plus, per vertex, the smallest-id neighbor one hop
    closer to the source (deterministic shortest-path tree)."""
    dist = bfs_distances(g, source)
    parent = [-1] * g.n
    for v in range(g.n):
        if v == source or dist[v] == float("inf"):
            continue
        parent[v] = min(w for w in g.adjacency[v] if dist[w] == dist[v] - 1)
    return dist, parent


def steiner_distance_3(g: Graph, terminals: Iterable[int]) -> SteinerResult:
    """Steiner distance of a 3-set, with a witness tree.

    Ties broken toward the smallest center id; witness paths follow the
    smallest-parent shortest-path tree from the center, so outputs are
    reproducible.
    """
    s = sorted(set(int(v) for v in terminals))
    if len(s) != 3:
        raise ValueError(f"need exactly 3 distinct terminals, got {s}")
    for v in s:
        if not (0 <= v < g.n):
            raise ValueError(f"terminal {v} out of range")
    if not is_connected(g):
        raise ValueError("Steiner distance requires a connected graph")

    dists = [bfs_distances(g, v) for v in s]
    best_center = -1
    best_sum = float("inf")
    for v in range(g.n):
        total = dists[0][v] + dists[1][v] + dists[2][v]
        if total < best_sum:
            best_sum = total
            best_center = v

    _, parent = _min_parents(g, best_center)
    edges: set[tuple[int, int]] = set()
    for v in s:
        while v != best_center:
            p = parent[v]
            edges.add((min(v, p), max(v, p)))
            v = p
    witness = tuple(sorted(edges))
    # At the minimizing center the three tree paths are edge-disjoint, so
    # the union size equals the distance sum.
    assert len(witness) == int(best_sum)
    return SteinerResult(len(witness), witness, best_center)


def sdiam3(g: Graph) -> int:
    """Maximum Steiner distance over all 3-sets of vertices."""
    if g.n < 3:
        raise ValueError(f"sdiam3 needs at least 3 vertices, got {g.n}")
    if not is_connected(g):
        raise ValueError("sdiam3 requires a connected graph")
    d = all_pairs_distances(g)
    n = g.n
    best = np.full((n, n, n), np.inf)
    for v in range(n):
        dv = d[v]
        np.minimum(
            best,
            dv[:, None, None] + dv[None, :, None] + dv[None, None, :],
            out=best,
        )
    idx = np.array(list(combinations(range(n), 3)))
    return int(best[idx[:, 0], idx[:, 1], idx[:, 2]].max())


def steiner_records(g: Graph) -> list[dict]:
    """Per-triple Steiner values as JSON-ready records, triples in
    lexicographic order."""
    d = all_pairs_distances(g)
    out = []
    for a, b, c in combinations(range(g.n), 3):
        val = int((d[a] + d[b] + d[c]).min())
        out.append({"triple": [a, b, c], "d": val})
    return out
