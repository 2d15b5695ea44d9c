"""Rainbow-path reach families and the k-rainbow coloring checker.

The engine computes, per (source, target) pair, the antichain of
inclusion-minimal color sets realizable by rainbow paths.  A 3-set has a
rainbow tree iff some center vertex admits pairwise color-disjoint reach
sets to the three terminals: the union of such paths repeats no color,
so any spanning tree of it is a rainbow tree through the set.

Color sets are bitmasks over a bounded palette (default bound 32,
widenable per call).  The reach search also accepts edges with color
None, treated as bearing a color unique to that edge: masks then track
only the concrete colors, which is equivalent because an edge never
repeats inside a path and two paths sharing such an edge still form an
all-distinct-colors union.  The exact solver uses this for its
optimistic partial-coloring checks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Iterable, Optional, Sequence

from .graphs import Graph, is_connected

DEFAULT_PALETTE_BOUND = 32


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of color ids to a graph's edge indices.

    Adjacent edges may share colors.  palette_size bounds the ids; the
    coloring need not use every palette color.
    """

    colors: tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        if self.palette_size < 0:
            raise ValueError("palette_size must be nonnegative")
        for e, c in enumerate(self.colors):
            if not (0 <= c < self.palette_size):
                raise ValueError(
                    f"color {c} of edge {e} outside palette [0, {self.palette_size})"
                )

    @property
    def colors_used(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a k-rainbow check: ok, or the lexicographically first
    vertex set with no rainbow tree."""

    ok: bool
    failing: Optional[tuple[int, ...]] = None


def coloring_to_json_dict(c: EdgeColoring) -> dict:
    return {"palette": c.palette_size, "colors": list(c.colors)}


def coloring_from_json_dict(obj: dict) -> EdgeColoring:
    try:
        palette = int(obj["palette"])
        colors = tuple(int(x) for x in obj["colors"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed coloring object: {exc}") from exc
    return EdgeColoring(colors, palette)


def _require_match(g: Graph, coloring: EdgeColoring) -> None:
    if len(coloring.colors) != g.m:
        raise ValueError(
            f"coloring length {len(coloring.colors)} does not match edge count {g.m}"
        )


def _check_palette(palette_size: int, palette_bound: int) -> None:
    if palette_size > palette_bound:
        raise ValueError(
            f"palette {palette_size} exceeds bound {palette_bound}; "
            "pass a larger palette_bound to widen"
        )


# ---------------------------------------------------------------------------
# Reach engine
# ---------------------------------------------------------------------------

def _reach(
    g: Graph,
    colors: Sequence[Optional[int]],
    source: int,
    record_preds: bool = False,
):
    """Antichains of minimal color masks reachable from ``source``.

    colors[e] is the color of edge e, or None for a color unique to that
    edge (contributing nothing to masks).  Returns (families, preds):
    families[t] is the list of minimal masks of rainbow paths source->t,
    sorted by (popcount, value); preds maps (vertex, mask) to
    (prev_vertex, prev_mask, edge) for path reconstruction.
    """
    fams: list[list[int]] = [[] for _ in range(g.n)]
    fams[source] = [0]
    preds: dict[tuple[int, int], Optional[tuple[int, int, int]]] = {}
    if record_preds:
        preds[(source, 0)] = None
    queue: deque[tuple[int, int]] = deque([(source, 0)])
    incidence = g.incidence
    while queue:
        v, mask = queue.popleft()
        if mask not in fams[v]:
            continue  # dominated after being queued
        for e, w in incidence[v]:
            c = colors[e]
            if c is None:
                nm = mask
            else:
                bit = 1 << c
                if mask & bit:
                    continue
                nm = mask | bit
            fw = fams[w]
            dominated = False
            for x in fw:
                if x & nm == x:
                    dominated = True
                    break
            if dominated:
                continue
            fams[w] = [x for x in fw if nm & x != nm]
            fams[w].append(nm)
            if record_preds and (w, nm) not in preds:
                preds[(w, nm)] = (v, mask, e)
            queue.append((w, nm))
    for t in range(g.n):
        fams[t].sort(key=lambda x: (bin(x).count("1"), x))
    return fams, preds


def rainbow_reach(
    g: Graph,
    coloring: EdgeColoring,
    source: int,
    palette_bound: int = DEFAULT_PALETTE_BOUND,
) -> list[list[int]]:
    """Per target vertex, the antichain of minimal color sets (as
    bitmasks) achievable by rainbow paths from ``source``."""
    _require_match(g, coloring)
    _check_palette(coloring.palette_size, palette_bound)
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range")
    fams, _ = _reach(g, coloring.colors, source)
    return fams


def _disjoint_triple(
    fa: list[int], fb: list[int], fc: list[int]
) -> Optional[tuple[int, int, int]]:
    """First pairwise-disjoint (ma, mb, mc), families already sorted by
    increasing cardinality."""
    for ma in fa:
        for mb in fb:
            if ma & mb:
                continue
            mab = ma | mb
            for mc in fc:
                if not (mab & mc):
                    return ma, mb, mc
    return None


def _walk_edges(preds, v: int, mask: int) -> list[int]:
    edges = []
    state: Optional[tuple[int, int, int]] = preds[(v, mask)]
    while state is not None:
        u, pmask, e = state
        edges.append(e)
        state = preds[(u, pmask)]
    return edges


def find_rainbow_tree(
    g: Graph,
    coloring: EdgeColoring,
    terminals: Iterable[int],
    palette_bound: int = DEFAULT_PALETTE_BOUND,
) -> Optional[tuple[int, ...]]:
    """Edge indices of some rainbow tree containing the 3-set, or None.

    Centers are tried in ascending order and reach-family members in
    increasing cardinality, so the witness is deterministic.
    """
    _require_match(g, coloring)
    _check_palette(coloring.palette_size, palette_bound)
    s = sorted(set(int(v) for v in terminals))
    if len(s) != 3:
        raise ValueError(f"need exactly 3 distinct vertices, got {s}")
    for v in s:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    a, b, c = s
    reach = {}
    pred = {}
    for v in s:
        reach[v], pred[v] = _reach(g, coloring.colors, v, record_preds=True)
    for center in range(g.n):
        hit = _disjoint_triple(reach[a][center], reach[b][center], reach[c][center])
        if hit is None:
            continue
        ma, mb, mc = hit
        edges = set(_walk_edges(pred[a], center, ma))
        edges.update(_walk_edges(pred[b], center, mb))
        edges.update(_walk_edges(pred[c], center, mc))
        return _spanning_tree_containing(g, edges)
    return None


def _spanning_tree_containing(g: Graph, edge_ids: set[int]) -> tuple[int, ...]:
    """Spanning tree (as edge indices) of the subgraph induced by
    ``edge_ids``; since all its colors are distinct, any tree works."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in sorted(edge_ids):
        u, v = g.edges[e]
        adj.setdefault(u, []).append((e, v))
        adj.setdefault(v, []).append((e, u))
    root = min(adj) if adj else 0
    seen = {root}
    tree: list[int] = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for e, w in adj.get(u, ()):
            if w not in seen:
                seen.add(w)
                tree.append(e)
                queue.append(w)
    return tuple(sorted(tree))


def has_rainbow_tree(
    g: Graph,
    coloring: EdgeColoring,
    terminals: Iterable[int],
    palette_bound: int = DEFAULT_PALETTE_BOUND,
) -> bool:
    """True iff some rainbow tree contains the given 3-set."""
    return find_rainbow_tree(g, coloring, terminals, palette_bound) is not None


# ---------------------------------------------------------------------------
# Whole-graph verdicts
# ---------------------------------------------------------------------------

def _scan_triples(
    g: Graph,
    colors: Sequence[Optional[int]],
    start: int,
    stop: Optional[int],
) -> Optional[tuple[int, int, int]]:
    """First triple in the lexicographic slice [start, stop) with no
    rainbow tree, or None."""
    fams = [_reach(g, colors, v)[0] for v in range(g.n)]
    for a, b, c in islice(combinations(range(g.n), 3), start, stop):
        found = False
        for center in range(g.n):
            if _disjoint_triple(fams[a][center], fams[b][center], fams[c][center]):
                found = True
                break
        if not found:
            return (a, b, c)
    return None


def _scan_pairs(
    g: Graph, colors: Sequence[Optional[int]]
) -> Optional[tuple[int, int]]:
    for a in range(g.n):
        fams, _ = _reach(g, colors, a)
        for b in range(a + 1, g.n):
            if not fams[b]:
                return (a, b)
    return None


def _scan_triples_job(args) -> Optional[tuple[int, int, int]]:
    g, colors, start, stop = args
    return _scan_triples(g, colors, start, stop)


def is_k_rainbow(
    g: Graph,
    coloring: EdgeColoring,
    k: int,
    jobs: int = 1,
    palette_bound: int = DEFAULT_PALETTE_BOUND,
) -> Verdict:
    """Check that every k-set of vertices has a rainbow tree (k=2 means a
    rainbow path, i.e. rainbow connectivity).

    The failing verdict carries the lexicographically first bad set,
    independent of ``jobs``.
    """
    if k not in (2, 3):
        raise ValueError(f"k must be 2 or 3, got {k}")
    _require_match(g, coloring)
    _check_palette(coloring.palette_size, palette_bound)
    if not is_connected(g):
        raise ValueError("k-rainbow checking requires a connected graph")
    if k == 2:
        bad = _scan_pairs(g, coloring.colors)
        return Verdict(bad is None, bad)
    total = g.n * (g.n - 1) * (g.n - 2) // 6
    if jobs > 1 and total >= 64:
        from concurrent.futures import ProcessPoolExecutor

        bounds = [total * i // jobs for i in range(jobs + 1)]
        tasks = [
            (g, coloring.colors, bounds[i], bounds[i + 1]) for i in range(jobs)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_triples_job, tasks))
        failures = [r for r in results if r is not None]
        bad = min(failures) if failures else None
    else:
        bad = _scan_triples(g, coloring.colors, 0, None)
    return Verdict(bad is None, bad)


def partial_failure(
    g: Graph,
    colors: Sequence[Optional[int]],
    k: int,
    triple_order: Optional[Sequence[tuple[int, int, int]]] = None,
) -> Optional[tuple[int, ...]]:
    """Optimistic check for a partially colored graph: edges with color
    None count as uniquely colored.  Returns some set with no rainbow
    tree even under that relaxation, or None if all sets pass.

    Unlike is_k_rainbow this makes no promise about which failing set is
    reported; callers (the solver's pruning) only need existence.
    """
    if k == 2:
        return _scan_pairs(g, colors)
    fams = [_reach(g, colors, v)[0] for v in range(g.n)]
    order = triple_order if triple_order is not None else combinations(range(g.n), 3)
    for a, b, c in order:
        found = False
        for center in range(g.n):
            if _disjoint_triple(fams[a][center], fams[b][center], fams[c][center]):
                found = True
                break
        if not found:
            return (a, b, c)
    return None
