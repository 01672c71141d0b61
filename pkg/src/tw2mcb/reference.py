"""Slow, independent ground truth for small graphs.

Nothing here shares code with the linear-time pipeline beyond the graph
container: lex shortest paths come from exhaustive path enumeration, lex
short cycles from exhaustive cycle enumeration, and the minimum cycle basis
from Horton's candidate set with greedy GF(2) elimination.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import TooLarge
from .graph import Weight, WeightedGraph, connected_components

DEFAULT_BOUND = 14


def _check_size(g: WeightedGraph, bound: int) -> None:
    if g.n > bound:
        raise TooLarge(f"n={g.n} exceeds the small-instance bound {bound}")


# ---------------------------------------------------------------------------
# GF(2)


@dataclass
class Gf2Matrix:
    """Rows are bit-packed incidence vectors (Python ints) over ``ncols`` edges."""

    ncols: int
    rows: list[int] = field(default_factory=list)

    @classmethod
    def from_edge_sets(cls, ncols: int, edge_sets: Iterable[Iterable[int]]) -> "Gf2Matrix":
        rows = []
        for es in edge_sets:
            r = 0
            for e in es:
                if not 0 <= e < ncols:
                    raise ValueError(f"edge id {e} outside 0..{ncols - 1}")
                r ^= 1 << e
            rows.append(r)
        return cls(ncols, rows)


def gf2_rank(mat: Gf2Matrix | Sequence[int]) -> int:
    rows = mat.rows if isinstance(mat, Gf2Matrix) else list(mat)
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                rank += 1
                break
            r ^= p
    return rank


class _Gf2Basis:
    def __init__(self):
        self.pivots: dict[int, int] = {}

    def add(self, r: int) -> bool:
        while r:
            top = r.bit_length() - 1
            p = self.pivots.get(top)
            if p is None:
                self.pivots[top] = r
                return True
            r ^= p
        return False


# ---------------------------------------------------------------------------
# lex shortest paths


def _simple_paths(g: WeightedGraph, u: int, v: int):
    """All simple u-v paths as vertex lists (iterative DFS)."""
    on_path = [False] * g.n
    on_path[u] = True
    path = [u]
    stack = [iter(g.neighbors(u))]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            on_path[path.pop()] = False
            continue
        if on_path[nxt]:
            continue
        if nxt == v:
            yield path + [v]
            continue
        on_path[nxt] = True
        path.append(nxt)
        stack.append(iter(g.neighbors(nxt)))


def _path_weight(g: WeightedGraph, path: Sequence[int]) -> Weight:
    total: Weight = 0
    for a, b in zip(path, path[1:]):
        total += g.ew[g.edge_id(a, b)]
    return total


def _lex_beats(p, wp, q, wq, sigma) -> bool:
    """True if path p is preferred over path q under the lex order."""
    if wp != wq:
        return wp < wq
    if len(p) != len(q):
        return len(p) < len(q)
    sp, sq = set(p), set(q)
    only_p, only_q = sp - sq, sq - sp
    if not only_p:
        # same vertex set: only reachable with zero-weight ties; fall back to
        # comparing sigma along the sequence
        return [sigma[x] for x in p] < [sigma[x] for x in q]
    return min(sigma[x] for x in only_p) < min(sigma[x] for x in only_q)


def lex_shortest_path(
    g: WeightedGraph, u: int, v: int, sigma: Sequence[int] | None = None, bound: int = DEFAULT_BOUND
) -> list[int]:
    """The lex shortest u-v path by brute force over all simple paths.

    ``sigma[x]`` is the rank of vertex x (identity when omitted).
    """
    _check_size(g, bound)
    if u == v:
        raise ValueError("endpoints must differ")
    sigma = list(range(g.n)) if sigma is None else sigma
    best = None
    best_w = None
    for p in _simple_paths(g, u, v):
        wp = _path_weight(g, p)
        if best is None or _lex_beats(p, wp, best, best_w, sigma):
            best, best_w = p, wp
    if best is None:
        raise ValueError(f"no path between {u} and {v}")
    return best


def all_lex_shortest_paths(g: WeightedGraph, sigma=None, bound: int = DEFAULT_BOUND) -> dict:
    """``{(u, v): path}`` for every connected pair ``u < v``."""
    _check_size(g, bound)
    sigma = list(range(g.n)) if sigma is None else sigma
    out = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            best = None
            best_w = None
            for p in _simple_paths(g, u, v):
                wp = _path_weight(g, p)
                if best is None or _lex_beats(p, wp, best, best_w, sigma):
                    best, best_w = p, wp
            if best is not None:
                out[(u, v)] = best
    return out


# ---------------------------------------------------------------------------
# cycles


def simple_cycles(g: WeightedGraph, bound: int = DEFAULT_BOUND) -> list[frozenset[int]]:
    """Every simple cycle as a frozenset of edge ids."""
    _check_size(g, bound)
    seen: set[frozenset[int]] = set()
    out = []
    for s in range(g.n):
        # cycles whose smallest vertex is s
        path = [s]
        epath: list[int] = []
        on = {s}
        stack = [iter(g.adj[s])]
        while stack:
            e = next(stack[-1], None)
            if e is None:
                stack.pop()
                if epath:
                    epath.pop()
                    on.discard(path.pop())
                continue
            x = path[-1]
            y = g.other(e, x)
            if y == s and len(epath) >= 2:
                cyc = frozenset(epath + [e])
                if cyc not in seen:
                    seen.add(cyc)
                    out.append(cyc)
                continue
            if y <= s or y in on:
                continue
            on.add(y)
            path.append(y)
            epath.append(e)
            stack.append(iter(g.adj[y]))
    return out


def cycle_vertices(g: WeightedGraph, cycle: Iterable[int]) -> set[int]:
    vs = set()
    for e in cycle:
        vs.add(g.eu[e])
        vs.add(g.ev[e])
    return vs


def _path_edges(g: WeightedGraph, path: Sequence[int]) -> set[int]:
    return {g.edge_id(a, b) for a, b in zip(path, path[1:])}


def enumerate_lsc(g: WeightedGraph, sigma=None, bound: int = DEFAULT_BOUND) -> list[frozenset[int]]:
    """Cycles containing the lex shortest path of every pair of their vertices."""
    _check_size(g, bound)
    lsp = all_lex_shortest_paths(g, sigma, bound)
    lsp_edges = {k: _path_edges(g, p) for k, p in lsp.items()}
    out = []
    for cyc in simple_cycles(g, bound):
        vs = sorted(cycle_vertices(g, cyc))
        if all(lsp_edges[(a, b)] <= cyc for i, a in enumerate(vs) for b in vs[i + 1 :]):
            out.append(cyc)
    return out


def induced_cycles(g: WeightedGraph, bound: int = DEFAULT_BOUND) -> list[frozenset[int]]:
    """Chordless cycles: no graph edge joins two non-consecutive cycle vertices."""
    out = []
    for cyc in simple_cycles(g, bound):
        vs = cycle_vertices(g, cyc)
        chord = False
        for x in vs:
            for e in g.adj[x]:
                if e not in cyc and g.other(e, x) in vs:
                    chord = True
                    break
            if chord:
                break
        if not chord:
            out.append(cyc)
    return out


# ---------------------------------------------------------------------------
# Horton


def _shortest_path_tree(g: WeightedGraph, root: int) -> tuple[list, list[int]]:
    """Dijkstra from root; parent = smallest-id predecessor among those that
    are tight and one hop closer (hop count breaks zero-weight ties)."""
    INF = None
    dist: list = [INF] * g.n
    hops = [0] * g.n
    dist[root] = 0
    heap = [(0, 0, root)]
    done = [False] * g.n
    while heap:
        d, h, x = heapq.heappop(heap)
        if done[x]:
            continue
        done[x] = True
        for e in g.adj[x]:
            y = g.other(e, x)
            nd = d + g.ew[e]
            if dist[y] is INF or nd < dist[y] or (nd == dist[y] and h + 1 < hops[y]):
                dist[y] = nd
                hops[y] = h + 1
                heapq.heappush(heap, (nd, h + 1, y))
    parent = [-1] * g.n
    for y in range(g.n):
        if y == root or dist[y] is INF:
            continue
        best = None
        for e in g.adj[y]:
            x = g.other(e, y)
            if dist[x] is not INF and dist[x] + g.ew[e] == dist[y] and hops[x] + 1 == hops[y]:
                if best is None or x < best:
                    best = x
        parent[y] = best
    return dist, parent


def _tree_path(parent: list[int], x: int) -> list[int]:
    out = [x]
    while parent[out[-1]] != -1:
        out.append(parent[out[-1]])
    return out  # x ... root


def horton_candidates(g: WeightedGraph) -> list[tuple[Weight, int, frozenset[int]]]:
    cands: dict[frozenset[int], tuple[Weight, int]] = {}
    for v in range(g.n):
        dist, parent = _shortest_path_tree(g, v)
        for e in range(g.m):
            a, b = g.eu[e], g.ev[e]
            if dist[a] is None or dist[b] is None:
                continue
            pa, pb = _tree_path(parent, a), _tree_path(parent, b)
            if set(pa) & set(pb) != {v}:
                continue
            edges = _path_edges(g, pa) | _path_edges(g, pb)
            if e in edges:
                continue
            cyc = frozenset(edges | {e})
            if cyc not in cands:
                cands[cyc] = (dist[a] + dist[b] + g.ew[e], len(cyc))
    return sorted(((w, k, c) for c, (w, k) in cands.items()), key=lambda t: (t[0], t[1], sorted(t[2])))


def horton_mcb(g: WeightedGraph, bound: int = DEFAULT_BOUND) -> list[frozenset[int]]:
    """Minimum cycle basis from Horton's candidate set (greedy, exact)."""
    _check_size(g, bound)
    need = g.m - g.n + len(connected_components(g))
    basis = _Gf2Basis()
    out = []
    for _, _, cyc in horton_candidates(g):
        if len(out) == need:
            break
        r = 0
        for e in cyc:
            r |= 1 << e
        if basis.add(r):
            out.append(cyc)
    return out


def exhaustive_mcb_weight(g: WeightedGraph, bound: int = 12) -> Weight:
    """Greedy over *all* simple cycles; exact by the matroid greedy property."""
    _check_size(g, bound)
    cycles = sorted(simple_cycles(g, bound), key=lambda c: (g.weight_of(c), len(c)))
    basis = _Gf2Basis()
    total: Weight = 0
    for c in cycles:
        r = 0
        for e in c:
            r |= 1 << e
        if basis.add(r):
            total += g.weight_of(c)
    return total


def cycles_weight(g: WeightedGraph, cycles: Iterable[Iterable[int]]) -> Weight:
    total: Weight = 0
    for c in cycles:
        total += g.weight_of(c)
    return total


# ---------------------------------------------------------------------------
# verification


@dataclass
class BasisReport:
    simple: bool
    count: bool
    rank: bool
    weight: bool | None  # None when the weight check was skipped
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.simple and self.count and self.rank and self.weight is not False

    def lines(self) -> list[str]:
        def mark(x):
            return "skip" if x is None else ("pass" if x else "FAIL")

        return [
            f"simple {mark(self.simple)}",
            f"count {mark(self.count)}",
            f"rank {mark(self.rank)}",
            f"weight {mark(self.weight)}",
        ] + [f"# {d}" for d in self.details]


def _as_edge_set(g: WeightedGraph, cycle) -> tuple[frozenset[int] | None, str | None]:
    """Accept an edge-id collection, an object with ``edges``/``vertices``, or
    a vertex sequence; check it is a simple cycle of ``g``."""
    if hasattr(cycle, "vertices") and hasattr(cycle, "edges"):
        verts = list(cycle.vertices)
    else:
        verts = None
        edges = frozenset(cycle)
    if verts is not None:
        k = len(verts)
        if k < 3 or len(set(verts)) != k:
            return None, f"cycle {verts} repeats a vertex or is too short"
        es = []
        for i in range(k):
            e = g.edge_id(verts[i], verts[(i + 1) % k])
            if e is None:
                return None, f"cycle {verts} uses a non-edge ({verts[i]}, {verts[(i + 1) % k]})"
            es.append(e)
        return frozenset(es), None
    deg: dict[int, int] = {}
    for e in edges:
        if not 0 <= e < g.m:
            return None, f"edge id {e} not in graph"
        deg[g.eu[e]] = deg.get(g.eu[e], 0) + 1
        deg[g.ev[e]] = deg.get(g.ev[e], 0) + 1
    if len(edges) < 3 or any(d != 2 for d in deg.values()) or len(deg) != len(edges):
        return None, "edge set is not a single simple cycle"
    # connectivity of the degree-2 subgraph
    start = next(iter(deg))
    adj: dict[int, list[int]] = {}
    for e in edges:
        adj.setdefault(g.eu[e], []).append(g.ev[e])
        adj.setdefault(g.ev[e], []).append(g.eu[e])
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(deg):
        return None, "edge set splits into several cycles"
    return frozenset(edges), None


def verify_basis(g: WeightedGraph, cycles, max_n: int = DEFAULT_BOUND) -> BasisReport:
    """Check simplicity, count, GF(2) rank and (for n <= max_n) total weight."""
    details = []
    sets = []
    simple = True
    for c in cycles:
        es, err = _as_edge_set(g, c)
        if es is None:
            simple = False
            details.append(err)
        else:
            sets.append(es)
    need = g.m - g.n + len(connected_components(g))
    count = len(list(cycles)) == need
    if not count:
        details.append(f"expected {need} cycles, got {len(list(cycles))}")
    rank = simple and gf2_rank(Gf2Matrix.from_edge_sets(g.m, sets)) == len(sets) == need
    if simple and not rank:
        details.append("cycles are not independent over GF(2)")
    weight = None
    if g.n <= max_n:
        ref = cycles_weight(g, horton_mcb(g, bound=max_n))
        got = cycles_weight(g, sets)
        weight = simple and got == ref
        if not weight:
            details.append(f"total weight {got} differs from minimum {ref}")
    return BasisReport(simple, count, rank, weight, details)
