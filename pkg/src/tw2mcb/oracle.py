"""Exact distances between vertices that share a bag of a suitable decomposition.

Preprocessing is two sweeps over the decomposition tree. The upward sweep
computes, for every bag, the three pair distances using only the bag's
subtree; the downward sweep folds in everything outside it through the
2-vertex label shared with the father. Each sweep closes the bag's 3x3
distance matrix with a Floyd-Warshall pass over the bag's own vertices.

Alongside each distance the sweeps remember *some* interior vertex of a
shortest path (or nothing, when the edge itself is a shortest path). A
second pass turns each such vertex into one that sits in a common bag with
the pair, using the DFS-interval routing index, which is what makes
constant-time intermediate queries and path extraction possible.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import inf

from .errors import InternalError, OracleBuildError, PairNotInBag, VertexInBag
from .graph import Weight, WeightedGraph
from .treedec import SuitableTreeDecomposition, decomposition_problems

NO_VIA = -1


@dataclass
class RoutingIndex:
    """Preorder numbers and subtree intervals of the decomposition tree."""

    dfs_number: list[int]
    subtree_interval: list[tuple[int, int]]
    # cyclic interval of preorder numbers outside the subtree, kept at the
    # father; None at the root
    complement_interval: list[tuple[int, int] | None]
    vertex_home: list[int]
    child_order: list[list[int]]
    child_lo: list[list[int]]

    @classmethod
    def build(cls, t: SuitableTreeDecomposition, n_vertices: int) -> "RoutingIndex":
        nb = len(t.bags)
        dfs = [0] * nb
        hi = [0] * nb
        counter = 0
        order = []
        stack = [t.root]
        while stack:
            b = stack.pop()
            dfs[b] = counter
            counter += 1
            order.append(b)
            stack.extend(reversed(t.children[b]))
        # subtree sizes in reverse preorder
        size = [1] * nb
        for b in reversed(order):
            p = t.parent[b]
            if p >= 0:
                size[p] += size[b]
        for b in range(nb):
            hi[b] = dfs[b] + size[b] - 1
        intervals = [(dfs[b], hi[b]) for b in range(nb)]
        complement: list[tuple[int, int] | None] = [None] * nb
        for b in range(nb):
            if t.parent[b] >= 0:
                complement[b] = ((hi[b] + 1) % nb, (dfs[b] - 1) % nb)
        home = [-1] * n_vertices
        for b in order:
            for v in t.bags[b]:
                if home[v] < 0:
                    home[v] = b
        child_order = [list(t.children[b]) for b in range(nb)]  # already preorder
        child_lo = [[dfs[c] for c in kids] for kids in child_order]
        return cls(dfs, intervals, complement, home, child_order, child_lo)

    def in_subtree(self, b: int, target: int) -> bool:
        lo, hi = self.subtree_interval[b]
        return lo <= self.dfs_number[target] <= hi


@dataclass
class DistanceOracle:
    graph: WeightedGraph
    tree: SuitableTreeDecomposition
    routing: RoutingIndex
    dist: list[Weight]
    via_vertex: list[int]
    via_bag: list[int]
    ops: int = 0

    # -- queries --------------------------------------------------------

    def _slot(self, u: int, v: int, X: int) -> int:
        bag = self.tree.bags[X]
        if u == v or u not in bag or v not in bag:
            raise PairNotInBag(f"pair ({u}, {v}) not in bag {X} {bag}")
        return 3 * X + _pair_index(bag, u, v)

    def distance(self, u: int, v: int, X: int) -> Weight:
        return self.dist[self._slot(u, v, X)]

    def intermediate_vertex(self, u: int, v: int, X: int) -> tuple[int, int] | None:
        s = self._slot(u, v, X)
        w = self.via_vertex[s]
        if w == NO_VIA:
            return None
        return w, self.via_bag[s]

    def route_toward(self, A: int, v: int) -> int:
        """Neighbour of bag A on the tree path to the bags holding v."""
        if v in self.tree.bags[A]:
            raise VertexInBag(f"vertex {v} lies in bag {A}")
        r = self.routing
        target = r.dfs_number[r.vertex_home[v]]
        lo, hi = r.subtree_interval[A]
        if lo <= target <= hi:
            kids = r.child_lo[A]
            return r.child_order[A][bisect_right(kids, target) - 1]
        return self.tree.parent[A]

    def extract_shortest_path(self, u: int, v: int, X: int) -> list[int]:
        """Vertex sequence of a shortest u-v path, by repeated bisection."""
        self._slot(u, v, X)
        path = [u]
        stack = [(u, v, X)]
        via_vertex, via_bag, bags = self.via_vertex, self.via_bag, self.tree.bags
        limit = self.graph.n
        while stack:
            a, b, B = stack.pop()
            s = 3 * B + _pair_index(bags[B], a, b)
            w = via_vertex[s]
            if w == NO_VIA:
                path.append(b)
                if len(path) > limit + 1:
                    raise InternalError(f"path extraction for ({u}, {v}) does not terminate")
            else:
                Y = via_bag[s]
                stack.append((w, b, Y))
                stack.append((a, w, Y))
        if len(set(path)) != len(path):
            # only possible when zero-weight detours tie with the shortest path
            path = _shortcut(path)
        return path

    def path_edge_count(self, u: int, v: int, X: int) -> int:
        """Number of edges :meth:`extract_shortest_path` would return, without
        building the path (memoized over bag pairs)."""
        self._slot(u, v, X)
        bags, via_vertex, via_bag = self.tree.bags, self.via_vertex, self.via_bag
        memo = self._hops
        root = 3 * X + _pair_index(bags[X], u, v)
        if root in memo:
            return memo[root]
        stack = [(root, u, v, X)]
        while stack:
            s, a, b, B = stack[-1]
            if s in memo:
                stack.pop()
                continue
            w = via_vertex[s]
            if w == NO_VIA:
                memo[s] = 1
                stack.pop()
                continue
            Y = via_bag[s]
            s1 = 3 * Y + _pair_index(bags[Y], a, w)
            s2 = 3 * Y + _pair_index(bags[Y], w, b)
            if s1 in memo and s2 in memo:
                memo[s] = memo[s1] + memo[s2]
                stack.pop()
            else:
                if s1 not in memo:
                    stack.append((s1, a, w, Y))
                if s2 not in memo:
                    stack.append((s2, w, b, Y))
        return memo[root]

    def __post_init__(self):
        self._hops: dict[int, int] = {}


def _pair_index(bag: tuple, u: int, v: int) -> int:
    # bag is sorted (x0, x1, x2); slots: 0 -> (x0, x1), 1 -> (x0, x2), 2 -> (x1, x2)
    x0 = bag[0]
    if u == x0 or v == x0:
        other = v if u == x0 else u
        return 0 if other == bag[1] else 1
    return 2


def _shortcut(path: list[int]) -> list[int]:
    out: list[int] = []
    pos: dict[int, int] = {}
    for x in path:
        if x in pos:
            for y in out[pos[x] + 1 :]:
                del pos[y]
            del out[pos[x] + 1 :]
        else:
            pos[x] = len(out)
            out.append(x)
    return out


def _close(d: list, via: list, bag: tuple) -> int:
    """Floyd-Warshall over the three bag vertices; ``d``/``via`` are 3-slot
    lists in pair-index order. Returns the number of relaxations tried."""
    x0, x1, x2 = bag
    # through x0: relax (x1, x2)
    c = d[0] + d[1]
    if c < d[2]:
        d[2] = c
        via[2] = x0
    # through x1: relax (x0, x2)
    c = d[0] + d[2]
    if c < d[1]:
        d[1] = c
        via[1] = x1
    # through x2: relax (x0, x1)
    c = d[1] + d[2]
    if c < d[0]:
        d[0] = c
        via[0] = x2
    return 3


def build_oracle(g: WeightedGraph, t: SuitableTreeDecomposition, *, check: bool = True) -> DistanceOracle:
    """Preprocess ``g`` along its suitable decomposition ``t`` in linear time."""
    if check:
        problems = decomposition_problems(g, t)
        if problems:
            raise OracleBuildError("; ".join(problems[:5]))
    nb = len(t.bags)
    bags, parent, children = t.bags, t.parent, t.children
    routing = RoutingIndex.build(t, g.n)
    ops = 0

    if all(parent[b] < b for b in range(nb)):
        # preorder-numbered (as make_suitable produces): index order is top-down
        order = range(nb)
    else:
        order = []
        stack = [t.root]
        while stack:
            b = stack.pop()
            order.append(b)
            stack.extend(children[b])

    # direct edges
    dist: list = [inf] * (3 * nb)
    via: list[int] = [NO_VIA] * (3 * nb)
    ew = g.ew
    for b in range(nb):
        x0, x1, x2 = bags[b]
        for k, (a, c) in enumerate(((x0, x1), (x0, x2), (x1, x2))):
            e = g.edge_id(a, c)
            if e is not None:
                dist[3 * b + k] = ew[e]

    # upward sweep: children first
    for b in reversed(order):
        bag = bags[b]
        d = dist[3 * b : 3 * b + 3]
        vv = via[3 * b : 3 * b + 3]
        for c in children[b]:
            cb = bags[c]
            a1, a2 = (x for x in cb if x in bag)
            sc = 3 * c + _pair_index(cb, a1, a2)
            k = _pair_index(bag, a1, a2)
            ops += 1
            if dist[sc] < d[k]:
                d[k] = dist[sc]
                vv[k] = via[sc]
        ops += _close(d, vv, bag)
        dist[3 * b : 3 * b + 3] = d
        via[3 * b : 3 * b + 3] = vv

    # downward sweep: fathers first
    for b in order:
        p = parent[b]
        if p < 0:
            continue
        bag, pb = bags[b], bags[p]
        a1, a2 = (x for x in bag if x in pb)
        sp = 3 * p + _pair_index(pb, a1, a2)
        k = _pair_index(bag, a1, a2)
        s = 3 * b + k
        ops += 1
        if dist[sp] < dist[s]:
            d = dist[3 * b : 3 * b + 3]
            vv = via[3 * b : 3 * b + 3]
            d[k] = dist[sp]
            vv[k] = via[sp]
            ops += _close(d, vv, bag)
            dist[3 * b : 3 * b + 3] = d
            via[3 * b : 3 * b + 3] = vv

    for s in range(3 * nb):
        if dist[s] == inf:
            raise OracleBuildError("graph is not connected")

    oracle = DistanceOracle(g, t, routing, dist, [NO_VIA] * (3 * nb), [NO_VIA] * (3 * nb), ops)
    _normalize_intermediates(oracle, via)
    return oracle


def _normalize_intermediates(o: DistanceOracle, raw_via: list[int]) -> None:
    """Replace each recorded interior vertex z by one that shares a bag with
    the pair, stepping through at most two bags that also hold the pair."""
    bags = o.tree.bags
    ops = 0
    for X, bag in enumerate(bags):
        x0, x1, x2 = bag
        for k, (u, v, r0) in enumerate(((x0, x1, x2), (x0, x2, x1), (x1, x2, x0))):
            s = 3 * X + k
            z = raw_via[s]
            if z == NO_VIA:
                continue
            cur, r = X, r0
            while True:
                cb = bags[cur]
                if z in cb:
                    w, Y = z, cur
                    break
                A = o.route_toward(cur, z)
                ops += 1
                ab = bags[A]
                if u in ab and v in ab:
                    cur = A
                    r = next(x for x in ab if x != u and x != v)
                    continue
                w, Y = r, cur
                break
            o.via_vertex[s] = w
            o.via_bag[s] = Y
    o.ops += ops
