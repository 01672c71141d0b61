"""Weighted simple graphs: storage, parsing, block decomposition, recognition.

Weights are kept exact. Integral weights are plain ``int``; anything with a
fractional part is a :class:`fractions.Fraction`. Mixed arithmetic between
the two stays exact, so equality tests such as ``w(e) == dist(u, v)`` are
reliable.
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, NamedTuple, Sequence, Union

from .errors import InvalidParam, ParseError

Weight = Union[int, Fraction]

ORIGINAL = 0
GREEN = 1

_DECIMAL = re.compile(r"^\+?(\d+(\.\d*)?|\.\d+)$")


def parse_weight(token: str) -> Weight:
    """Parse a non-negative decimal literal exactly.

    Raises ``ValueError`` for anything that is not a plain decimal number,
    including negative values.
    """
    if token.startswith("-") and _DECIMAL.match(token[1:]):
        raise ValueError(f"negative weight {token!r}")
    if not _DECIMAL.match(token):
        raise ValueError(f"malformed weight {token!r}")
    value = Fraction(token)
    if value.denominator == 1:
        return int(value)
    return value


def format_weight(w: Weight) -> str:
    """Render an exact weight as a finite decimal string."""
    if isinstance(w, int):
        return str(w)
    w = Fraction(w)
    if w.denominator == 1:
        return str(w.numerator)
    den = w.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        # Not representable as a finite decimal; never produced from decimal input.
        return f"{w.numerator}/{w.denominator}"
    digits = max(twos, fives)
    scaled = w.numerator * 10**digits // w.denominator
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(digits + 1, "0")
    whole, frac = text[:-digits], text[-digits:].rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def normalize_weight(w) -> Weight:
    if isinstance(w, int):
        return w
    if isinstance(w, float):
        w = Fraction(repr(w))
    w = Fraction(w)
    return int(w) if w.denominator == 1 else w


class EdgeRecord(NamedTuple):
    u: int
    v: int
    w: Weight
    kind: int = ORIGINAL

    @property
    def is_green(self) -> bool:
        return self.kind == GREEN


class WeightedGraph:
    """Simple undirected graph on dense vertex ids ``0..n-1``.

    Edges are stored in parallel lists (``eu``, ``ev``, ``ew``, ``kinds``) to
    keep million-vertex instances affordable; :attr:`edges` materializes
    :class:`EdgeRecord` tuples on demand. Treat instances as immutable once
    built.
    """

    __slots__ = ("n", "eu", "ev", "ew", "kinds", "adj", "_index")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence] = (),
        *,
        validate: bool = True,
    ):
        if n < 0:
            raise InvalidParam("vertex count must be non-negative")
        self.n = n
        self.eu: list[int] = []
        self.ev: list[int] = []
        self.ew: list[Weight] = []
        self.kinds: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self._index: dict[int, int] = {}
        for edge in edges:
            kind = edge[3] if len(edge) > 3 else ORIGINAL
            self._add(edge[0], edge[1], edge[2], kind, validate)

    def _add(self, u: int, v: int, w: Weight, kind: int, validate: bool) -> int:
        if validate:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            w = normalize_weight(w)
            if w < 0:
                raise ValueError(f"negative weight on edge ({u}, {v})")
        key = self._key(u, v)
        if key in self._index:
            raise ValueError(f"duplicate edge ({u}, {v})")
        eid = len(self.eu)
        self._index[key] = eid
        self.eu.append(u)
        self.ev.append(v)
        self.ew.append(w)
        self.kinds.append(kind)
        self.adj[u].append(eid)
        self.adj[v].append(eid)
        return eid

    def _key(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return u * self.n + v

    @property
    def m(self) -> int:
        return len(self.eu)

    @property
    def edges(self) -> list[EdgeRecord]:
        return [EdgeRecord(*t) for t in zip(self.eu, self.ev, self.ew, self.kinds)]

    def edge(self, eid: int) -> EdgeRecord:
        return EdgeRecord(self.eu[eid], self.ev[eid], self.ew[eid], self.kinds[eid])

    def edge_id(self, u: int, v: int) -> int | None:
        return self._index.get(self._key(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return self._key(u, v) in self._index

    def other(self, eid: int, x: int) -> int:
        u = self.eu[eid]
        return self.ev[eid] if u == x else u

    def neighbors(self, x: int) -> list[int]:
        return [self.other(e, x) for e in self.adj[x]]

    def degree(self, x: int) -> int:
        return len(self.adj[x])

    def weight_of(self, edge_ids: Iterable[int]) -> Weight:
        total: Weight = 0
        for e in edge_ids:
            total += self.ew[e]
        return total

    def subgraph(self, vertices: Sequence[int], edge_ids: Sequence[int]) -> tuple["WeightedGraph", list[int], list[int]]:
        """Relabel a vertex/edge subset to a fresh graph.

        Returns ``(h, vmap, emap)`` where ``vmap[local] = original vertex`` and
        ``emap[local] = original edge id``.
        """
        local = {v: i for i, v in enumerate(vertices)}
        h = WeightedGraph(len(vertices))
        for e in edge_ids:
            h._add(local[self.eu[e]], local[self.ev[e]], self.ew[e], self.kinds[e], False)
        return h, list(vertices), list(edge_ids)

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[Sequence]) -> WeightedGraph:
    return WeightedGraph(n, edges)


# ---------------------------------------------------------------------------
# text format


def load_graph(stream: IO[str] | IO[bytes] | str | bytes) -> WeightedGraph:
    """Read the ``p``/``e`` edge-list format.

    ``#`` starts a comment line, ``p <n> <m>`` is the header, and each of the
    ``m`` following ``e <u> <v> <w>`` lines declares an edge. Every problem is
    reported as a :class:`ParseError` carrying its 1-based line number.
    """
    if isinstance(stream, (str, bytes)):
        text = stream
    else:
        text = stream.read()
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(1, f"input is not UTF-8 text ({exc.reason})") from None

    g: WeightedGraph | None = None
    declared_m = 0
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if g is not None:
                raise ParseError(lineno, "second header line")
            if len(parts) != 3:
                raise ParseError(lineno, "header must be 'p <n> <m>'")
            try:
                n, declared_m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "header counts must be integers") from None
            if n < 0 or declared_m < 0:
                raise ParseError(lineno, "header counts must be non-negative")
            g = WeightedGraph(n)
        elif tag == "e":
            if g is None:
                raise ParseError(lineno, "edge line before header")
            if len(parts) != 4:
                raise ParseError(lineno, "edge line must be 'e <u> <v> <w>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "edge endpoints must be integers") from None
            if not (0 <= u < g.n and 0 <= v < g.n):
                raise ParseError(lineno, f"endpoint out of range 0..{g.n - 1}")
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            try:
                w = parse_weight(parts[3])
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            if g.has_edge(u, v):
                raise ParseError(lineno, f"duplicate edge ({u}, {v})")
            g._add(u, v, w, ORIGINAL, False)
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if g is None:
        raise ParseError(max(lineno, 1), "missing header line")
    if g.m != declared_m:
        raise ParseError(max(lineno, 1), f"header declares {declared_m} edges, found {g.m}")
    return g


def dump_graph(g: WeightedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"p {g.n} {g.m}")
    for u, v, w in zip(g.eu, g.ev, g.ew):
        lines.append(f"e {u} {v} {format_weight(w)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# connectivity


def connected_components(g: WeightedGraph) -> list[list[int]]:
    """Vertex lists of the connected components, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for e in g.adj[x]:
                y = g.other(e, x)
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comp.sort()
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return len(self.edges) == 1


@dataclass(frozen=True)
class BiconnectedSplit:
    components: tuple[Block, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i: int) -> Block:
        return self.components[i]


def biconnected_components(g: WeightedGraph) -> BiconnectedSplit:
    """Split the edges into blocks (Hopcroft-Tarjan, iterative).

    Bridges come out as single-edge blocks. Blocks are ordered by their
    smallest edge id, and each block lists its vertices and edges sorted.
    Works on disconnected graphs too; isolated vertices belong to no block.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    adj, eu, ev = g.adj, g.eu, g.ev
    edge_stack: list[int] = []
    blocks: list[tuple[int, ...]] = []
    counter = 0
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = counter
        counter += 1
        # frames: (vertex, parent edge, next adjacency index)
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            x, pe, i = frame
            nbrs = adj[x]
            if i < len(nbrs):
                frame[2] = i + 1
                e = nbrs[i]
                if e == pe:
                    continue
                y = ev[e] if eu[e] == x else eu[e]
                if disc[y] == -1:
                    edge_stack.append(e)
                    disc[y] = low[y] = counter
                    counter += 1
                    stack.append([y, e, 0])
                elif disc[y] < disc[x]:
                    edge_stack.append(e)
                    if disc[y] < low[x]:
                        low[x] = disc[y]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[x] < low[p]:
                        low[p] = low[x]
                    if low[x] >= disc[p]:
                        comp = []
                        while True:
                            f = edge_stack.pop()
                            comp.append(f)
                            if f == pe:
                                break
                        blocks.append(tuple(sorted(comp)))
    blocks.sort(key=lambda b: b[0])
    out = []
    for edges in blocks:
        verts = set()
        for e in edges:
            verts.add(eu[e])
            verts.add(ev[e])
        out.append(Block(tuple(sorted(verts)), edges))
    return BiconnectedSplit(tuple(out))


def is_biconnected(g: WeightedGraph) -> bool:
    if g.n < 3:
        return False
    split = biconnected_components(g)
    return len(split) == 1 and len(split[0].vertices) == g.n


# ---------------------------------------------------------------------------
# treewidth-2 recognition


@dataclass(frozen=True)
class Elimination:
    """Result of greedy degree-<=2 elimination.

    ``order[i] = (x, neighbors)`` where ``neighbors`` is the sorted tuple of
    x's (possibly virtual) neighbours at removal time. ``remaining`` lists
    vertices never eliminated.
    """

    order: tuple[tuple[int, tuple[int, ...]], ...]
    remaining: tuple[int, ...]


def eliminate(g: WeightedGraph, stop_at: int = 0) -> Elimination:
    """Repeatedly delete a vertex of degree <= 2, joining its two neighbours.

    Parallel virtual edges collapse into one. Vertices are taken in FIFO
    order of reaching degree <= 2 (ties by id), and the process stops once
    ``stop_at`` vertices remain or no vertex qualifies.
    """
    nbr = [set() for _ in range(g.n)]
    for u, v in zip(g.eu, g.ev):
        nbr[u].add(v)
        nbr[v].add(u)
    alive = g.n
    removed = [False] * g.n
    queued = [False] * g.n
    queue = deque()
    for x in range(g.n):
        if len(nbr[x]) <= 2:
            queue.append(x)
            queued[x] = True
    order = []
    while queue and alive > stop_at:
        x = queue.popleft()
        ns = nbr[x]
        removed[x] = True
        alive -= 1
        order.append((x, tuple(sorted(ns))))
        for y in ns:
            nbr[y].discard(x)
        if len(ns) == 2:
            a, b = ns
            if b not in nbr[a]:
                nbr[a].add(b)
                nbr[b].add(a)
        nbr[x] = set()
        for y in ns:
            if not queued[y] and len(nbr[y]) <= 2:
                queued[y] = True
                queue.append(y)
    remaining = tuple(x for x in range(g.n) if not removed[x])
    return Elimination(tuple(order), remaining)


def recognize_partial_2tree(g: WeightedGraph) -> bool:
    """True iff ``g`` has treewidth at most 2."""
    return not eliminate(g).remaining


def cycle_space_dimension(g: WeightedGraph) -> int:
    """``m - n + c``; equals ``m - n + 1`` for connected graphs."""
    return g.m - g.n + len(connected_components(g))


# ---------------------------------------------------------------------------
# generator


def gen_random_partial_2tree(
    n: int,
    delete_prob: float = 0.0,
    weight_range: tuple[int, int] = (1, 1),
    seed: int = 0,
) -> WeightedGraph:
    """Random partial 2-tree: grow a 2-tree, thin its edges, keep the largest piece.

    Each new vertex is attached to both ends of a uniformly chosen existing
    edge. Afterwards every edge is dropped with probability ``delete_prob``
    and the largest connected component is relabelled to ``0..n'-1`` in
    increasing original order.
    """
    if n < 3:
        raise InvalidParam("n must be at least 3")
    if not 0.0 <= delete_prob <= 1.0:
        raise InvalidParam("delete_prob must lie in [0, 1]")
    lo, hi = weight_range
    if lo > hi:
        raise InvalidParam(f"empty weight range ({lo}, {hi})")
    if lo < 0:
        raise InvalidParam("weights must be non-negative")
    rng = random.Random(seed)
    eu = [0, 1, 0]
    ev = [1, 2, 2]
    for x in range(3, n):
        i = rng.randrange(len(eu))
        a, b = eu[i], ev[i]
        eu.append(a)
        ev.append(x)
        eu.append(b)
        ev.append(x)
    if delete_prob > 0.0:
        keep = [i for i in range(len(eu)) if rng.random() >= delete_prob]
    else:
        keep = list(range(len(eu)))
    # largest component by union-find
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in keep:
        ra, rb = find(eu[i]), find(ev[i])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    sizes: dict[int, int] = {}
    for x in range(n):
        r = find(x)
        sizes[r] = sizes.get(r, 0) + 1
    best = min(sizes, key=lambda r: (-sizes[r], r))
    verts = [x for x in range(n) if find(x) == best]
    local = {x: i for i, x in enumerate(verts)}
    g = WeightedGraph(len(verts))
    for i in keep:
        a, b = eu[i], ev[i]
        if a in local and b in local:
            g._add(local[a], local[b], rng.randint(lo, hi), ORIGINAL, False)
    return g
