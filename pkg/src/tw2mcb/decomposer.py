"""Split a long-edge-free 2-connected partial 2-tree into outerplanar parts.

Separator pairs {u, v} with three or more bags are found by grouping, at each
bag, the children whose links carry the same label. Those links are cut. If
{u, v} is not an edge, one side keeps a shortest u-v path and every other
side receives a green placeholder edge weighing the u-v distance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalError
from .graph import GREEN, ORIGINAL, Weight, WeightedGraph, format_weight
from .oracle import DistanceOracle
from .treedec import SuitableTreeDecomposition


@dataclass
class SeparatorEvent:
    u: int
    v: int
    parent_bag: int
    child_bags: tuple[int, ...]
    had_edge: bool
    path_weight: Weight | None = None
    # 1-based: 1 is the side of parent_bag, i >= 2 the subtree of child_bags[i-2]
    j: int | None = None
    # part index -> green edge id inside that part, filled by extract_part_graphs
    green_edge_ids: dict[int, int] = field(default_factory=dict)

    @property
    def k(self) -> int:
        return 1 + len(self.child_bags)

    def side_bags(self) -> tuple[int, ...]:
        return (self.parent_bag,) + self.child_bags

    def line(self, vmap=None) -> str:
        u, v = (self.u, self.v) if vmap is None else (vmap[self.u], vmap[self.v])
        w = "-" if self.path_weight is None else format_weight(self.path_weight)
        j = "-" if self.j is None else str(self.j)
        return f"s u={u} v={v} k={self.k} edge={int(self.had_edge)} w={w} j={j}"


@dataclass
class DecompositionTrace:
    events: list[SeparatorEvent] = field(default_factory=list)
    long_edges: list[int] = field(default_factory=list)
    # bag and child visits made by run_decomposition
    ops: int = 0

    def __len__(self) -> int:
        return len(self.events)

    def dump(self) -> str:
        return "".join(e.line() + "\n" for e in self.events)


@dataclass
class Forest:
    """Decomposition tree after cutting separator links."""

    part_of_bag: list[int]
    tops: list[int]
    cut: list[bool]

    @property
    def part_count(self) -> int:
        return len(self.tops)


@dataclass
class GreenEdge:
    u: int
    v: int
    w: Weight
    event: int
    bag: int


@dataclass
class PartGraph:
    """One outerplanar piece.

    ``graph`` is relabelled to ``0..n_p-1``; ``vmap`` maps back to the
    vertices of the graph that was decomposed. ``origin[e]`` is the source
    edge id for original edges and ``-1 - event`` for green ones.
    """

    index: int
    graph: WeightedGraph
    vmap: list[int]
    origin: list[int]
    bags: list[int]

    def is_green(self, e: int) -> bool:
        return self.origin[e] < 0

    def event_of(self, e: int) -> int:
        return -1 - self.origin[e]

    @property
    def green_count(self) -> int:
        return sum(1 for o in self.origin if o < 0)


def find_long_edges(g: WeightedGraph, o: DistanceOracle) -> list[int]:
    """Edges strictly heavier than the distance between their endpoints."""
    t = o.tree
    long = []
    for e, (u, v, w) in enumerate(zip(g.eu, g.ev, g.ew)):
        if w > o.distance(u, v, t.pair_bag(u, v)):
            long.append(e)
    return long


def run_decomposition(
    g: WeightedGraph, t: SuitableTreeDecomposition, o: DistanceOracle
) -> tuple[Forest, DecompositionTrace, list[GreenEdge]]:
    """Cut every separator star of >= 3 bags and place green edges.

    Bags are visited in preorder. Returns the resulting forest, the trace of
    separator events, and the green edges (attached to bags; parts are
    assigned later).
    """
    bags, children = t.bags, t.children
    trace = DecompositionTrace()
    greens: list[GreenEdge] = []
    cut = [False] * len(bags)
    routing = o.routing
    ops = 0
    for y1 in t.preorder():
        kids = children[y1]
        ops += 1 + len(kids)
        if len(kids) < 2:
            continue
        groups: dict[tuple, list[int]] = {}
        bag = bags[y1]
        for c in kids:
            lab = tuple(x for x in bags[c] if x in bag)
            groups.setdefault(lab, []).append(c)
        for (u, v), members in sorted(groups.items()):
            if len(members) < 2:
                continue
            for c in members:
                cut[c] = True
            event = SeparatorEvent(u, v, y1, tuple(members), g.has_edge(u, v))
            eid = len(trace.events)
            trace.events.append(event)
            if event.had_edge:
                continue
            event.path_weight = o.distance(u, v, y1)
            iv = o.intermediate_vertex(u, v, y1)
            if iv is None:
                raise InternalError(f"no intermediate vertex for non-adjacent pair ({u}, {v})")
            _, where = iv
            j = 1
            for i, c in enumerate(members, start=2):
                if routing.in_subtree(c, where):
                    j = i
                    break
            event.j = j
            for h, side in enumerate(event.side_bags(), start=1):
                if h != j:
                    greens.append(GreenEdge(u, v, event.path_weight, eid, side))
    trace.ops = ops
    forest = _components(t, cut)
    return forest, trace, greens


def _components(t: SuitableTreeDecomposition, cut: list[bool]) -> Forest:
    part_of_bag = [-1] * len(t.bags)
    tops = []
    for b in t.preorder():
        if b == t.root or cut[b]:
            part_of_bag[b] = len(tops)
            tops.append(b)
        else:
            part_of_bag[b] = part_of_bag[t.parent[b]]
    return Forest(part_of_bag, tops, cut)


def extract_part_graphs(
    g: WeightedGraph,
    t: SuitableTreeDecomposition,
    forest: Forest,
    trace: DecompositionTrace,
    greens: list[GreenEdge],
) -> list[PartGraph]:
    """Collect each part's vertices, original edges and green edges.

    An original edge belongs to the part holding the bag that contains it;
    a separator edge (``had_edge`` events) belongs to every side.
    """
    nparts = forest.part_count
    part_bags: list[list[int]] = [[] for _ in range(nparts)]
    for b, p in enumerate(forest.part_of_bag):
        part_bags[p].append(b)
    part_edges: list[list[int]] = [[] for _ in range(nparts)]
    for e, (u, v) in enumerate(zip(g.eu, g.ev)):
        part_edges[forest.part_of_bag[t.pair_bag(u, v)]].append(e)
    for ev in trace.events:
        if ev.had_edge:
            e = g.edge_id(ev.u, ev.v)
            home = forest.part_of_bag[t.pair_bag(ev.u, ev.v)]
            for side in ev.side_bags():
                p = forest.part_of_bag[side]
                if p != home:
                    part_edges[p].append(e)
    part_greens: list[list[GreenEdge]] = [[] for _ in range(nparts)]
    for ge in greens:
        part_greens[forest.part_of_bag[ge.bag]].append(ge)

    parts = []
    for p in range(nparts):
        verts = sorted({x for b in part_bags[p] for x in t.bags[b]})
        local = {x: i for i, x in enumerate(verts)}
        h = WeightedGraph(len(verts))
        origin = []
        for e in sorted(part_edges[p]):
            h._add(local[g.eu[e]], local[g.ev[e]], g.ew[e], ORIGINAL, False)
            origin.append(e)
        for ge in part_greens[p]:
            gid = h._add(local[ge.u], local[ge.v], ge.w, GREEN, False)
            origin.append(-1 - ge.event)
            trace.events[ge.event].green_edge_ids[p] = gid
        parts.append(PartGraph(p, h, verts, origin, sorted(part_bags[p])))
    return parts


def decompose(g: WeightedGraph, t: SuitableTreeDecomposition, o: DistanceOracle):
    """Run detection and part extraction in one go."""
    forest, trace, greens = run_decomposition(g, t, o)
    parts = extract_part_graphs(g, t, forest, trace, greens)
    return forest, trace, parts
