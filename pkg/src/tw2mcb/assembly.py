"""End-to-end pipeline and the implicit/explicit basis representations.

The pipeline works block by block: each 2-connected block of the input gets
a suitable decomposition and a distance oracle, long edges are peeled off,
and what remains is split again into 2-connected pieces that are decomposed
into outerplanar parts. Faces of the parts plus one cycle per long edge form
the basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .decomposer import (
    DecompositionTrace,
    PartGraph,
    SeparatorEvent,
    decompose,
    find_long_edges,
)
from .errors import ExpansionNotSimple
from .graph import (
    Weight,
    WeightedGraph,
    biconnected_components,
    format_weight,
)
from .oracle import DistanceOracle, build_oracle
from .outerplanar import FaceCycle, internal_faces
from .treedec import SuitableTreeDecomposition, suitable_decomposition


@dataclass
class Piece:
    """A 2-connected subgraph with its own decomposition and oracle.

    ``vmap``/``emap`` translate local ids back to the input graph.
    """

    graph: WeightedGraph
    vmap: list[int]
    emap: list[int]
    tree: SuitableTreeDecomposition
    oracle: DistanceOracle
    trace: DecompositionTrace = field(default_factory=DecompositionTrace)
    event_offset: int = 0


@dataclass
class PartRecord:
    index: int
    piece: int
    part: PartGraph
    faces: list[FaceCycle]

    def global_vertex(self, pieces: list[Piece], x: int) -> int:
        return pieces[self.piece].vmap[self.part.vmap[x]]


@dataclass
class LongEdgeStub:
    edge: int
    u: int
    v: int
    w: Weight
    block: int  # index into ImplicitMCB.blocks
    local_u: int
    local_v: int
    bag: int


@dataclass(frozen=True)
class ExplicitCycle:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    weight: Weight

    def line(self) -> str:
        vs = " ".join(map(str, self.vertices))
        return f"c {len(self.vertices)} {vs} w={format_weight(self.weight)}"


@dataclass
class ImplicitMCB:
    graph: WeightedGraph
    blocks: list[Piece]
    pieces: list[Piece]
    parts: list[PartRecord]
    long_edges: list[LongEdgeStub]

    @property
    def trace(self) -> DecompositionTrace:
        """All separator events relabelled to input ids, plus the long edges."""
        out = DecompositionTrace(long_edges=[s.edge for s in self.long_edges])
        for pc in self.pieces:
            vm = pc.vmap
            for ev in pc.trace.events:
                out.events.append(
                    SeparatorEvent(
                        vm[ev.u], vm[ev.v], ev.parent_bag, ev.child_bags,
                        ev.had_edge, ev.path_weight, ev.j, dict(ev.green_edge_ids),
                    )
                )
        return out

    @property
    def cycle_count(self) -> int:
        return sum(len(p.faces) for p in self.parts) + len(self.long_edges)

    @property
    def implicit_size(self) -> int:
        faces = sum(len(f) for p in self.parts for f in p.faces)
        return faces + sum(len(pc.trace) for pc in self.pieces) + len(self.long_edges)

    def total_weight(self) -> Weight:
        total: Weight = 0
        for p in self.parts:
            g = p.part.graph
            for f in p.faces:
                total += f.weight(g)
        for s in self.long_edges:
            total += s.w + self.blocks[s.block].oracle.distance(s.local_u, s.local_v, s.bag)
        return total

    def explicit_size(self) -> int:
        """Edge count of the expanded basis, computed without expanding."""
        size = 0
        for p in self.parts:
            pc = self.pieces[p.piece]
            part = p.part
            for f in p.faces:
                for e in f.edges:
                    if part.is_green(e):
                        ev = pc.trace.events[part.event_of(e)]
                        size += pc.oracle.path_edge_count(ev.u, ev.v, ev.parent_bag)
                    else:
                        size += 1
        for s in self.long_edges:
            size += 1 + self.blocks[s.block].oracle.path_edge_count(s.local_u, s.local_v, s.bag)
        return size

    def stats(self) -> dict:
        return {
            "n": self.graph.n,
            "m": self.graph.m,
            "long": len(self.long_edges),
            "parts": len(self.parts),
            "cycles": self.cycle_count,
            "total_weight": self.total_weight(),
            "implicit_size": self.implicit_size,
            "explicit_size": self.explicit_size(),
        }


# ---------------------------------------------------------------------------
# pipeline


def _make_piece(g: WeightedGraph, vmap: list[int], emap: list[int], check: bool) -> Piece:
    t = suitable_decomposition(g, known_biconnected=True)
    return Piece(g, vmap, emap, t, build_oracle(g, t, check=check))


def minimum_cycle_basis(g: WeightedGraph, *, check: bool = False) -> ImplicitMCB:
    """Compute the implicit minimum cycle basis of a weighted partial 2-tree.

    ``check=True`` validates every decomposition before building its oracle
    (linear, but roughly doubles the preprocessing cost).
    """
    # treewidth is the maximum over blocks, so each block's own elimination
    # doubles as the recognition step (NotPartial2Tree propagates from it)
    blocks: list[Piece] = []
    pieces: list[Piece] = []
    stubs: list[LongEdgeStub] = []
    for block in biconnected_components(g):
        if len(block.vertices) < 3:
            continue
        bg, vmap, emap = g.subgraph(block.vertices, block.edges)
        bp = _make_piece(bg, vmap, emap, check)
        long_local = find_long_edges(bg, bp.oracle)
        if not long_local:
            pieces.append(bp)
            continue
        bi = len(blocks)
        blocks.append(bp)
        for e in long_local:
            u, v = bg.eu[e], bg.ev[e]
            stubs.append(
                LongEdgeStub(emap[e], vmap[u], vmap[v], bg.ew[e], bi, u, v, bp.tree.pair_bag(u, v))
            )
        drop = set(long_local)
        kept = [e for e in range(bg.m) if e not in drop]
        rest, rvmap, remap = bg.subgraph(range(bg.n), kept)
        for sub in biconnected_components(rest):
            if len(sub.vertices) < 3:
                continue
            sg, svmap, semap = rest.subgraph(sub.vertices, sub.edges)
            pieces.append(
                _make_piece(sg, [vmap[rvmap[x]] for x in svmap], [emap[remap[e]] for e in semap], check)
            )
    stubs.sort(key=lambda s: s.edge)

    parts: list[PartRecord] = []
    offset = 0
    for pi, pc in enumerate(pieces):
        _, trace, part_graphs = decompose(pc.graph, pc.tree, pc.oracle)
        pc.trace = trace
        pc.event_offset = offset
        offset += len(trace)
        for part in part_graphs:
            parts.append(PartRecord(len(parts), pi, part, internal_faces(part)))
    return ImplicitMCB(g, blocks, pieces, parts, stubs)


# ---------------------------------------------------------------------------
# expansion


def expand_cycle(mcb: ImplicitMCB, record: PartRecord, face: FaceCycle) -> ExplicitCycle:
    """Replace each green edge of ``face`` by its shortest path in the piece."""
    pc = mcb.pieces[record.piece]
    part = record.part
    pg = part.graph
    pvm = part.vmap
    og = pc.graph
    seq: list[int] = []  # piece-local vertices
    edges: list[int] = []  # piece-local edge ids
    verts = face.vertices
    for i, e in enumerate(face.edges):
        a = pvm[verts[i]]
        if part.is_green(e):
            ev = pc.trace.events[part.event_of(e)]
            path = pc.oracle.extract_shortest_path(ev.u, ev.v, ev.parent_bag)
            if path[0] != a:
                path.reverse()
            for x, y in zip(path, path[1:]):
                seq.append(x)
                edges.append(og.edge_id(x, y))
        else:
            seq.append(a)
            edges.append(part.origin[e])
    gv = [pc.vmap[x] for x in seq]
    ge = [pc.emap[e] for e in edges]
    weight = face.weight(pg)
    return _canonical(gv, ge, weight)


def expand_long_edge(mcb: ImplicitMCB, stub: LongEdgeStub) -> ExplicitCycle:
    blk = mcb.blocks[stub.block]
    path = blk.oracle.extract_shortest_path(stub.local_u, stub.local_v, stub.bag)
    g = blk.graph
    seq = list(path)
    edges = [g.edge_id(x, y) for x, y in zip(path, path[1:])]
    edges.append(g.edge_id(stub.local_v, stub.local_u))
    gv = [blk.vmap[x] for x in seq]
    ge = [blk.emap[e] for e in edges]
    return _canonical(gv, ge, stub.w + blk.oracle.distance(stub.local_u, stub.local_v, stub.bag))


def _canonical(verts: list[int], edges: list[int], weight: Weight) -> ExplicitCycle:
    """Rotate so the smallest vertex leads and its smaller neighbour follows.

    ``edges[i]`` joins ``verts[i]`` and ``verts[i + 1]`` (cyclically).
    """
    k = len(verts)
    if len(set(verts)) != k or k < 3:
        raise ExpansionNotSimple(f"expanded cycle repeats a vertex: {verts}")
    i = verts.index(min(verts))
    if verts[(i - 1) % k] < verts[(i + 1) % k]:
        verts = verts[::-1]
        # edge between reversed neighbours: shift so edges[i] joins verts[i], verts[i+1]
        edges = edges[::-1]
        edges = edges[1:] + edges[:1]
        i = k - 1 - i
    verts = verts[i:] + verts[:i]
    edges = edges[i:] + edges[:i]
    return ExplicitCycle(tuple(verts), tuple(edges), weight)


def report_explicit(mcb: ImplicitMCB) -> list[ExplicitCycle]:
    """Expand every face and complete every long edge to its cycle."""
    out = []
    for record in mcb.parts:
        for face in record.faces:
            out.append(expand_cycle(mcb, record, face))
    for stub in mcb.long_edges:
        out.append(expand_long_edge(mcb, stub))
    return out


# ---------------------------------------------------------------------------
# serialization


def _weight_json(w: Weight):
    return w if isinstance(w, int) else format_weight(w)


def format_implicit(mcb: ImplicitMCB) -> str:
    lines = []
    for record in mcb.parts:
        part = record.part
        pg = part.graph
        lines.append(f"PART {record.index}")
        for e in range(pg.m):
            if part.is_green(e):
                u = record.global_vertex(mcb.pieces, pg.eu[e])
                v = record.global_vertex(mcb.pieces, pg.ev[e])
                a, b = min(u, v), max(u, v)
                lines.append(f"G {a} {b} {format_weight(pg.ew[e])}")
        for face in record.faces:
            vs = " ".join(str(record.global_vertex(mcb.pieces, x)) for x in face.vertices)
            lines.append(f"f {len(face.vertices)} {vs}")
    lines.append("TRACE")
    lines.extend(ev.line() for ev in mcb.trace.events)
    lines.append("LONG")
    for s in mcb.long_edges:
        lines.append(f"l {s.u} {s.v} {format_weight(s.w)}")
    return "\n".join(lines) + "\n"


def format_explicit(cycles: list[ExplicitCycle]) -> str:
    return "".join(c.line() + "\n" for c in cycles)


def format_stats(stats: dict) -> str:
    return "".join(
        f"{k}={format_weight(v) if k == 'total_weight' else v}\n" for k, v in stats.items()
    )


def implicit_document(mcb: ImplicitMCB) -> dict:
    parts = []
    for record in mcb.parts:
        part = record.part
        pg = part.graph
        gv = lambda x: record.global_vertex(mcb.pieces, x)  # noqa: E731
        green = []
        for e in range(pg.m):
            if part.is_green(e):
                u, v = gv(pg.eu[e]), gv(pg.ev[e])
                green.append({"u": min(u, v), "v": max(u, v), "w": _weight_json(pg.ew[e])})
        faces = [[gv(x) for x in f.vertices] for f in record.faces]
        parts.append({"part": record.index, "green": green, "faces": faces})
    trace = [
        {
            "u": ev.u,
            "v": ev.v,
            "k": ev.k,
            "edge": int(ev.had_edge),
            "w": None if ev.path_weight is None else _weight_json(ev.path_weight),
            "j": ev.j,
        }
        for ev in mcb.trace.events
    ]
    long = [{"u": s.u, "v": s.v, "w": _weight_json(s.w)} for s in mcb.long_edges]
    return {"parts": parts, "trace": trace, "long": long}


def explicit_document(cycles: list[ExplicitCycle]) -> dict:
    return {
        "cycles": [
            {"k": len(c.vertices), "vertices": list(c.vertices), "w": _weight_json(c.weight)}
            for c in cycles
        ]
    }


def stats_document(stats: dict) -> dict:
    return {k: _weight_json(v) if k == "total_weight" else v for k, v in stats.items()}


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
