"""Internal faces of outerplanar graphs by degree-2 ear absorption.

Within a 2-connected outerplanar block some vertex always has degree 2 and
lies on the outer cycle. Removing it and joining its two neighbours either
closes a face (the neighbours were already joined) or leaves a virtual edge
standing for the outer path just absorbed. Every internal face is closed
exactly once. A pair whose two sides have both been absorbed while other
vertices remain witnesses a K2,3 subdivision, and getting stuck without a
degree-2 vertex means a K4 subdivision; both raise :class:`NotOuterplanar`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotOuterplanar
from .graph import Weight, WeightedGraph, biconnected_components


@dataclass(frozen=True)
class FaceCycle:
    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def weight(self, g: WeightedGraph) -> Weight:
        return g.weight_of(self.edges)


def internal_faces(p) -> list[FaceCycle]:
    """Faces of an outerplanar graph (a :class:`WeightedGraph` or a part).

    The count equals ``m - n + c``. Blocks that are single edges contribute
    nothing.
    """
    g = p.graph if hasattr(p, "graph") else p
    faces: list[FaceCycle] = []
    for block in biconnected_components(g):
        if len(block.vertices) < 3:
            continue
        for edge_ids in _block_faces(g, block.vertices, block.edges):
            faces.append(order_cycle(g, edge_ids))
    return faces


def _block_faces(g: WeightedGraph, vertices, edges) -> list[list[int]]:
    # current edges: key (a, b) with a < b -> [rope, sides_closed]
    # rope: edge id (int) or a pair (rope, rope) concatenation
    cur: dict[tuple[int, int], list] = {}
    nbr: dict[int, set[int]] = {v: set() for v in vertices}
    for e in edges:
        a, b = g.eu[e], g.ev[e]
        if a > b:
            a, b = b, a
        cur[(a, b)] = [e, 0]
        nbr[a].add(b)
        nbr[b].add(a)
    alive = len(vertices)
    queue = deque(v for v in vertices if len(nbr[v]) == 2)
    removed = set()
    faces: list[list[int]] = []
    while alive > 2:
        if not queue:
            raise NotOuterplanar("no degree-2 vertex left (K4 subdivision)")
        x = queue.popleft()
        if x in removed or len(nbr[x]) != 2:
            if x not in removed and len(nbr[x]) < 2:
                raise NotOuterplanar(f"block is not 2-connected at vertex {x}")
            continue
        a, b = sorted(nbr[x])
        ra = cur.pop((min(a, x), max(a, x)))[0]
        rb = cur.pop((min(b, x), max(b, x)))[0]
        removed.add(x)
        alive -= 1
        nbr[a].discard(x)
        nbr[b].discard(x)
        nbr[x] = set()
        absorbed = (ra, rb)
        key = (a, b)
        if key in cur:
            slot = cur[key]
            slot[1] += 1
            if slot[1] >= 2 and alive > 2:
                raise NotOuterplanar(f"pair ({a}, {b}) separates three regions (K2,3 subdivision)")
            # a real chord keeps standing for itself on its remaining side
            faces.append(_flatten((slot[0], absorbed)))
            for y in (a, b):
                if len(nbr[y]) == 2:
                    queue.append(y)
        else:
            cur[key] = [absorbed, 1]
            nbr[a].add(b)
            nbr[b].add(a)
    return faces


def _flatten(rope) -> list[int]:
    out = []
    stack = [rope]
    while stack:
        r = stack.pop()
        if isinstance(r, int):
            out.append(r)
        else:
            stack.append(r[1])
            stack.append(r[0])
    return out


def order_cycle(g: WeightedGraph, edge_ids) -> FaceCycle:
    """Arrange the edges of a simple cycle in traversal order.

    The walk starts at the smallest vertex and heads toward its smaller
    neighbour, so equal edge sets always give identical tuples.
    """
    inc: dict[int, list[int]] = {}
    for e in edge_ids:
        inc.setdefault(g.eu[e], []).append(e)
        inc.setdefault(g.ev[e], []).append(e)
    if any(len(es) != 2 for es in inc.values()) or len(inc) != len(edge_ids):
        raise NotOuterplanar("face boundary is not a simple cycle")
    start = min(inc)
    e1, e2 = inc[start]
    if g.other(e2, start) < g.other(e1, start):
        e1 = e2
    verts = [start]
    order = [e1]
    x = g.other(e1, start)
    prev = e1
    while x != start:
        verts.append(x)
        a, b = inc[x]
        nxt = b if a == prev else a
        order.append(nxt)
        prev = nxt
        x = g.other(nxt, x)
    if len(order) != len(edge_ids):
        raise NotOuterplanar("face boundary is not a single cycle")
    return FaceCycle(tuple(order), tuple(verts))
