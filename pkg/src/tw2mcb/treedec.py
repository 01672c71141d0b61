"""Smooth and suitable width-2 tree decompositions.

Bags are sorted vertex triples. The tree is stored as parent/children
arrays; the label of the link above bag ``b`` is the pair ``bag[b] &
bag[parent[b]]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotBiconnected, NotPartial2Tree, TooSmall
from .graph import WeightedGraph, biconnected_components, eliminate

Bag = tuple  # sorted (a, b, c)


@dataclass
class SuitableTreeDecomposition:
    bags: list[Bag]
    parent: list[int]
    children: list[list[int]]
    root: int
    # home[v] is the bag created when v was eliminated (or the root for the
    # last three vertices); elim[b] is the elimination step that created bag
    # b. The edge {a, b} lies in whichever of home[a], home[b] came first.
    home: list[int] = field(default_factory=list)
    elim: list[int] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.bags)

    def label(self, b: int) -> tuple[int, int] | None:
        p = self.parent[b]
        if p < 0:
            return None
        return _shared(self.bags[b], self.bags[p])

    def pair_bag(self, u: int, v: int) -> int:
        """A bag containing the pair, valid whenever {u, v} was an edge or
        a virtual edge of the elimination."""
        bu, bv = self.home[u], self.home[v]
        if self.elim:
            b = bu if self.elim[bu] <= self.elim[bv] else bv
        else:
            b = min(bu, bv)
        bag = self.bags[b]
        if u not in bag or v not in bag:
            raise KeyError((u, v))
        return b

    def preorder(self) -> list[int]:
        out = []
        stack = [self.root]
        while stack:
            b = stack.pop()
            out.append(b)
            stack.extend(reversed(self.children[b]))
        return out

    def copy(self) -> "SuitableTreeDecomposition":
        return SuitableTreeDecomposition(
            list(self.bags),
            list(self.parent),
            [list(c) for c in self.children],
            self.root,
            list(self.home),
            list(self.elim),
        )

    def dump(self) -> str:
        lines = []
        for b, bag in enumerate(self.bags):
            p = self.parent[b]
            lab = self.label(b)
            ptxt = "-" if p < 0 else str(p)
            ltxt = "-" if lab is None else f"{lab[0]},{lab[1]}"
            lines.append(f"b {b} {bag[0]} {bag[1]} {bag[2]} parent={ptxt}, label={ltxt}")
        return "\n".join(lines) + "\n"


def _shared(x: Bag, y: Bag) -> tuple:
    return tuple(v for v in x if v in y)


def build_smooth_decomposition(g: WeightedGraph, *, known_biconnected: bool = False) -> SuitableTreeDecomposition:
    """Smooth rooted decomposition with ``n - 2`` bags from the elimination order.

    Eliminating x with neighbours {a, b} creates bag {x, a, b}; its parent is
    the first later bag that contains both a and b, i.e. the bag of whichever
    of a, b goes first (or the final triangle).

    ``known_biconnected`` skips the articulation-point check for graphs that
    come straight out of a block split.
    """
    if g.n < 3:
        raise TooSmall(f"need at least 3 vertices, got {g.n}")
    if not known_biconnected and not _is_biconnected_fast(g):
        raise NotBiconnected("graph has an articulation point")
    elim = eliminate(g, stop_at=3)
    if len(elim.remaining) != 3:
        raise NotPartial2Tree("degree-2 elimination got stuck")

    nb = g.n - 2
    root = nb - 1
    home = [root] * g.n
    bags: list[Bag] = [()] * nb
    for i, (x, ns) in enumerate(elim.order):
        home[x] = i
        bags[i] = tuple(sorted((x,) + ns))
    bags[root] = tuple(sorted(elim.remaining))
    parent = [-1] * nb
    children: list[list[int]] = [[] for _ in range(nb)]
    for i, (x, (u, v)) in enumerate(elim.order):
        p = min(home[u], home[v])
        parent[i] = p
        children[p].append(i)
    return SuitableTreeDecomposition(bags, parent, children, root, home, list(range(nb)))


def _is_biconnected_fast(g: WeightedGraph) -> bool:
    split = biconnected_components(g)
    return len(split) == 1 and len(split[0].vertices) == g.n


def make_suitable(t: SuitableTreeDecomposition) -> SuitableTreeDecomposition:
    """Hoist children so that equally labelled links share a father.

    Visiting fathers before children, whenever links (A, B) and (B, C) carry
    the same label, C is re-attached under A. The result is renumbered in
    preorder (root 0, children in increasing id order) so that the tree
    sweeps downstream walk the bag arrays sequentially.
    """
    t = t.copy()
    bags, parent, children = t.bags, t.parent, t.children
    stack = [t.root]
    while stack:
        b = stack.pop()
        p = parent[b]
        if p >= 0:
            lab = _shared(bags[b], bags[p])
            moved = [c for c in children[b] if _shared(bags[c], bags[b]) == lab]
            if moved:
                children[b] = [c for c in children[b] if _shared(bags[c], bags[b]) != lab]
                for c in moved:
                    parent[c] = p
                children[p].extend(moved)
                # hoisted bags still need their own visit
                stack.extend(moved)
        stack.extend(children[b])
    for c in children:
        c.sort()
    return _renumber_preorder(t)


def _renumber_preorder(t: SuitableTreeDecomposition) -> SuitableTreeDecomposition:
    order = t.preorder()
    new = [0] * len(order)
    for i, b in enumerate(order):
        new[b] = i
    elim = t.elim if t.elim else list(range(len(order)))
    return SuitableTreeDecomposition(
        [t.bags[b] for b in order],
        [-1 if t.parent[b] < 0 else new[t.parent[b]] for b in order],
        [[new[c] for c in t.children[b]] for b in order],
        0,
        [new[b] for b in t.home],
        [elim[b] for b in order],
    )


def suitable_decomposition(g: WeightedGraph, *, known_biconnected: bool = False) -> SuitableTreeDecomposition:
    return make_suitable(build_smooth_decomposition(g, known_biconnected=known_biconnected))


def validate_decomposition(g: WeightedGraph, t: SuitableTreeDecomposition) -> bool:
    return not decomposition_problems(g, t)


def decomposition_problems(g: WeightedGraph, t: SuitableTreeDecomposition) -> list[str]:
    """List every violated property (empty when the decomposition is suitable)."""
    problems = []
    nb = len(t.bags)
    if nb == 0:
        return ["no bags"]
    if len(t.parent) != nb or len(t.children) != nb:
        return ["parent/children arrays have the wrong length"]
    for b, bag in enumerate(t.bags):
        if len(bag) != 3 or len(set(bag)) != 3:
            problems.append(f"bag {b} is not 3 distinct vertices")
    if problems:
        return problems
    # tree shape
    if not (0 <= t.root < nb) or t.parent[t.root] != -1:
        problems.append("root is missing or has a parent")
        return problems
    listed = 0
    for p, kids in enumerate(t.children):
        for c in kids:
            listed += 1
            if not (0 <= c < nb) or t.parent[c] != p:
                problems.append(f"bag {c}: parent/children mismatch")
                return problems
    if listed != nb - 1:
        problems.append("parent/children mismatch")
        return problems
    seen = [False] * nb
    stack = [t.root]
    count = 0
    while stack:
        b = stack.pop()
        if seen[b]:
            problems.append("cycle in tree")
            return problems
        seen[b] = True
        count += 1
        stack.extend(t.children[b])
    if count != nb:
        problems.append("tree is not connected")
        return problems
    # coverage
    covered = set()
    for bag in t.bags:
        covered.update(bag)
    if covered != set(range(g.n)):
        problems.append("bags do not cover the vertex set")
    # edge containment
    pairs = set()
    for a, b, c in t.bags:
        pairs.update(((a, b), (a, c), (b, c)))
    for u, v in zip(g.eu, g.ev):
        if (min(u, v), max(u, v)) not in pairs:
            problems.append(f"edge ({u}, {v}) in no bag")
    # subtree property: per vertex, #links inside == #bags - 1
    bag_count: dict[int, int] = {}
    link_count: dict[int, int] = {}
    for b, bag in enumerate(t.bags):
        for v in bag:
            bag_count[v] = bag_count.get(v, 0) + 1
        p = t.parent[b]
        if p >= 0:
            shared = _shared(bag, t.bags[p])
            for v in shared:
                link_count[v] = link_count.get(v, 0) + 1
            if len(shared) != 2:
                problems.append(f"link ({p}, {b}) is not smooth")
    for v, k in bag_count.items():
        if link_count.get(v, 0) != k - 1:
            problems.append(f"bags containing vertex {v} are not connected")
    # suitability
    father_of_label: dict[tuple, int] = {}
    for b in range(nb):
        p = t.parent[b]
        if p < 0:
            continue
        lab = _shared(t.bags[b], t.bags[p])
        if father_of_label.setdefault(lab, p) != p:
            problems.append(f"label {lab} occurs under two different fathers")
    return problems
