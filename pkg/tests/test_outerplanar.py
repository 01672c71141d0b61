import pytest

from tw2mcb.errors import NotOuterplanar
from tw2mcb.graph import from_edges, gen_random_partial_2tree
from tw2mcb.outerplanar import internal_faces, order_cycle
from tw2mcb.reference import enumerate_lsc, gf2_rank, induced_cycles

from conftest import dijkstra, cycle_graph, fan, triangle, unit_k23


def _random_outerplanar(rng, n, wr=(1, 20)):
    """Polygon 0..n-1 with random non-crossing chords (plus optional pendant trees)."""
    edges = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}

    def split(lo, hi):
        if hi - lo < 2:
            return
        mid = rng.randint(lo + 1, hi - 1)
        if rng.random() < 0.7:
            edges.add((lo, mid))
        if rng.random() < 0.7:
            edges.add((mid, hi))
        split(lo, mid)
        split(mid, hi)

    split(0, n - 1)
    return from_edges(n, [(a, b, rng.randint(*wr)) for a, b in sorted(edges)])


def test_triangle_one_face():
    faces = internal_faces(triangle())
    assert len(faces) == 1 and faces[0].vertices == (0, 1, 2)


def test_square_with_chord():
    g = from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1), (0, 2, 1)])
    faces = sorted(f.vertices for f in internal_faces(g))
    assert faces == [(0, 1, 2), (0, 2, 3)]


def test_fan_faces():
    g = fan(7)
    faces = internal_faces(g)
    assert len(faces) == 5 and all(len(f) == 3 for f in faces)


def test_tree_and_bridges():
    g = from_edges(7, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 3, 1), (5, 6, 1)])
    assert len(internal_faces(g)) == 2
    assert internal_faces(from_edges(3, [(0, 1, 1), (1, 2, 1)])) == []


def test_rejects_k23_and_k4():
    with pytest.raises(NotOuterplanar):
        internal_faces(unit_k23())
    k4 = from_edges(4, [(a, b, 1) for a in range(4) for b in range(a + 1, 4)])
    with pytest.raises(NotOuterplanar):
        internal_faces(k4)


def test_order_cycle_canonical():
    g = cycle_graph(5)
    a = order_cycle(g, [3, 1, 4, 0, 2])
    b = order_cycle(g, list(range(5)))
    assert a == b and a.vertices == (0, 1, 2, 3, 4)
    assert a.weight(g) == 5


def tight_outerplanar(rng, n, wr=(1, 20)):
    """Random weights, then every long edge removed: outerplanar with tight edges."""
    g = _random_outerplanar(rng, n, wr)
    keep = [e for e in range(g.m) if g.ew[e] == dijkstra(g, g.eu[e])[g.ev[e]]]
    return g.subgraph(range(g.n), keep)[0]


def test_faces_match_induced_cycles_and_lsc(rng):
    for _ in range(150):
        g = tight_outerplanar(rng, rng.randint(3, 11), rng.choice([(1, 1), (1, 20)]))
        faces = {f.edge_set() for f in internal_faces(g)}
        assert len(faces) == g.m - g.n + 1
        assert faces == set(induced_cycles(g))
        assert faces == set(enumerate_lsc(g))


def test_faces_full_rank_on_parts(rng):
    from tw2mcb.assembly import minimum_cycle_basis

    for _ in range(100):
        g = gen_random_partial_2tree(rng.randint(3, 60), 0.15, (1, 10), rng.randrange(10**6))
        mcb = minimum_cycle_basis(g)
        for rec in mcb.parts:
            h = rec.part.graph
            sets = [f.edge_set() for f in rec.faces]
            rows = [sum(1 << e for e in s) for s in sets]
            assert len(set(sets)) == len(sets) == gf2_rank(rows)
            if h.n <= 12:
                assert set(sets) == set(induced_cycles(h))
