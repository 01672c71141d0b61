import pytest

from tw2mcb.errors import NotBiconnected, NotPartial2Tree, TooSmall
from tw2mcb.graph import from_edges
from tw2mcb.treedec import (
    SuitableTreeDecomposition,
    build_smooth_decomposition,
    decomposition_problems,
    make_suitable,
    suitable_decomposition,
    validate_decomposition,
)

from conftest import fan, random_biconnected, triangle, unit_k23


def _star_or_path(t, pair):
    return all(set(pair) <= set(bag) for bag in t.bags)


def test_triangle_single_bag():
    t = suitable_decomposition(triangle())
    assert t.bags == [(0, 1, 2)]
    assert t.parent == [-1] and t.children == [[]]


def test_k23_bags_share_branch_pair():
    g = unit_k23()
    t = build_smooth_decomposition(g)
    assert sorted(t.bags) == [(0, 1, 2), (0, 1, 3), (0, 1, 4)]
    assert all(t.label(b) in (None, (0, 1)) for b in range(3))
    s = make_suitable(t)
    assert validate_decomposition(g, s)
    # one bag is the father of the other two
    assert sorted(len(c) for c in s.children) == [0, 0, 2]


def test_fan_smooth():
    g = fan(5)
    t = build_smooth_decomposition(g)
    assert len(t.bags) == 3
    for b in range(3):
        if t.parent[b] >= 0:
            assert len(set(t.bags[b]) & set(t.bags[t.parent[b]])) == 2
    assert validate_decomposition(g, make_suitable(t))


def _chain(bags):
    k = len(bags)
    parent = [-1] + list(range(k - 1))
    children = [[i + 1] if i + 1 < k else [] for i in range(k)]
    return SuitableTreeDecomposition(list(bags), parent, children, 0, [])


def test_make_suitable_path_becomes_star():
    t = make_suitable(_chain([(0, 1, 2), (0, 1, 3), (0, 1, 4)]))
    assert t.children[0] == [1, 2]
    assert t.parent == [-1, 0, 0]


def test_make_suitable_chain_of_four():
    t = make_suitable(_chain([(0, 1, 2), (0, 1, 3), (0, 1, 4), (0, 1, 5)]))
    assert t.children[0] == [1, 2, 3]
    g = from_edges(6, [(0, x, 1) for x in range(2, 6)] + [(1, x, 1) for x in range(2, 6)])
    assert validate_decomposition(g, t)


def test_make_suitable_idempotent(rng):
    for _ in range(30):
        g = random_biconnected(rng, 30)
        t = suitable_decomposition(g)
        u = make_suitable(t.copy())
        assert (u.parent, u.children) == (t.parent, t.children)


def test_builder_errors():
    with pytest.raises(TooSmall):
        build_smooth_decomposition(from_edges(2, [(0, 1, 1)]))
    with pytest.raises(NotBiconnected):
        build_smooth_decomposition(from_edges(4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1)]))
    k4 = from_edges(4, [(a, b, 1) for a in range(4) for b in range(a + 1, 4)])
    with pytest.raises(NotPartial2Tree):
        build_smooth_decomposition(k4)


def test_validate_detects_missing_edge():
    g = fan(5)
    t = suitable_decomposition(g)
    assert validate_decomposition(g, t)
    # hub 0, rim 1-2-3-4: closing the rim adds an edge no bag holds
    closed = from_edges(5, [(g.eu[e], g.ev[e], 1) for e in range(g.m)] + [(1, 4, 1)])
    assert not validate_decomposition(closed, t)


def test_validate_detects_disconnected_vertex_bags():
    # vertex 9 in two bags that are not adjacent in the tree
    t = _chain([(0, 1, 9), (0, 1, 2), (1, 2, 9)])
    g = from_edges(10, [(0, 1, 1), (1, 9, 1), (0, 2, 1), (2, 9, 1)])
    problems = decomposition_problems(g, t)
    assert problems and any("subtree" in p or "9" in p for p in problems)


def test_bag_count_and_axioms_random(rng):
    for _ in range(1000):
        g = random_biconnected(rng, 20)
        t = suitable_decomposition(g)
        assert len(t.bags) == g.n - 2
        assert validate_decomposition(g, t)
        assert len(set(t.bags)) == len(t.bags)


def test_pair_chain_depth_at_most_two(rng):
    for _ in range(100):
        g = random_biconnected(rng, 40)
        t = suitable_decomposition(g)
        holders = {}
        for b, bag in enumerate(t.bags):
            for i in range(3):
                for j in range(i + 1, 3):
                    holders.setdefault((bag[i], bag[j]), []).append(b)
        for pair, bs in holders.items():
            tops = [b for b in bs if t.parent[b] not in bs]
            assert len(tops) == 1, pair
            assert all(t.parent[b] == tops[0] for b in bs if b != tops[0])


def test_dump_format():
    t = suitable_decomposition(unit_k23())
    lines = t.dump().splitlines()
    assert len(lines) == 3
    assert any(line.endswith("parent=-, label=-") for line in lines)
    assert sum("label=0,1" in line for line in lines) == 2
