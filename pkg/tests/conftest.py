import heapq
import random

import pytest

from tw2mcb.graph import from_edges, gen_random_partial_2tree


def dijkstra(g, src):
    """Textbook single-source shortest paths (lazy deletion heap)."""
    dist = [None] * g.n
    dist[src] = 0
    heap = [(0, src)]
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist[x]:
            continue
        for e in g.adj[x]:
            y = g.other(e, x)
            nd = d + g.ew[e]
            if dist[y] is None or nd < dist[y]:
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return dist


def path_weight(g, path):
    total = 0
    for a, b in zip(path, path[1:]):
        e = g.edge_id(a, b)
        assert e is not None, f"({a}, {b}) is not an edge"
        total += g.ew[e]
    return total


def triangle(w=(1, 1, 1)):
    return from_edges(3, [(0, 1, w[0]), (1, 2, w[1]), (0, 2, w[2])])


def unit_k23():
    # branch vertices 0 and 1, legs 2, 3, 4
    return from_edges(5, [(0, 2, 1), (2, 1, 1), (0, 3, 1), (3, 1, 1), (0, 4, 1), (4, 1, 1)])


def cycle_graph(n, w=1):
    return from_edges(n, [(i, (i + 1) % n, w) for i in range(n)])


def fan(n):
    """2-tree fan: hub 0 joined to the path 1..n-1."""
    edges = [(0, i, 1) for i in range(1, n)] + [(i, i + 1, 1) for i in range(1, n - 1)]
    return from_edges(n, edges)


def random_biconnected(rng, n_max=12, delete_prob=0.2, wr=(1, 20)):
    """A random 2-connected partial 2-tree (the largest block of a generated graph)."""
    from tw2mcb.graph import biconnected_components

    while True:
        g = gen_random_partial_2tree(rng.randint(3, n_max), delete_prob, wr, rng.randrange(1 << 30))
        blocks = [b for b in biconnected_components(g) if len(b.vertices) >= 3]
        if blocks:
            b = max(blocks, key=lambda b: len(b.vertices))
            h, _, _ = g.subgraph(b.vertices, b.edges)
            return h


@pytest.fixture
def rng():
    return random.Random(20261018)
