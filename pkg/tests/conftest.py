from itertools import combinations

import networkx as nx

from effdom.graph import build_graph, complete_graph, cycle_graph, path_graph
from effdom.hypergraph import Hypergraph


def all_graphs(n):
    """Every labelled graph on 1..n."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def small_graphs(max_n=5):
    for n in range(0, max_n + 1):
        yield from all_graphs(n)


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges())
    return G


def hyp(*edges, n=None):
    n = n if n is not None else max(max(e) for e in edges)
    return Hypergraph(n, tuple(tuple(sorted(e)) for e in edges))


P3 = path_graph(3)
P4 = path_graph(4)
C4 = cycle_graph(4)
C5 = cycle_graph(5)
K1 = build_graph(1, [])
K2 = complete_graph(2)
K3 = complete_graph(3)
K4 = complete_graph(4)
TWO_K2 = build_graph(4, [(1, 2), (3, 4)])
# mid-edge 2-3 is shared by triangles 1-2-3 and 2-3-4
DIAMOND = build_graph(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
# hub 5 over the path 1-2-3-4
GEM = build_graph(5, [(1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)])
# hub 5 over the cycle 1-2-3-4
W4 = build_graph(5, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)])


def star(k):
    return build_graph(k + 1, [(1, i) for i in range(2, k + 2)])
