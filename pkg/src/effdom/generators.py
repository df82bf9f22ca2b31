"""Seeded random instances for every class the solvers dispatch on.

All randomness comes from :class:`~effdom.rng.SeededRng`, so an instance is a
pure function of its arguments. Each generator asserts its class membership
before returning.
"""
from __future__ import annotations

from .graph import Graph, build_graph
from .hypergraph import Hypergraph, dual, is_alpha_acyclic, is_hypertree, two_section
from .orderings import is_chordal, is_dually_chordal
from .rng import SeededRng


def random_tree(n: int, rng: SeededRng) -> list[tuple[int, int]]:
    """Random recursive tree on shuffled labels ``1..n``."""
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    return [(labels[rng.below(i)], labels[i]) for i in range(1, n)]


def _tree_adj(n, tree_edges):
    adj = [[] for _ in range(n + 1)]
    for a, b in tree_edges:
        adj[a].append(b)
        adj[b].append(a)
    for a in adj:
        a.sort()
    return adj


def random_subtree(adj, size: int, rng: SeededRng) -> list[int]:
    """Connected vertex set grown from a random root by random frontier picks."""
    n = len(adj) - 1
    root = rng.between(1, n)
    chosen = {root}
    frontier = list(adj[root])
    while frontier and len(chosen) < size:
        x = frontier.pop(rng.below(len(frontier)))
        if x in chosen:
            continue
        chosen.add(x)
        frontier.extend(y for y in adj[x] if y not in chosen)
    return sorted(chosen)


def _hypertree_parts(n, m, seed, max_edge_size=None, cover=False):
    rng = SeededRng(seed)
    tree = random_tree(n, rng)
    adj = _tree_adj(n, tree)
    cap = max_edge_size or max(1, min(n, 4))
    edges = [random_subtree(adj, rng.between(1, cap), rng) for _ in range(m)]
    if cover and m:
        holder = [[] for _ in range(n + 1)]
        for i, e in enumerate(edges):
            for v in e:
                holder[v].append(i)
        # attach each uncovered vertex to a hyperedge holding a tree neighbour
        pending = [v for v in range(1, n + 1) if not holder[v]]
        while pending:
            rest = []
            for v in pending:
                hosts = [i for y in adj[v] for i in holder[y]]
                if not hosts:
                    rest.append(v)
                    continue
                i = hosts[rng.below(len(hosts))]
                edges[i] = sorted(edges[i] + [v])
                holder[v].append(i)
            pending = rest
    return tree, edges


def gen_hypertree(n: int, m: int, seed: int, max_edge_size: int | None = None,
                  cover: bool = False) -> Hypergraph:
    """Hyperedges are random subtrees of a random tree on ``1..n``.

    ``max_edge_size`` caps subtree sizes (default ``min(n, 4)``); with
    ``cover`` every vertex is added to some hyperedge, keeping each connected.
    """
    if n < 1 or m < 1:
        raise ValueError("gen_hypertree needs n >= 1 and m >= 1")
    _, edges = _hypertree_parts(n, m, seed, max_edge_size, cover)
    h = Hypergraph(n, tuple(tuple(e) for e in edges))
    assert is_hypertree(h).verdict
    return h


def gen_dually_chordal(n: int, m: int, seed: int, max_edge_size: int | None = None,
                       check: bool = True) -> Graph:
    """2-section of a random hypertree plus its host tree's edges (hence connected)."""
    if n < 1:
        raise ValueError("gen_dually_chordal needs n >= 1")
    tree, edges = _hypertree_parts(n, m, seed, max_edge_size)
    pairs = set()
    for e in edges:
        for i, a in enumerate(e):
            for b in e[i + 1:]:
                pairs.add((a, b))
    pairs.update(tuple(sorted(t)) for t in tree)
    g = build_graph(n, sorted(pairs))
    if check:
        assert is_dually_chordal(g).verdict
    return g


def gen_chordal(n: int, seed: int, host_size: int | None = None,
                max_subtree: int | None = None) -> Graph:
    """Intersection graph of ``n`` random subtrees of a random host tree."""
    if n < 1:
        raise ValueError("gen_chordal needs n >= 1")
    rng = SeededRng(seed)
    hs = host_size or n
    adj = _tree_adj(hs, random_tree(hs, rng))
    cap = max_subtree or max(1, hs // 2)
    subtrees = [set(random_subtree(adj, rng.between(1, cap), rng)) for _ in range(n)]
    edges = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n)
             if subtrees[i] & subtrees[j]]
    g = build_graph(n, edges)
    assert is_chordal(g).verdict
    return g


def gen_alpha_acyclic(n: int, m: int, seed: int, max_edge_size: int | None = None) -> Hypergraph:
    """Dual of a covering hypertree on ``m`` vertices with ``n`` hyperedges.

    The result has ``n`` vertices and ``m`` hyperedges.
    """
    if n < 1 or m < 1:
        raise ValueError("gen_alpha_acyclic needs n >= 1 and m >= 1")
    ht = gen_hypertree(m, n, seed, max_edge_size, cover=True)
    h = dual(ht)
    assert is_alpha_acyclic(h).verdict
    return h


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, p)``; no class guarantee."""
    rng = SeededRng(seed)
    return build_graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
                           if rng.chance(p)])


def gen_random_hypergraph(n: int, m: int, seed: int, max_edge_size: int | None = None,
                          cover: bool = False) -> Hypergraph:
    """``m`` uniformly random nonempty hyperedges; ``cover`` adds missing vertices."""
    rng = SeededRng(seed)
    cap = max_edge_size or n
    edges = []
    for _ in range(m):
        k = rng.between(1, min(cap, n))
        pool = list(range(1, n + 1))
        rng.shuffle(pool)
        edges.append(sorted(pool[:k]))
    if cover and edges:
        seen = {v for e in edges for v in e}
        for v in range(1, n + 1):
            if v not in seen:
                i = rng.below(len(edges))
                edges[i] = sorted(edges[i] + [v])
    return Hypergraph(n, tuple(tuple(e) for e in edges))


