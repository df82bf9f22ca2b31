"""Simple undirected graphs over vertices ``1..n`` and derived graphs."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import InputError


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph in canonical form.

    ``adj[v]`` is the sorted tuple of neighbours of ``v`` for ``1 <= v <= n``;
    ``adj[0]`` is an empty placeholder so vertices index directly.
    """

    n: int
    adj: tuple
    duplicate_edges: int = field(default=0, compare=False)

    @cached_property
    def nbrs(self) -> tuple:
        """Neighbour sets, parallel to ``adj``."""
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def closed(self, v: int) -> frozenset:
        return self.nbrs[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbrs[u]

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * (self.n + 1)
        comps = []
        for s in self.vertices:
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def induced(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``1..k``; returns it with the label map."""
        labels = sorted(set(keep))
        index = {v: i for i, v in enumerate(labels, 1)}
        edges = [(index[u], index[v]) for u in labels for v in self.adj[u]
                 if u < v and v in index]
        return build_graph(len(labels), edges), labels

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Normalise an edge list into a :class:`Graph`.

    Duplicate edges (in either orientation) are collapsed and counted in
    ``duplicate_edges``. Out-of-range vertices and self-loops raise
    :class:`InputError`.
    """
    if n < 0:
        raise InputError(f"negative vertex count {n}")
    sets = [set() for _ in range(n + 1)]
    dup = 0
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"edge ({u}, {v}) out of range 1..{n}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        if v in sets[u]:
            dup += 1
            continue
        sets[u].add(v)
        sets[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in sets), dup)


def from_adjacency(n: int, sets) -> Graph:
    """Build from already-symmetric neighbour sets indexed ``0..n``."""
    return Graph(n, tuple(tuple(sorted(s)) for s in sets))


@dataclass(frozen=True)
class LabeledLineGraph:
    """Line graph whose vertex ``i`` stands for ``edge_of[i]`` of the source."""

    graph: Graph
    edge_of: tuple  # edge_of[0] unused

    def index_of(self) -> dict:
        return {e: i for i, e in enumerate(self.edge_of) if i}


def square(g: Graph) -> Graph:
    """Graph on the same vertices joining pairs at distance one or two."""
    nb = g.nbrs
    sets = [set() for _ in range(g.n + 1)]
    for v in g.vertices:
        s = sets[v]
        for w in g.adj[v]:
            s.update(nb[w])
        s.update(nb[v])
        s.discard(v)
    return from_adjacency(g.n, sets)


def intersection_graph(members) -> LabeledLineGraph:
    """Intersection graph of a sequence of vertex collections.

    Vertex ``i`` (1-based) of the result is ``members[i-1]``; two are adjacent
    when they share a vertex. Shared by graph and hypergraph line graphs.
    """
    by_vertex: dict[int, list[int]] = {}
    for i, e in enumerate(members, 1):
        for v in e:
            by_vertex.setdefault(v, []).append(i)
    k = len(members)
    sets = [set() for _ in range(k + 1)]
    for idxs in by_vertex.values():
        for a in idxs:
            sets[a].update(idxs)
    for i in range(1, k + 1):
        sets[i].discard(i)
    return LabeledLineGraph(from_adjacency(k, sets), (None, *members))


def line_graph(g: Graph) -> LabeledLineGraph:
    return intersection_graph(g.edges())


def neighborhood_weights(g: Graph) -> dict[int, int]:
    """Closed-neighbourhood sizes ``deg(v) + 1``."""
    return {v: len(g.adj[v]) + 1 for v in g.vertices}


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    for v in s:
        if not 1 <= v <= g.n:
            raise InputError(f"vertex {v} out of range 1..{g.n}")
    return all(g.nbrs[v].isdisjoint(s) for v in s)


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])
