"""Hypergraphs, their derived graphs, and the acyclicity/Helly recognition battery."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InputError, NotAlphaAcyclic
from .graph import Graph, LabeledLineGraph, from_adjacency, intersection_graph
from .orderings import is_chordal
from .report import ClassReport


@dataclass(frozen=True)
class Hypergraph:
    """Vertices ``1..n`` and an ordered multiset of nonempty hyperedges.

    Hyperedges are sorted tuples; they are referred to by 1-based index
    (``edge(1)`` is ``edges[0]``) everywhere outside this class.
    """

    n: int
    edges: tuple

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edge(self, i: int) -> tuple:
        return self.edges[i - 1]

    def incidence(self) -> list[list[int]]:
        """``inc[v]`` lists the 1-based indices of hyperedges containing ``v``."""
        inc = [[] for _ in range(self.n + 1)]
        for i, e in enumerate(self.edges, 1):
            for v in e:
                inc[v].append(i)
        return inc

    def isolated(self) -> list[int]:
        inc = self.incidence()
        return [v for v in self.vertices if not inc[v]]


def build_hypergraph(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    norm = []
    for e in edges:
        s = tuple(sorted(set(e)))
        if not s:
            raise InputError("empty hyperedge")
        if s[0] < 1 or s[-1] > n:
            raise InputError(f"hyperedge {s} out of range 1..{n}")
        norm.append(s)
    return Hypergraph(n, tuple(norm))


def graph_as_hypergraph(g: Graph) -> Hypergraph:
    return Hypergraph(g.n, tuple(g.edges()))


def dual(h: Hypergraph) -> Hypergraph:
    """Swap the roles of vertices and hyperedges.

    Vertex ``i`` of the dual is hyperedge ``i`` of ``h``; hyperedge ``v`` of
    the dual lists the hyperedges containing vertex ``v``. A vertex lying in
    no hyperedge would give an empty dual hyperedge and is rejected.
    """
    inc = h.incidence()
    bad = [v for v in h.vertices if not inc[v]]
    if bad:
        raise InputError(f"vertex {bad[0]} lies in no hyperedge; dual undefined")
    return Hypergraph(h.m, tuple(tuple(inc[v]) for v in h.vertices))


def two_section(h: Hypergraph) -> Graph:
    sets = [set() for _ in range(h.n + 1)]
    for e in h.edges:
        for v in e:
            sets[v].update(e)
    for v in h.vertices:
        sets[v].discard(v)
    return from_adjacency(h.n, sets)


def hyper_line_graph(h: Hypergraph) -> LabeledLineGraph:
    return intersection_graph(h.edges)


def closed_neighborhood_hypergraph(g: Graph) -> Hypergraph:
    return Hypergraph(g.n, tuple(tuple(sorted(g.closed(v))) for v in g.vertices))


def clique_hypergraph(g: Graph) -> Hypergraph:
    """Maximal cliques of a chordal graph, read off a perfect elimination ordering.

    ``{v} + later neighbours`` is a clique for every ``v``; it fails to be
    maximal exactly when some earlier ``u`` has ``v`` as parent and a clique
    one larger.
    """
    rep = is_chordal(g)
    if not rep.verdict:
        raise InputError("clique_hypergraph requires a chordal graph")
    peo = rep.witness
    pos = {v: i for i, v in enumerate(peo)}
    later = {v: [u for u in g.adj[v] if pos[u] > pos[v]] for v in peo}
    dominated = set()
    for u in peo:
        if later[u]:
            p = min(later[u], key=pos.__getitem__)
            if len(later[u]) == len(later[p]) + 1:
                dominated.add(p)
    cliques = {tuple(sorted([v, *later[v]])) for v in peo if v not in dominated}
    return Hypergraph(g.n, tuple(sorted(cliques)))


def _masks(h: Hypergraph):
    inc = [0] * (h.n + 1)
    emask = []
    for i, e in enumerate(h.edges):
        mask = 0
        for v in e:
            inc[v] |= 1 << i
            mask |= 1 << v
        emask.append(mask)
    return inc, emask


def is_helly(h: Hypergraph) -> ClassReport:
    """Helly test over vertex triples.

    ``h`` is Helly iff for every three vertices the hyperedges containing at
    least two of them share a vertex. If some pair of the triple never
    co-occurs the family all contains the third-pair's common vertex, so
    only triangles of the 2-section need checking.
    """
    inc, emask = _masks(h)
    sec = two_section(h)
    nb = sec.nbrs
    for a in h.vertices:
        for b in sec.adj[a]:
            if b <= a:
                continue
            for c in sec.adj[b]:
                if c <= b or c not in nb[a]:
                    continue
                fam = (inc[a] & inc[b]) | (inc[a] & inc[c]) | (inc[b] & inc[c])
                common = -1
                while fam:
                    low = fam & -fam
                    common &= emask[low.bit_length() - 1]
                    fam ^= low
                if not common:
                    return ClassReport(False, "helly-triple", (a, b, c))
    return ClassReport(True)


def verify_helly_violation(h: Hypergraph, triple) -> bool:
    fam = [set(e) for e in h.edges if len(set(e) & set(triple)) >= 2]
    return bool(fam) and not set.intersection(*fam)


def is_conformal(h: Hypergraph) -> ClassReport:
    """Conformal iff the dual is Helly; a witness triple names hyperedge indices."""
    return is_helly(dual(h))


def _with_isolated(h: Hypergraph) -> Hypergraph:
    iso = h.isolated()
    if not iso:
        return h
    return Hypergraph(h.n, h.edges + tuple((v,) for v in iso))


def gyo_reduce(h: Hypergraph) -> list[tuple[int, tuple]]:
    """GYO reduction; returns the surviving ``(index, vertices)`` pairs with vertices left.

    Repeatedly drops vertices occurring in a single hyperedge and hyperedges
    contained in another. An empty result means ``h`` is alpha-acyclic.
    """
    edges = {i: set(e) for i, e in enumerate(h.edges, 1)}
    changed = True
    while changed:
        changed = False
        count: dict[int, int] = {}
        for e in edges.values():
            for v in e:
                count[v] = count.get(v, 0) + 1
        for e in edges.values():
            lonely = {v for v in e if count[v] == 1}
            if lonely:
                e -= lonely
                changed = True
        for i in sorted(edges):
            e = edges[i]
            if any(j != i and e <= f for j, f in edges.items()):
                del edges[i]
                changed = True
    return [(i, tuple(sorted(e))) for i, e in sorted(edges.items()) if e]


@dataclass(frozen=True)
class JoinTree:
    """Tree on hyperedge indices ``1..m`` given as an edge list."""

    m: int
    edges: tuple


def verify_join_tree(h: Hypergraph, tree: JoinTree) -> bool:
    """Tree check plus running intersection for every vertex."""
    if tree.m != h.m or not _is_tree(h.m, tree.edges):
        return False
    inc = h.incidence()
    for v in h.vertices:
        if not _connected_in_tree(set(inc[v]), tree.edges):
            return False
    return True


def _is_tree(k: int, edges) -> bool:
    if k == 0:
        return not edges
    if len(edges) != k - 1:
        return False
    parent = list(range(k + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        if not (1 <= a <= k and 1 <= b <= k):
            return False
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def _connected_in_tree(nodes: set, tree_edges) -> bool:
    # a subset of a tree's nodes is connected iff it spans |nodes| - 1 tree edges
    if not nodes:
        return True
    inside = sum(1 for a, b in tree_edges if a in nodes and b in nodes)
    return inside == len(nodes) - 1


def join_tree(h: Hypergraph) -> JoinTree:
    """Join tree via a maximum-weight spanning tree of the line graph.

    Pair weights are intersection sizes; zero-weight pairs join separate
    components. The result is checked, and :class:`NotAlphaAcyclic`
    (carrying the GYO residue) is raised when it fails.
    """
    m = h.m
    sets = [set(e) for e in h.edges]
    pairs = sorted(((len(sets[i] & sets[j]), i + 1, j + 1)
                    for i in range(m) for j in range(i + 1, m)),
                   key=lambda t: (-t[0], t[1], t[2]))
    parent = list(range(m + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for _, a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            chosen.append((a, b))
            if len(chosen) == m - 1:
                break
    tree = JoinTree(m, tuple(chosen))
    if not verify_join_tree(h, tree):
        raise NotAlphaAcyclic("hypergraph has no join tree", gyo_reduce(h))
    return tree


def is_alpha_acyclic(h: Hypergraph) -> ClassReport:
    """Conformal with chordal 2-section, cross-checked against GYO reduction."""
    conf = is_conformal(_with_isolated(h)).verdict
    by_cover = conf and is_chordal(two_section(h)).verdict
    residue = gyo_reduce(h)
    if by_cover != (not residue):
        raise RuntimeError("alpha-acyclicity tests disagree")
    if residue:
        return ClassReport(False, "gyo-residue", tuple(residue))
    return ClassReport(True, "join-tree", join_tree(h))


def verify_gyo_residue(residue) -> bool:
    """A residue refutes acyclicity when it is nonempty and GYO-irreducible."""
    if not residue:
        return False
    n = max(v for _, e in residue for v in e)
    sub = Hypergraph(n, tuple(e for _, e in residue))
    return len(gyo_reduce(sub)) == len(residue)


def is_hypertree(h: Hypergraph) -> ClassReport:
    """Helly with chordal line graph; witness is a tree on the vertices.

    The tree is the join tree of the dual (built over vertices that lie in
    some hyperedge) with uncovered vertices hung off as leaves.
    """
    helly = is_helly(h)
    if not helly.verdict:
        return helly
    lg = hyper_line_graph(h).graph
    chordal = is_chordal(lg)
    if not chordal.verdict:
        return ClassReport(False, "hole", chordal.witness)
    return ClassReport(True, "underlying-tree", underlying_tree(h))


def underlying_tree(h: Hypergraph) -> tuple:
    inc = h.incidence()
    covered = [v for v in h.vertices if inc[v]]
    iso = [v for v in h.vertices if not inc[v]]
    edges = []
    if covered:
        d = Hypergraph(h.m, tuple(tuple(inc[v]) for v in covered))
        jt = join_tree(d)
        edges = [(covered[a - 1], covered[b - 1]) for a, b in jt.edges]
    anchor = covered[0] if covered else (iso[0] if iso else None)
    edges += [(anchor, v) for v in iso if v != anchor]
    return tuple(tuple(sorted(e)) for e in edges)


def verify_underlying_tree(h: Hypergraph, tree_edges) -> bool:
    if not _is_tree(h.n, list(tree_edges)):
        return False
    return all(_connected_in_tree(set(e), tree_edges) for e in h.edges)


def helly_by_definition(h: Hypergraph) -> bool:
    """Exponential check over all pairwise-intersecting subfamilies; tests only."""
    if h.n > 12 or h.m > 16:
        raise ValueError("helly_by_definition is gated to small inputs")
    sets = [set(e) for e in h.edges]
    for r in range(2, h.m + 1):
        for fam in combinations(sets, r):
            if all(a & b for a, b in combinations(fam, 2)) and not set.intersection(*fam):
                return False
    return True
