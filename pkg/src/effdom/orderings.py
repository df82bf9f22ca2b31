"""Vertex orderings: MCS, perfect elimination, maximum neighbourhood orderings."""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import InputError
from .graph import Graph
from .report import ClassReport


@dataclass(frozen=True)
class PeoResult:
    sigma: tuple
    valid: bool
    witness: tuple | None = None  # (v, p, x): p, x later neighbours of v, not adjacent


@dataclass(frozen=True)
class MnoResult:
    """A maximum neighbourhood ordering and the chosen maximum neighbours.

    ``maxneighbor[v] == v`` only for a vertex with no neighbour later in
    ``sigma`` (the last vertex of each connected component).
    """

    sigma: tuple
    maxneighbor: dict

    def position(self) -> dict:
        return {v: i for i, v in enumerate(self.sigma)}


@dataclass(frozen=True)
class MnoFailure:
    """Induced subgraph left when no remaining vertex has a maximum neighbour."""

    residue: tuple


def _mcs(g: Graph):
    """Maximum cardinality search.

    Returns the visit order and, for every vertex, the already-visited
    neighbour having the most visited neighbours at that moment (the vertex
    itself when none was visited). Linear time with bucket sets.
    """
    n, adj = g.n, g.adj
    label = [0] * (n + 1)
    done = [False] * (n + 1)
    buckets = [set(range(1, n + 1))] + [set() for _ in range(n)]
    top = 0
    visit = []
    cand = [0] * (n + 1)
    for _ in range(n):
        while not buckets[top]:
            top -= 1
        v = buckets[top].pop()
        done[v] = True
        best, best_label = v, -1
        for u in adj[v]:
            lu = label[u]
            if done[u]:
                if lu > best_label:
                    best, best_label = u, lu
            else:
                buckets[lu].remove(u)
                buckets[lu + 1].add(u)
            label[u] = lu + 1
        if top < n and buckets[top + 1]:
            top += 1
        visit.append(v)
        cand[v] = best
    return visit, cand


def mcs(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search; reversed, a PEO when ``g`` is chordal."""
    return _mcs(g)[0]


def _positions(g: Graph, sigma) -> list[int]:
    pos = [-1] * (g.n + 1)
    if len(sigma) != g.n:
        raise InputError("ordering is not a permutation of the vertex set")
    for i, v in enumerate(sigma):
        if not 1 <= v <= g.n or pos[v] != -1:
            raise InputError("ordering is not a permutation of the vertex set")
        pos[v] = i
    return pos


def is_peo(g: Graph, sigma) -> PeoResult:
    """Check that each vertex's later neighbours form a clique.

    Uses the parent test: with ``p`` the earliest later neighbour of ``v``,
    every other later neighbour of ``v`` must be adjacent to ``p``.
    """
    sigma = tuple(sigma)
    pos = _positions(g, sigma)
    nb = g.nbrs
    for v in sigma:
        pv = pos[v]
        later = [u for u in g.adj[v] if pos[u] > pv]
        if len(later) < 2:
            continue
        p = min(later, key=pos.__getitem__)
        np_ = nb[p]
        for x in later:
            if x != p and x not in np_:
                return PeoResult(sigma, False, (v, p, x))
    return PeoResult(sigma, True)


def _hole_through(g: Graph, v: int, x: int, y: int):
    """Chordless cycle ``v, x, ..., y`` avoiding other neighbours of ``v``, or None."""
    banned = set(g.nbrs[v]) | {v}
    banned.discard(x)
    banned.discard(y)
    parent = {x: None}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        if a == y:
            path = []
            while a is not None:
                path.append(a)
                a = parent[a]
            return [v] + path[::-1]
        for b in g.adj[a]:
            if b not in parent and b not in banned:
                parent[b] = a
                queue.append(b)
    return None


def find_hole(g: Graph, hint=None):
    """Return an induced cycle on at least four vertices, or None if chordal.

    ``hint`` is a PEO failure triple tried first; otherwise every vertex and
    every non-adjacent pair of its neighbours is tried, which finds a hole
    whenever one exists.
    """
    if hint is not None:
        cyc = _hole_through(g, *hint)
        if cyc is not None:
            return cyc
    for v in g.vertices:
        for x, y in combinations(g.adj[v], 2):
            if y not in g.nbrs[x]:
                cyc = _hole_through(g, v, x, y)
                if cyc is not None:
                    return cyc
    return None


def verify_hole(g: Graph, cycle) -> bool:
    """True iff ``cycle`` is an induced cycle of length at least four."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i, a in enumerate(cycle):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(a, cycle[j]) != consecutive:
                return False
    return True


def is_chordal(g: Graph) -> ClassReport:
    peo = tuple(reversed(mcs(g)))
    res = is_peo(g, peo)
    if res.valid:
        return ClassReport(True, "peo", peo)
    hole = find_hole(g, res.witness)
    if hole is None:  # pragma: no cover - would contradict the parent test
        raise RuntimeError("PEO check failed but no hole was found")
    return ClassReport(False, "hole", tuple(hole))


def _mno_violation(g: Graph, sigma, maxneighbor) -> int:
    """Index of the first position breaking the MNO invariant, or -1.

    Works on shrinking neighbour sets so that step ``i`` sees exactly
    ``G_i``; total cost is bounded by the sum of squared degrees.
    """
    alive = [set(a) for a in g.adj]
    for i, v in enumerate(sigma):
        u = maxneighbor.get(v)
        av = alive[v]
        if u == v:
            if av:
                return i
        else:
            if u not in av:
                return i
            au = alive[u]
            au.add(u)
            ok = av <= au and all(alive[w] <= au for w in av if w != u)
            au.discard(u)
            if not ok:
                return i
        for w in av:
            alive[w].discard(v)
    return -1


def verify_mno(g: Graph, mno: MnoResult) -> bool:
    try:
        _positions(g, mno.sigma)
    except InputError:
        return False
    return _mno_violation(g, mno.sigma, mno.maxneighbor) == -1


def _max_neighbor(alive, v: int):
    """Smallest-index maximum neighbour of ``v`` other than itself, or None.

    Any valid maximum neighbour has the largest closed neighbourhood in
    ``N[v]``, and two such candidates of equal degree have equal closed
    neighbourhoods, so testing the first maximum-degree neighbour suffices.
    An isolated vertex is returned as its own maximum neighbour.
    """
    av = alive[v]
    if not av:
        return v
    u = min(av, key=lambda w: (-len(alive[w]), w))
    au = alive[u]
    if len(au) < len(av):
        return None
    au.add(u)
    ok = av <= au and all(alive[w] <= au for w in av if w != u)
    au.discard(u)
    return u if ok else None


def _greedy_mno(g: Graph):
    n = g.n
    alive = [set(a) for a in g.adj]
    present = [True] * (n + 1)
    queued = [True] * (n + 1)
    heap = list(range(1, n + 1))
    sigma, mx = [], {}
    while heap:
        v = heapq.heappop(heap)
        queued[v] = False
        if not present[v]:
            continue
        u = _max_neighbor(alive, v)
        if u is None:
            continue
        touched = set(alive[v])
        for w in alive[v]:
            touched |= alive[w]
        present[v] = False
        for w in alive[v]:
            alive[w].discard(v)
        alive[v] = set()
        sigma.append(v)
        mx[v] = u
        for t in touched:
            if present[t] and not queued[t]:
                queued[t] = True
                heapq.heappush(heap, t)
    if len(sigma) < n:
        return MnoFailure(tuple(v for v in g.vertices if present[v]))
    return MnoResult(tuple(sigma), mx)


def _neighborhood_search(g: Graph):
    """Maximum cardinality search over the closed-neighbourhood hypergraph.

    Repeatedly selects the vertex ``w`` whose closed neighbourhood holds the
    most visited vertices, then visits ``w`` (if new) followed by its
    unvisited neighbours. Visiting ``x`` records as its candidate maximum
    neighbour the visited neighbour of largest degree within the visited
    set. Reversed, the visit order is the candidate MNO. Linear time.
    """
    n, adj = g.n, g.adj
    hit = [0] * (n + 1)  # |N[y] & visited|
    seen = [False] * (n + 1)
    used = [False] * (n + 1)
    buckets = [set(range(1, n + 1))] + [set() for _ in range(n + 1)]
    top = 0
    visit = []
    cand = [0] * (n + 1)
    while len(visit) < n:
        while not buckets[top]:
            top -= 1
        w = buckets[top].pop()
        used[w] = True
        batch = [w] if not seen[w] else []
        batch += [x for x in adj[w] if not seen[x]]
        for x in batch:
            seen[x] = True
            visit.append(x)
            best, best_hit = x, 0
            hx = hit[x] + 1
            hit[x] = hx
            if not used[x]:
                buckets[hx - 1].remove(x)
                buckets[hx].add(x)
                if hx > top:
                    top = hx
            for y in adj[x]:
                hy = hit[y]
                if seen[y] and hy > best_hit:
                    # hy counts y's visited neighbours plus y itself, i.e.
                    # y's degree once x joins the visited set
                    best, best_hit = y, hy
                hit[y] = hy + 1
                if not used[y]:
                    buckets[hy].remove(y)
                    buckets[hy + 1].add(y)
                    if hy + 1 > top:
                        top = hy + 1
            cand[x] = best
    return visit, cand


def compute_mno(g: Graph, strategy: str = "auto"):
    """Maximum neighbourhood ordering of ``g`` or an :class:`MnoFailure`.

    ``greedy`` repeatedly removes the smallest-index vertex owning a maximum
    neighbour other than itself. ``search`` reverses the linear-time
    neighbourhood search above. ``auto`` tries ``search`` and falls back to
    ``greedy`` if the candidate fails its check. Every returned ordering is
    checked against the definition.
    """
    if strategy not in ("auto", "greedy", "search"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy in ("auto", "search"):
        visit, cand = _neighborhood_search(g)
        sigma = tuple(reversed(visit))
        mx = {v: cand[v] for v in sigma}
        if _mno_violation(g, sigma, mx) == -1:
            return MnoResult(sigma, mx)
        if strategy == "search":
            return MnoFailure(tuple(g.vertices))
    res = _greedy_mno(g)
    if isinstance(res, MnoResult) and _mno_violation(g, res.sigma, res.maxneighbor) != -1:
        raise RuntimeError("greedy elimination produced an invalid ordering")
    return res


def verify_mno_failure(g: Graph, residue) -> bool:
    """True iff no vertex of ``G[residue]`` has a maximum neighbour besides itself."""
    keep = set(residue)
    if not keep:
        return False
    alive = [set() for _ in range(g.n + 1)]
    for v in keep:
        alive[v] = {w for w in g.adj[v] if w in keep}
    return all(alive[v] and _max_neighbor(alive, v) is None for v in keep)


def is_dually_chordal(g: Graph) -> ClassReport:
    res = compute_mno(g)
    if isinstance(res, MnoResult):
        return ClassReport(True, "mno", res)
    return ClassReport(False, "mno-residue", res.residue)
