"""Exponential reference solvers.

Each oracle works directly from the problem definition with bitmask
backtracking, independently of the reductions the fast solvers use, and
refuses inputs beyond its gate instead of running unbounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .certificates import (INFEASIBLE, SOLUTION, EdCertificate, EedCertificate,
                           MimCertificate, MwisCertificate, XcCertificate)
from .errors import GateExceeded
from .graph import Graph
from .hypergraph import Hypergraph


@dataclass(frozen=True)
class OracleGate:
    max_n: int = 20             # vertices (ED, MWIS)
    max_m: int = 20             # edges or hyperedges (EED, MIM, XC)
    max_subset_bits: int = 64   # hard ceiling on any searched ground set


DEFAULT_GATE = OracleGate()


def _check(size: int, limit: int, gate: OracleGate, what: str):
    if size > limit or size > gate.max_subset_bits:
        raise GateExceeded(f"{what} = {size} exceeds oracle gate {min(limit, gate.max_subset_bits)}")


def _exact_cover_search(universe: int, sets: list[int], owners: list[list[int]]):
    """Choose pairwise disjoint ``sets`` whose union is ``universe``.

    ``owners[b]`` lists the sets containing bit ``b``. Branches on the
    lowest uncovered bit; returns chosen indices or None.
    """
    chosen: list[int] = []

    def rec(covered: int) -> bool:
        rest = universe & ~covered
        if not rest:
            return True
        b = (rest & -rest).bit_length() - 1
        for i in owners[b]:
            if sets[i] & covered == 0:
                chosen.append(i)
                if rec(covered | sets[i]):
                    return True
                chosen.pop()
        return False

    return chosen if rec(0) else None


def brute_ed(g: Graph, gate: OracleGate = DEFAULT_GATE) -> EdCertificate:
    """Efficient dominating set by exact cover of ``V`` with closed neighbourhoods."""
    _check(g.n, gate.max_n, gate, "n")
    sets = [0] * (g.n + 1)
    for v in g.vertices:
        mask = 1 << v
        for u in g.adj[v]:
            mask |= 1 << u
        sets[v] = mask
    owners = [[] for _ in range(g.n + 1)]
    for v in g.vertices:
        for u in g.closed(v):
            owners[u].append(v)
    universe = sum(1 << v for v in g.vertices)
    found = _exact_cover_search(universe, sets, owners)
    if found is None:
        return EdCertificate(INFEASIBLE, (), None, g.n, "brute")
    D = tuple(sorted(found))
    return EdCertificate(SOLUTION, D, sum(g.degree(d) + 1 for d in D), g.n, "brute")


def _edge_items(obj):
    if isinstance(obj, Hypergraph):
        return obj.n, list(obj.edges), list(range(1, obj.m + 1))
    edges = obj.edges()
    return obj.n, edges, edges


def brute_eed(obj, gate: OracleGate = DEFAULT_GATE) -> EedCertificate:
    """Efficient edge dominating set of a graph or hypergraph.

    Every edge must intersect exactly one chosen edge. Graph certificates
    list ``(u, v)`` pairs; hypergraph certificates list 1-based indices.
    """
    n, members, labels = _edge_items(obj)
    k = len(members)
    _check(k, gate.max_m, gate, "m")
    vmask = [0] * (n + 1)
    for i, e in enumerate(members):
        for v in e:
            vmask[v] |= 1 << i
    # hits[i]: edges meeting edge i (itself included)
    hits = []
    for e in members:
        mask = 0
        for v in e:
            mask |= vmask[v]
        hits.append(mask)
    owners = [[j for j in range(k) if hits[j] >> i & 1] for i in range(k)]
    found = _exact_cover_search((1 << k) - 1, hits, owners)
    if found is None:
        return EedCertificate(INFEASIBLE, method="brute", target=k)
    return EedCertificate(SOLUTION, tuple(sorted(labels[i] for i in found)), method="brute",
                          target=k)


def _mwis_masks(conflict: list[int], weight: list[int]):
    """Branch and bound maximum weight independent set over bit positions."""
    k = len(weight)
    best = [-1, 0]

    def bound(cand):
        total = 0
        while cand:
            low = cand & -cand
            total += weight[low.bit_length() - 1]
            cand ^= low
        return total

    def rec(cand: int, cur_w: int, cur: int):
        if cur_w + bound(cand) <= best[0]:
            return
        if not cand:
            best[0], best[1] = cur_w, cur
            return
        low = cand & -cand
        i = low.bit_length() - 1
        rec(cand & ~conflict[i] & ~low, cur_w + weight[i], cur | low)
        rec(cand & ~low, cur_w, cur)

    rec((1 << k) - 1, 0, 0)
    return best[0], [i for i in range(k) if best[1] >> i & 1]


def brute_mwis(g: Graph, omega: Mapping[int, int], gate: OracleGate = DEFAULT_GATE) -> MwisCertificate:
    _check(g.n, gate.max_n, gate, "n")
    conflict = []
    for v in g.vertices:
        mask = 0
        for u in g.adj[v]:
            mask |= 1 << (u - 1)
        conflict.append(mask)
    weight, chosen = _mwis_masks(conflict, [omega[v] for v in g.vertices])
    return MwisCertificate(frozenset(i + 1 for i in chosen), weight, method="brute")


def brute_mim(obj, gate: OracleGate = DEFAULT_GATE) -> MimCertificate:
    """Maximum induced matching of a graph or hypergraph.

    Two edges conflict when they intersect or some edge meets both.
    """
    n, members, labels = _edge_items(obj)
    k = len(members)
    _check(k, gate.max_m, gate, "m")
    vmask = [0] * (n + 1)
    for i, e in enumerate(members):
        for v in e:
            vmask[v] |= 1 << i
    touch = []
    for e in members:
        mask = 0
        for v in e:
            mask |= vmask[v]
        touch.append(mask)
    conflict = []
    for i in range(k):
        mask = touch[i]
        rest = touch[i]
        while rest:
            low = rest & -rest
            mask |= touch[low.bit_length() - 1]
            rest ^= low
        conflict.append(mask & ~(1 << i))
    size, chosen = _mwis_masks(conflict, [1] * k)
    return MimCertificate(tuple(sorted(labels[i] for i in chosen)), size, SOLUTION, "brute")


def brute_exact_cover(h: Hypergraph, gate: OracleGate = DEFAULT_GATE) -> XcCertificate:
    _check(h.m, gate.max_m, gate, "m")
    sets = [sum(1 << v for v in e) for e in h.edges]
    owners = [[] for _ in range(h.n + 1)]
    for i, e in enumerate(h.edges):
        for v in e:
            owners[v].append(i)
    universe = sum(1 << v for v in h.vertices)
    found = _exact_cover_search(universe, sets, owners)
    if found is None:
        return XcCertificate(INFEASIBLE, (), None, h.n, "brute")
    C = tuple(sorted(i + 1 for i in found))
    return XcCertificate(SOLUTION, C, sum(len(h.edge(i)) for i in C), h.n, "brute")
