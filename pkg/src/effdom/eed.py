"""Efficient edge domination and maximum induced matching on graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .certificates import INFEASIBLE, LIMITED, SOLUTION, EedCertificate, MimCertificate
from .ed import SOLVER_GATE, solve_ed
from .errors import InputError, MethodNotApplicable
from .graph import Graph, line_graph, square
from .mwis import mwis_chordal
from .oracles import OracleGate, brute_eed, brute_mwis
from .orderings import is_chordal, is_dually_chordal


@dataclass(frozen=True)
class ScreenResult:
    """Outcome of the forbidden-pattern screen.

    ``reason`` is ``K4``, ``W4``, ``gem`` or ``forced-conflict`` when the
    graph cannot have an efficient edge dominating set, with the offending
    vertices in ``witness``. ``forced`` holds diamond mid-edges, which every
    solution must contain. :func:`solve_eed` adds the reason
    ``dually-chordal-hole`` for dually chordal graphs that are not chordal.
    """

    infeasible: bool
    forced: tuple = ()
    reason: str | None = None
    witness: tuple = ()


def eed_structural_screen(g: Graph) -> ScreenResult:
    nb = g.nbrs
    forced = []
    for x, y in g.edges():
        common = sorted(nb[x] & nb[y])
        mid = False
        for a, b in combinations(common, 2):
            if b in nb[a]:
                return ScreenResult(True, reason="K4", witness=tuple(sorted((x, y, a, b))))
            mid = True
        if mid:
            forced.append((x, y))

    # K4-free, so every neighbourhood is triangle-free and any path a-b-c-d
    # inside N(h) is an induced P4 (gem) or an induced C4 (W4)
    for h in g.vertices:
        inside = nb[h]
        for b in g.adj[h]:
            nbb = nb[b] & inside
            if len(nbb) < 2:
                continue
            for c in nbb:
                nbc = nb[c] & inside
                if len(nbc) < 2:
                    continue
                a = min(nbb - {c})
                d = min(nbc - {b})
                kind = "W4" if d in nb[a] else "gem"
                return ScreenResult(True, tuple(forced), kind, (h, a, b, c, d))

    owner = {}
    for i, (x, y) in enumerate(forced):
        for v in (x, y):
            if v in owner:
                return ScreenResult(True, tuple(forced), "forced-conflict",
                                    forced[owner[v]] + (x, y))
            owner[v] = i
    for i, (x, y) in enumerate(forced):
        for v in (x, y):
            for w in g.adj[v]:
                j = owner.get(w)
                if j is not None and j != i:
                    return ScreenResult(True, tuple(forced), "forced-conflict",
                                        forced[j] + (x, y))
    return ScreenResult(False, tuple(forced))


def _check_edges(g: Graph, M):
    for e in M:
        u, v = e
        if not (1 <= u <= g.n and 1 <= v <= g.n) or not g.has_edge(u, v):
            raise InputError(f"{e} is not an edge")


def verify_eed(g: Graph, M) -> bool:
    """Every edge, members included, meets exactly one member of ``M``."""
    M = [tuple(sorted(e)) for e in M]
    _check_edges(g, M)
    if len(set(M)) != len(M):
        return False
    chosen = set(M)
    cov = [0] * (g.n + 1)
    for u, v in M:
        cov[u] += 1
        cov[v] += 1
    return all(cov[u] + cov[v] - ((u, v) in chosen) == 1 for u, v in g.edges())


def verify_mim(g: Graph, M) -> bool:
    """``M`` is an induced matching; maximality is not checked."""
    M = [tuple(sorted(e)) for e in M]
    _check_edges(g, M)
    owner = [0] * (g.n + 1)
    for i, (u, v) in enumerate(M, 1):
        if owner[u] or owner[v]:
            return False
        owner[u] = owner[v] = i
    return all(not (owner[a] and owner[b] and owner[a] != owner[b]) for a, b in g.edges())


def solve_eed(g: Graph, method: str = "auto", gate: OracleGate = SOLVER_GATE) -> EedCertificate:
    """Screen, then efficient domination on the line graph.

    ``dc`` and ``chordal-square`` are forwarded to the line-graph ED solver;
    ``brute`` runs the edge-subset oracle directly.
    """
    m = g.m
    if method == "brute":
        if m > gate.max_m:
            return EedCertificate(LIMITED, method="brute", target=m)
        return brute_eed(g, gate)
    if method not in ("auto", "dc", "chordal-square"):
        raise ValueError(f"unknown method {method!r}")
    scr = eed_structural_screen(g)
    if method == "auto" and not scr.infeasible:
        # with a solution, chordal and dually chordal coincide
        hole = is_chordal(g)
        if not hole.verdict and is_dually_chordal(g).verdict:
            scr = ScreenResult(True, scr.forced, "dually-chordal-hole", hole.witness)
    if scr.infeasible and method == "auto":
        return EedCertificate(INFEASIBLE, (), scr.forced, "screen", scr.reason, scr.witness,
                              target=m)
    # a forced route still runs, so an inapplicable method is reported as such
    lg = line_graph(g)
    ed = solve_ed(lg.graph, method, gate)
    if scr.infeasible:
        if ed.status == SOLUTION:
            raise RuntimeError("screen rejected a graph the line-graph solver accepted")
        return EedCertificate(INFEASIBLE, (), scr.forced, ed.method, scr.reason, scr.witness,
                              weight_sum=ed.weight_sum, target=m)
    if ed.status != SOLUTION:
        return EedCertificate(ed.status, (), scr.forced, ed.method, weight_sum=ed.weight_sum,
                              target=m)
    M = tuple(sorted(lg.edge_of[i] for i in ed.D))
    if not set(scr.forced) <= set(M) or not verify_eed(g, M):
        raise RuntimeError("line-graph solution failed edge-domination checks")
    return EedCertificate(SOLUTION, M, scr.forced, ed.method, weight_sum=ed.weight_sum, target=m)


def _mim_on_line_graph(lg, method: str, gate: OracleGate):
    """Maximum independent set of ``L^2`` as sorted line-graph indices, or None when gated."""
    sq = square(lg.graph)
    ones = {i: 1 for i in sq.vertices}
    if method in ("auto", "chordal-square"):
        rep = is_chordal(sq)
        if rep.verdict:
            cert = mwis_chordal(sq, ones, rep.witness, check=False)
            return tuple(sorted(cert.set)), "chordal-square"
        if method == "chordal-square":
            raise MethodNotApplicable("square of the line graph is not chordal")
    elif method != "brute":
        raise MethodNotApplicable(f"method {method!r} does not apply to induced matching")
    if sq.n > gate.max_m:
        return None, "brute"
    cert = brute_mwis(sq, ones, OracleGate(max_n=gate.max_m))
    return tuple(sorted(cert.set)), "brute"


def solve_mim(g: Graph, method: str = "auto", gate: OracleGate = SOLVER_GATE) -> MimCertificate:
    lg = line_graph(g)
    idx, used = _mim_on_line_graph(lg, method, gate)
    if idx is None:
        return MimCertificate((), 0, LIMITED, used)
    M = tuple(sorted(lg.edge_of[i] for i in idx))
    if not verify_mim(g, M):
        raise RuntimeError("independent set of the squared line graph is not an induced matching")
    return MimCertificate(M, len(M), SOLUTION, used)
