"""Domination, induced matching and exact cover on hypergraphs.

ED works on the 2-section. EED and MIM work on the line graph and report
1-based hyperedge indices. Exact cover is a weighted independent set in
the line graph with ``w(e) = |e|`` reaching ``|V|``.
"""
from __future__ import annotations

from .certificates import INFEASIBLE, LIMITED, SOLUTION, EdCertificate, MimCertificate, XcCertificate
from .ed import SOLVER_GATE, solve_ed, verify_ed
from .eed import _mim_on_line_graph
from .errors import InputError, MethodNotApplicable
from .hypergraph import Hypergraph, hyper_line_graph, two_section
from .mwis import mwis_chordal
from .oracles import OracleGate, brute_exact_cover, brute_mwis
from .orderings import is_chordal


def solve_hyper_ed(h: Hypergraph, method: str = "auto", gate: OracleGate = SOLVER_GATE) -> EdCertificate:
    return solve_ed(two_section(h), method, gate)


def solve_hyper_eed(h: Hypergraph, method: str = "auto", gate: OracleGate = SOLVER_GATE) -> EdCertificate:
    """ED of the line graph; ``D`` lists hyperedge indices."""
    lg = hyper_line_graph(h)
    return solve_ed(lg.graph, method, gate)


def verify_hyper_eed(h: Hypergraph, M) -> bool:
    """Every hyperedge meets exactly one hyperedge of ``M`` (indices)."""
    _check_indices(h, M)
    return verify_ed(hyper_line_graph(h).graph, M)


def solve_hyper_mim(h: Hypergraph, method: str = "auto", gate: OracleGate = SOLVER_GATE) -> MimCertificate:
    idx, used = _mim_on_line_graph(hyper_line_graph(h), method, gate)
    if idx is None:
        return MimCertificate((), 0, LIMITED, used)
    if not verify_hyper_mim(h, idx):
        raise RuntimeError("independent set of the squared line graph is not an induced matching")
    return MimCertificate(idx, len(idx), SOLUTION, used)


def verify_hyper_mim(h: Hypergraph, M) -> bool:
    """Chosen hyperedges are disjoint and no hyperedge meets two of them."""
    _check_indices(h, M)
    owner = [0] * (h.n + 1)
    for i in M:
        for v in h.edge(i):
            if owner[v]:
                return False
            owner[v] = i
    for e in h.edges:
        hit = {owner[v] for v in e if owner[v]}
        if len(hit) > 1:
            return False
    return True


def _check_indices(h: Hypergraph, C):
    for i in C:
        if not 1 <= i <= h.m:
            raise InputError(f"hyperedge index {i} out of range 1..{h.m}")


def verify_exact_cover(h: Hypergraph, C) -> bool:
    _check_indices(h, C)
    if len(set(C)) != len(C):
        return False
    seen = [False] * (h.n + 1)
    for i in C:
        for v in h.edge(i):
            if seen[v]:
                return False
            seen[v] = True
    return all(seen[1:])


def solve_exact_cover(h: Hypergraph, method: str = "auto", gate: OracleGate = SOLVER_GATE) -> XcCertificate:
    """Exact cover via weighted independent sets of the line graph.

    Hyperedges of a cover are pairwise disjoint and their sizes add up to
    ``|V|``; conversely no independent set weighs more than ``|V|``. The
    chordal route applies to every hypertree. ``chordal-square`` forces it,
    ``dc`` does not apply.
    """
    if method == "dc":
        raise MethodNotApplicable("exact cover has no maximum neighbourhood route")
    if method not in ("auto", "chordal-square", "brute"):
        raise ValueError(f"unknown method {method!r}")
    lg = hyper_line_graph(h).graph
    omega = {i: len(h.edge(i)) for i in lg.vertices}
    cert = None
    if method != "brute":
        rep = is_chordal(lg)
        if rep.verdict:
            cert = mwis_chordal(lg, omega, rep.witness, check=False)
            used = "chordal"
        elif method == "chordal-square":
            raise MethodNotApplicable("line graph of the hypergraph is not chordal")
    if cert is None:
        used = "brute"
        if h.m > gate.max_m:
            return XcCertificate(LIMITED, (), None, h.n, used)
        if method == "brute":
            return brute_exact_cover(h, gate)
        cert = brute_mwis(lg, omega, OracleGate(max_n=gate.max_m))
    if cert.weight != h.n:
        return XcCertificate(INFEASIBLE, (), cert.weight, h.n, used)
    C = tuple(sorted(cert.set))
    if not verify_exact_cover(h, C):
        raise RuntimeError("weight check passed but the hyperedges do not partition V")
    return XcCertificate(SOLUTION, C, cert.weight, h.n, used)
