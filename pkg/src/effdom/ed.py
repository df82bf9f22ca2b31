"""Efficient domination: the square reduction, the dually chordal algorithm, dispatch."""
from __future__ import annotations

from .certificates import INFEASIBLE, LIMITED, SOLUTION, EdCertificate
from .errors import InputError, MethodNotApplicable
from .graph import Graph, neighborhood_weights, square
from .mwis import mwis_chordal
from .oracles import OracleGate, brute_ed, brute_mwis
from .orderings import MnoResult, compute_mno, is_chordal, verify_mno

# exponential fallbacks inside the solvers refuse anything larger
SOLVER_GATE = OracleGate(max_n=24, max_m=24)

METHODS = ("auto", "dc", "chordal-square", "brute")


def verify_ed(g: Graph, D) -> bool:
    """Every vertex lies in exactly one closed neighbourhood ``N[d]``."""
    count = [0] * (g.n + 1)
    for d in D:
        if not 1 <= d <= g.n:
            raise InputError(f"vertex {d} out of range 1..{g.n}")
        count[d] += 1
        for u in g.adj[d]:
            count[u] += 1
    return all(c == 1 for c in count[1:])


def _finish(g: Graph, chosen, weight: int, method: str) -> EdCertificate:
    if weight != g.n:
        return EdCertificate(INFEASIBLE, (), weight, g.n, method)
    D = tuple(sorted(chosen))
    if not verify_ed(g, D):
        raise RuntimeError(f"{method}: weight check passed but neighbourhoods overlap")
    return EdCertificate(SOLUTION, D, weight, g.n, method)


def ed_via_square(g: Graph, gate: OracleGate = SOLVER_GATE, allow_brute: bool = True) -> EdCertificate:
    """Maximum weight independent set of ``G^2`` under ``|N[v]|``; ED iff it reaches ``|V|``.

    Runs Frank's algorithm when the square is chordal, otherwise the
    branch-and-bound oracle (method ``brute``) up to ``gate.max_n``
    vertices, beyond which the result is ``resource-limited``.
    """
    sq = square(g)
    omega = neighborhood_weights(g)
    rep = is_chordal(sq)
    if rep.verdict:
        cert = mwis_chordal(sq, omega, rep.witness, check=False)
        return _finish(g, cert.set, cert.weight, "chordal-square")
    if not allow_brute:
        raise MethodNotApplicable("square of the graph is not chordal")
    if g.n > gate.max_n:
        return EdCertificate(LIMITED, (), None, g.n, "brute")
    cert = brute_mwis(sq, omega, gate)
    return _finish(g, cert.set, cert.weight, "brute")


def ed_dually_chordal(g: Graph, mno: MnoResult | None = None) -> EdCertificate:
    """Linear-time ED on a dually chordal graph from a maximum neighbourhood ordering.

    With ``m_i`` the maximum neighbour of ``v_i``, ``v_j`` (j > i) is within
    distance two of ``v_i`` exactly when ``v_j`` lies in ``N[m_i]``. So
    weight charged to ``m_i`` stands in for the charge to every later
    square-neighbour, and ``G^2`` is never built. Disconnected graphs need
    no special handling: the last vertex of each component is its own
    maximum neighbour.
    """
    if mno is None:
        mno = compute_mno(g)
        if not isinstance(mno, MnoResult):
            raise MethodNotApplicable("graph is not dually chordal")
    elif not verify_mno(g, mno):
        raise InputError("supplied ordering is not a maximum neighbourhood ordering")
    sigma, mx = mno.sigma, mno.maxneighbor
    n, adj = g.n, g.adj

    omega = [len(a) + 1 for a in adj]
    wp = [0] * (n + 1)
    marked = [False] * (n + 1)
    get = wp.__getitem__
    for v in sigma:
        w = omega[v] - wp[v] - sum(map(get, adj[v]))
        omega[v] = w
        if w > 0:
            marked[v] = True
            wp[mx[v]] += w

    blocked = [False] * (n + 1)
    D = []
    for v in reversed(sigma):
        if marked[v] and not blocked[mx[v]]:
            D.append(v)
            blocked[v] = True
            for u in adj[v]:
                blocked[u] = True
    total = sum(len(adj[d]) + 1 for d in D)
    return _finish(g, D, total, "dc")


def solve_ed(g: Graph, method: str = "auto", gate: OracleGate = SOLVER_GATE) -> EdCertificate:
    """Dispatch: ``dc`` for dually chordal graphs, else the square reduction.

    Forced methods never fall back; an inapplicable one raises
    :class:`MethodNotApplicable`.
    """
    if method == "auto":
        mno = compute_mno(g)
        if isinstance(mno, MnoResult):
            return ed_dually_chordal(g, mno)
        return ed_via_square(g, gate)
    if method == "dc":
        return ed_dually_chordal(g)
    if method == "chordal-square":
        return ed_via_square(g, gate, allow_brute=False)
    if method == "brute":
        if g.n > gate.max_n:
            return EdCertificate(LIMITED, (), None, g.n, "brute")
        return brute_ed(g, gate)
    raise ValueError(f"unknown method {method!r}")
