"""Constructions used as hardness test vectors."""
from __future__ import annotations

from .errors import InputError
from .graph import Graph, build_graph
from .hypergraph import Hypergraph, is_alpha_acyclic
from .orderings import is_chordal, is_dually_chordal


def universal_vertex_gadget(g: Graph) -> Graph:
    """``g`` plus vertex ``n+1`` adjacent to everything; always dually chordal."""
    u = g.n + 1
    out = build_graph(u, g.edges() + [(v, u) for v in g.vertices])
    assert is_dually_chordal(out).verdict
    return out


def split_square_gadget(g: Graph) -> Graph:
    """Split graph whose square has independence number ``alpha(g) + 1``.

    Layout: ``1..n`` are the vertices of ``g``; ``n+1..n+m`` stand for its
    edges in ``g.edges()`` order, each joined to both endpoints and to all
    other edge nodes; ``f = n+m+1`` joins every edge node; ``g = n+m+2``
    hangs off ``f``.
    """
    edges = g.edges()
    if not edges:
        raise InputError("split_square_gadget needs at least one edge")
    n, m = g.n, len(edges)
    f, tail = n + m + 1, n + m + 2
    clique = list(range(n + 1, n + m + 1)) + [f]
    out = [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
    for k, (x, y) in enumerate(edges, n + 1):
        out += [(x, k), (y, k)]
    out.append((f, tail))
    F = build_graph(tail, out)
    assert is_chordal(F).verdict
    return F


def xc_gadget(h: Hypergraph) -> Hypergraph:
    """Alpha-acyclic hypergraph with an exact cover iff ``h`` has one.

    Adds vertices ``u = n+1`` and ``v = n+2`` and hyperedges
    ``V + {u}`` (index ``m+1``) and ``{u, v}`` (index ``m+2``).
    """
    u, v = h.n + 1, h.n + 2
    out = Hypergraph(h.n + 2, h.edges + (tuple(range(1, u + 1)), (u, v)))
    assert is_alpha_acyclic(out).verdict
    return out
