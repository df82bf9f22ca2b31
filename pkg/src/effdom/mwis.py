"""Maximum weight independent set on chordal graphs (Frank's two passes)."""
from __future__ import annotations

from typing import Mapping

from .certificates import MwisCertificate
from .errors import InputError, NotChordal
from .graph import Graph
from .orderings import is_peo


def mwis_chordal(g: Graph, omega: Mapping[int, int], peo, check: bool = True) -> MwisCertificate:
    """Maximum weight independent set of chordal ``g`` along a PEO.

    The forward pass marks every vertex whose residual weight is still
    positive and charges that residual to its neighbours (floored at zero).
    The backward pass keeps marked vertices and unmarks their neighbours.
    ``check=False`` skips the PEO verification.
    """
    if check:
        res = is_peo(g, peo)
        if not res.valid:
            raise NotChordal("ordering is not a perfect elimination ordering", res.witness)
    n, adj = g.n, g.adj
    residual = [0] * (n + 1)
    for v in g.vertices:
        w = omega[v]
        if w < 0:
            raise InputError(f"negative weight at vertex {v}")
        residual[v] = w

    marked = [False] * (n + 1)
    marks = []
    for v in peo:
        r = residual[v]
        if r > 0:
            marked[v] = True
            marks.append(v)
            for u in adj[v]:
                ru = residual[u] - r
                residual[u] = ru if ru > 0 else 0

    chosen = []
    for v in reversed(peo):
        if marked[v]:
            chosen.append(v)
            for u in adj[v]:
                marked[u] = False
    s = frozenset(chosen)
    return MwisCertificate(s, sum(omega[v] for v in s), tuple(marks))
