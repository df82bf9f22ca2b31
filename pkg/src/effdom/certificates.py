"""Solver outcomes.

``status`` is ``solution``, ``infeasible`` or ``resource-limited`` (no
polynomial route applied and the instance exceeded the brute-force gate).
``method`` names the route taken; ``brute`` marks an exponential one.
"""
from __future__ import annotations

from dataclasses import dataclass, field

SOLUTION = "solution"
INFEASIBLE = "infeasible"
LIMITED = "resource-limited"


@dataclass(frozen=True)
class EdCertificate:
    status: str
    D: tuple = ()
    weight_sum: int | None = None  # sum of |N[d]|; the optimum found when infeasible
    target: int = 0                # |V|
    method: str = ""


@dataclass(frozen=True)
class EedCertificate:
    status: str
    M: tuple = ()
    forced: tuple = ()
    method: str = ""
    reason: str | None = None      # why the structural screen rejected the graph
    witness: tuple = ()
    weight_sum: int | None = None  # from the line-graph ED run
    target: int = 0


@dataclass(frozen=True)
class MimCertificate:
    M: tuple
    size: int
    status: str = SOLUTION
    method: str = ""


@dataclass(frozen=True)
class XcCertificate:
    status: str
    C: tuple = ()
    covered_count: int | None = None  # sum of |e| over the chosen hyperedges
    target: int = 0
    method: str = ""


@dataclass(frozen=True)
class MwisCertificate:
    set: frozenset
    weight: int
    marks: tuple = field(default=(), compare=False)  # forward-pass marks in scan order
    method: str = "frank"
