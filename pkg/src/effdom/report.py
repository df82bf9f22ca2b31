"""Recognition verdicts with checkable witnesses."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class ClassReport:
    """Outcome of a class-recognition test.

    ``witness_kind`` is one of ``peo``, ``mno``, ``join-tree``,
    ``underlying-tree`` (positive) or ``hole``, ``helly-triple``,
    ``gyo-residue``, ``mno-residue`` (negative); ``None`` when the verdict
    needs no witness (e.g. a Helly hypergraph).
    """

    verdict: bool
    witness_kind: str | None = None
    witness: Any = None

    def __bool__(self):
        return self.verdict
