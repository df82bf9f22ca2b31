"""Text formats for instances and certificates.

Graphs::

    p graph <n> <m>
    e <u> <v>          # m lines, 1 <= u < v <= n

Hypergraphs::

    p hypergraph <n> <m>
    h <v1> ... <vk>    # m lines, k >= 1, strictly increasing

Lines starting with ``c `` (or a lone ``c``) are comments. Anything else,
including blank lines, is rejected with the offending line number.
"""
from __future__ import annotations

from .errors import InputError
from .graph import Graph, build_graph
from .hypergraph import Hypergraph


def _int(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise InputError(f"expected a nonnegative integer, got {tok!r}", lineno)
    return int(tok)


def _lines(text: str):
    """Yield ``(lineno, tokens)`` for non-comment lines."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r")
        if line == "c" or line.startswith("c "):
            continue
        toks = line.split()
        if not toks:
            raise InputError("blank line", lineno)
        yield lineno, toks


def parse_instance(text: str) -> Graph | Hypergraph:
    """Parse either format, chosen by the header."""
    it = _lines(text)
    first = next(it, None)
    if first is None:
        raise InputError("missing header", 1)
    lineno, toks = first
    if len(toks) != 4 or toks[0] != "p" or toks[1] not in ("graph", "hypergraph"):
        raise InputError("header must be 'p graph <n> <m>' or 'p hypergraph <n> <m>'", lineno)
    n, m = _int(toks[2], lineno), _int(toks[3], lineno)
    tag = "e" if toks[1] == "graph" else "h"
    rows = []
    last = lineno
    for lineno, toks in it:
        last = lineno
        if toks[0] != tag:
            raise InputError(f"expected an '{tag}' line", lineno)
        vals = [_int(t, lineno) for t in toks[1:]]
        if not vals or (tag == "e" and len(vals) != 2):
            raise InputError("wrong number of vertices", lineno)
        if any(not 1 <= v <= n for v in vals):
            raise InputError(f"vertex out of range 1..{n}", lineno)
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise InputError("vertices must be strictly increasing", lineno)
        if len(rows) == m:
            raise InputError(f"more than the declared {m} lines", lineno)
        rows.append(tuple(vals))
    if len(rows) != m:
        raise InputError(f"declared {m} lines, found {len(rows)}", last + 1)
    if tag == "e":
        return build_graph(n, rows)
    return Hypergraph(n, tuple(rows))


def parse_graph(text: str) -> Graph:
    inst = parse_instance(text)
    if not isinstance(inst, Graph):
        raise InputError("expected a graph file", 1)
    return inst


def parse_hypergraph(text: str) -> Hypergraph:
    inst = parse_instance(text)
    if not isinstance(inst, Hypergraph):
        raise InputError("expected a hypergraph file", 1)
    return inst


def read_instance(path) -> Graph | Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def format_graph(g: Graph, comment: str | None = None) -> str:
    edges = g.edges()
    out = [f"c {comment}"] if comment else []
    out.append(f"p graph {g.n} {len(edges)}")
    out += [f"e {u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def format_hypergraph(h: Hypergraph, comment: str | None = None) -> str:
    out = [f"c {comment}"] if comment else []
    out.append(f"p hypergraph {h.n} {h.m}")
    out += ["h " + " ".join(map(str, e)) for e in h.edges]
    return "\n".join(out) + "\n"


def format_instance(inst, comment: str | None = None) -> str:
    if isinstance(inst, Hypergraph):
        return format_hypergraph(inst, comment)
    return format_graph(inst, comment)


def parse_certificate(text: str, edges: bool = False) -> list:
    """One line of space-separated entries.

    Entries are integers, or ``u-v`` endpoint pairs when ``edges`` is set.
    Comment lines are skipped; an empty certificate is allowed.
    """
    body = [ln for ln in text.splitlines() if ln.strip() and not (ln == "c" or ln.startswith("c "))]
    if len(body) > 1:
        raise InputError("certificate must be a single line", 2)
    toks = body[0].split() if body else []
    out = []
    for tok in toks:
        if edges:
            parts = tok.split("-")
            if len(parts) != 2:
                raise InputError(f"expected an edge 'u-v', got {tok!r}", 1)
            u, v = (_int(p, 1) for p in parts)
            out.append((min(u, v), max(u, v)))
        else:
            out.append(_int(tok, 1))
    return out


def format_certificate(items) -> str:
    return " ".join(f"{x[0]}-{x[1]}" if isinstance(x, tuple) else str(x) for x in items) + "\n"
