"""Plain-text edge-list format.

::

    # comment
    digraph 4        (or: graph 4)
    0 1
    1 2

The header names the vertex count; each following line is one arc (or one
edge for ``graph``).  ``#`` starts a comment, blank lines are ignored and
vertex ids are 0-based.
"""

from __future__ import annotations

from typing import Union

from .digraph import Digraph, UGraph
from .errors import ParseError

__all__ = ["parse_edge_list", "format_edge_list", "read_edge_list"]


def parse_edge_list(text: str) -> Union[Digraph, UGraph]:
    kind = None
    n = 0
    pairs = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if kind is None:
            if len(parts) != 2 or parts[0] not in ("digraph", "graph"):
                raise ParseError("expected header 'digraph <n>' or 'graph <n>'", lineno)
            kind = parts[0]
            n = _int(parts[1], lineno)
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected '<u> <v>', got {line!r}", lineno)
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        for w in (u, v):
            if not 0 <= w < n:
                raise ParseError(f"vertex {w} outside 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if kind == "digraph" else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate {'arc' if kind == 'digraph' else 'edge'} {u} {v}", lineno)
        seen.add(key)
        pairs.append(key)
    if kind is None:
        raise ParseError("empty input: missing header")
    if kind == "digraph":
        return Digraph(n, pairs)
    return UGraph(n, pairs)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno) from None


def format_edge_list(G: Union[Digraph, UGraph]) -> str:
    if isinstance(G, Digraph):
        lines = [f"digraph {G.n}"] + [f"{u} {v}" for u, v in G.arcs]
    else:
        lines = [f"graph {G.n}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path: str) -> Union[Digraph, UGraph]:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
