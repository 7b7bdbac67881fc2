"""Edge-list ingestion and serialization.

Format: a header ``n m directed|undirected`` followed by ``m`` lines ``u v w``.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .errors import GraphFormatError
from .models import Edge, WeightedDigraph

if TYPE_CHECKING:
    from collections.abc import Iterable
    from pathlib import Path

_ORIENTATIONS = {"directed": True, "undirected": False}


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"{what} must be a decimal integer, got {token!r}", line=line) from None


def parse_graph(text: str | Iterable[str], w_max: int | None = None) -> WeightedDigraph:
    """Parse an edge-list document into a validated graph."""
    lines = text.splitlines() if isinstance(text, str) else [line.rstrip("\n") for line in text]
    numbered = [(i, line.split()) for i, line in enumerate(lines, start=1) if line.strip()]

    if not numbered:
        raise GraphFormatError("empty input, expected header 'n m directed|undirected'")

    header_line, header = numbered[0]
    if len(header) != 3:
        raise GraphFormatError("header must be 'n m directed|undirected'", line=header_line)
    n = _parse_int(header[0], "node count", header_line)
    m = _parse_int(header[1], "edge count", header_line)
    if header[2] not in _ORIENTATIONS:
        raise GraphFormatError(f"orientation must be 'directed' or 'undirected', got {header[2]!r}", line=header_line)
    if n < 1 or m < 0:
        raise GraphFormatError(f"invalid sizes n={n}, m={m}", line=header_line)

    body = numbered[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges but {len(body)} edge lines follow", line=header_line)

    edges = []
    for line_no, tokens in body:
        if len(tokens) != 3:
            raise GraphFormatError("edge line must be 'u v w'", line=line_no)
        u, v, w = (_parse_int(token, name, line_no) for token, name in zip(tokens, ("u", "v", "w"), strict=True))
        edges.append(Edge(u, v, w))

    return WeightedDigraph.build(n, edges, _ORIENTATIONS[header[2]], w_max=w_max)


def serialize_graph(g: WeightedDigraph) -> str:
    orientation = "directed" if g.directed else "undirected"
    lines = [f"{g.n} {g.m} {orientation}"]
    lines.extend(f"{u} {v} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: Path, w_max: int | None = None) -> WeightedDigraph:
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read(), w_max=w_max)


def write_graph(g: WeightedDigraph, path: Path) -> Path:
    path.write_text(serialize_graph(g), encoding="utf-8")
    return path
