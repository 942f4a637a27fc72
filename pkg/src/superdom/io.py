"""Plain-text graph files.

::

    # optional comments
    n 4
    e 0 1
    e 1 2

Vertices are 0-based. Serialisation writes the header and then every edge
``u < v`` in sorted order, so parse followed by format is the identity on
files written by :func:`format_graph`.
"""
from __future__ import annotations

from pathlib import Path

from .graph import Graph


class GraphFormatError(ValueError):
    pass


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        tag = fields[0]
        try:
            values = [int(x) for x in fields[1:]]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field in {raw!r}") from None
        if tag == "n":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: repeated header")
            if len(values) != 1 or values[0] < 1:
                raise GraphFormatError(f"line {lineno}: header must be 'n <count>' with count >= 1")
            n = values[0]
        elif tag == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before the 'n' header")
            if len(values) != 2:
                raise GraphFormatError(f"line {lineno}: edge lines are 'e <u> <v>'")
            u, v = values
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"line {lineno}: endpoint out of range 0..{n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add(key)
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {tag!r}")
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    return Graph.from_edges(n, seen)


def read_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")
