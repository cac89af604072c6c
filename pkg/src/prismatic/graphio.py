"""Text formats for graphs, clique covers and triangle packings.

Graph file::

    p <n> <m>
    c label <v> <text>      (optional, one per labelled vertex)
    e <u> <v>               (m lines, 0-based, u < v, sorted)

Any other ``c`` line is a comment.  Files end with a newline.
"""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Union

from .errors import GraphError
from .graph import Graph, Triangle, build_graph

if TYPE_CHECKING:
    from .clique_cover import CliqueCover


def format_graph(G: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"p {G.n} {G.m}"]
    lines.extend(f"c {text}" for text in comments)
    if G.labels is not None:
        for v, lab in enumerate(G.labels):
            lines.append(f"c label {v} {lab}")
    lines.extend(f"e {u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the graph format; labels come back as strings."""
    header = None
    edges = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        tag = line.split(maxsplit=1)[0]
        if tag == "c":
            parts = line.split(maxsplit=3)
            if len(parts) >= 3 and parts[1] == "label":
                try:
                    v = int(parts[2])
                except ValueError:
                    raise GraphError(f"line {lineno}: bad label vertex {parts[2]!r}") from None
                labels[v] = parts[3] if len(parts) == 4 else ""
            continue
        fields = line.split()
        if tag == "p":
            if header is not None:
                raise GraphError(f"line {lineno}: duplicate 'p' line")
            if len(fields) != 3:
                raise GraphError(f"line {lineno}: expected 'p <n> <m>'")
            try:
                header = (int(fields[1]), int(fields[2]))
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer in 'p' line") from None
        elif tag == "e":
            if header is None:
                raise GraphError(f"line {lineno}: edge before 'p' line")
            if len(fields) != 3:
                raise GraphError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                edges.append((int(fields[1]), int(fields[2])))
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer endpoint") from None
        else:
            raise GraphError(f"line {lineno}: unknown line type {tag!r}")
    if header is None:
        raise GraphError("missing 'p <n> <m>' line")
    n, m = header
    G = build_graph(n, edges)
    if G.m != m:
        raise GraphError(f"header announces {m} edges but {G.m} distinct edges were read")
    if labels:
        if any(not 0 <= v < n for v in labels):
            raise GraphError("label for a vertex outside the graph")
        G = Graph(G.n, G.rows, tuple(labels.get(v, "") for v in range(n)))
    return G


def read_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(G: Graph, path: Union[str, Path], comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_graph(G, comments), encoding="utf-8")


def format_cover(cover: "CliqueCover") -> str:
    lines = [f"t {a} {b} {c}" for a, b, c in cover.triangles]
    lines += [f"e {u} {v}" for u, v in cover.edges]
    lines += [f"v {u}" for u in cover.singletons]
    lines.append(f"size {cover.size}")
    return "\n".join(lines) + "\n"


def format_packing(packing: Iterable[Triangle]) -> str:
    tris = sorted(packing)
    lines = [f"t {a} {b} {c}" for a, b, c in tris]
    lines.append(f"size {len(tris)}")
    return "\n".join(lines) + "\n"
