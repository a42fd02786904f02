"""Edge-list parsing/emission and streaming solution output."""

from __future__ import annotations

from collections.abc import Sequence
from typing import TextIO

from .graph import Graph

__all__ = [
    "EdgeListError",
    "SolutionWriter",
    "format_edge_list",
    "parse_edge_list",
    "read_edge_list",
]


class EdgeListError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_edge_list(text: str) -> tuple[Graph, list[str]]:
    """Parse one ``label label`` edge per line.

    Labels get dense ids in order of first appearance.  Blank lines and
    lines starting with ``#`` are skipped.  Returns the graph and the
    id-to-label list.
    """
    ids: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    seen: dict[frozenset[int], int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise EdgeListError(lineno, f"expected 2 labels, found {len(tokens)}")
        a, b = tokens
        if a == b:
            raise EdgeListError(lineno, f"self-loop at {a!r}")
        pair = []
        for label in (a, b):
            if label not in ids:
                ids[label] = len(labels)
                labels.append(label)
            pair.append(ids[label])
        key = frozenset(pair)
        if key in seen:
            raise EdgeListError(lineno, f"duplicate edge {a} {b} (first on line {seen[key]})")
        seen[key] = lineno
        edges.append((pair[0], pair[1]))
    return Graph(len(labels), edges), labels


def read_edge_list(path: str) -> tuple[Graph, list[str]]:
    with open(path, encoding="utf-8") as f:
        return parse_edge_list(f.read())


def format_edge_list(g: Graph, labels: Sequence[str] | None = None) -> str:
    """Emit the construction edges of ``g`` in their original order.

    Re-parsing the output reproduces the graph and label mapping whenever
    the labels were themselves assigned by ``parse_edge_list``.  Isolated
    vertices are not representable.
    """
    name = (lambda v: labels[v]) if labels is not None else str
    lines = [f"# n={g.n} m={g.m}"]
    lines.extend(f"{name(u)} {name(v)}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


class SolutionWriter:
    """Streams one solution per line, then a ``# count=...`` trailer.

    With ``count_only`` the solution lines are suppressed.
    """

    def __init__(self, stream: TextIO, labels: Sequence[str] | None = None, count_only: bool = False):
        self.stream = stream
        self.labels = labels
        self.count_only = count_only
        self.count = 0

    def write(self, seq: Sequence[int]) -> None:
        self.count += 1
        if self.count_only:
            return
        labels = self.labels
        if labels is None:
            line = " ".join(map(str, seq))
        else:
            line = " ".join(labels[v] for v in seq)
        self.stream.write(line + "\n")

    def finish(self, elapsed_ms: float, capped: bool = False) -> None:
        trailer = f"# count={self.count} elapsed_ms={elapsed_ms:.3f}"
        if capped:
            trailer += " capped=true"
        self.stream.write(trailer + "\n")
        self.stream.flush()
