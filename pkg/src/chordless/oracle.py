"""Brute-force reference enumerators and per-output verifiers.

Everything here works on an adjacency-matrix snapshot and shares no code
with the enumerators it checks, apart from ``canonical_cycle``.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import NamedTuple

from .cycles import canonical_cycle
from .graph import Graph

__all__ = [
    "AdjacencyMatrix",
    "CycleCount",
    "OracleLimitError",
    "brute_cycles",
    "brute_paths",
    "count_all_cycles",
    "is_chordless",
]

DEFAULT_LIMIT = 16


class OracleLimitError(ValueError):
    """The exponential oracle refuses graphs above its size limit."""


class AdjacencyMatrix:
    """Symmetric boolean n x n table of the active edges of a graph.

    Rows are stored as sets so memory stays O(n + m) on large sparse
    graphs; ``m[u, v]`` reads an entry.
    """

    def __init__(self, n: int, edges=()) -> None:
        self.n = n
        self.rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            self.rows[u].add(v)
            self.rows[v].add(u)

    @classmethod
    def from_graph(cls, g: Graph) -> AdjacencyMatrix:
        return cls(g.n, g.active_edges())

    def __getitem__(self, uv: tuple[int, int]) -> bool:
        u, v = uv
        return v in self.rows[u]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.rows[v])


def _matrix(g) -> AdjacencyMatrix:
    return g if isinstance(g, AdjacencyMatrix) else AdjacencyMatrix.from_graph(g)


def is_chordless(m: AdjacencyMatrix, seq: Sequence[int], closed: bool = False) -> bool:
    """True iff no edge of ``m`` joins two non-consecutive vertices of ``seq``.

    Raises ``ValueError`` if ``seq`` is not a path (or, with ``closed``, a
    cycle) of the graph.
    """
    seq = list(seq)
    k = len(seq)
    if len(set(seq)) != k:
        raise ValueError(f"repeated vertex in {seq}")
    if closed and k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    rows = m.rows
    for i in range(k - 1):
        if seq[i + 1] not in rows[seq[i]]:
            raise ValueError(f"{seq[i]} and {seq[i + 1]} are not adjacent")
    if closed and seq[0] not in rows[seq[-1]]:
        raise ValueError(f"{seq[-1]} and {seq[0]} are not adjacent")
    for i in range(k):
        row = rows[seq[i]]
        for j in range(i + 2, k):
            if closed and i == 0 and j == k - 1:
                continue
            if seq[j] in row:
                return False
    return True


def _check_size(m: AdjacencyMatrix, limit: int | None) -> None:
    if limit is not None and m.n > limit:
        raise OracleLimitError(f"graph has {m.n} vertices, oracle limit is {limit}")


def brute_paths(g, s: int, t: int, limit: int | None = DEFAULT_LIMIT) -> set[tuple[int, ...]]:
    """All chordless s-t paths by exhaustive DFS over simple paths.

    A prefix that already has a chord is abandoned (a chord never goes
    away by extending the path); every survivor is re-checked with
    ``is_chordless``.
    """
    m = _matrix(g)
    _check_size(m, limit)
    if s == t:
        raise ValueError("s and t must differ")
    rows = m.rows
    adj = [m.neighbors(v) for v in range(m.n)]
    out: set[tuple[int, ...]] = set()
    path = [s]
    on_path = [False] * m.n
    on_path[s] = True

    def extend() -> None:
        last = path[-1]
        for w in adj[last]:
            if on_path[w]:
                continue
            if not rows[w].isdisjoint(path[:-1]):
                continue
            path.append(w)
            if w == t:
                out.add(tuple(path))
            else:
                on_path[w] = True
                extend()
                on_path[w] = False
            path.pop()

    extend()
    for p in out:
        assert is_chordless(m, p)
    return out


def _simple_cycles(m: AdjacencyMatrix, chordless: bool, cap: int | None):
    # Each cycle is grown from its minimum vertex and kept in the orientation
    # where the second vertex is smaller than the last.
    rows = m.rows
    adj = [m.neighbors(v) for v in range(m.n)]
    found = []
    count = 0
    saturated = False
    for s in range(m.n):
        path = [s]
        on_path = [False] * m.n
        on_path[s] = True
        stack = [iter([w for w in adj[s] if w > s])]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on_path[path.pop()] = False
                continue
            if on_path[w] or w < s:
                continue
            if chordless and not rows[w].isdisjoint(path[1:-1]):
                continue
            closes = s in rows[w]
            if len(path) >= 2 and closes and path[1] < w:
                if not chordless or is_chordless(m, path + [w], closed=True):
                    count += 1
                    if chordless:
                        found.append(tuple(path + [w]))
                    if cap is not None and count >= cap:
                        saturated = True
                        return found, count, saturated
            if chordless and len(path) >= 2 and closes:
                # w closes the cycle; going further would make {w, s} a chord
                continue
            path.append(w)
            on_path[w] = True
            stack.append(iter(adj[w]))
    return found, count, saturated


def brute_cycles(g, limit: int | None = DEFAULT_LIMIT) -> set[tuple[int, ...]]:
    """All chordless cycles in canonical form, by exhaustive DFS."""
    m = _matrix(g)
    _check_size(m, limit)
    found, _, _ = _simple_cycles(m, chordless=True, cap=None)
    out = set(found)
    assert all(canonical_cycle(c) == c for c in out)
    return out


class CycleCount(NamedTuple):
    count: int
    saturated: bool


def count_all_cycles(g, cap: int | None = None, limit: int | None = DEFAULT_LIMIT) -> CycleCount:
    """Number of simple cycles, chorded or not.

    With ``cap`` the search stops once ``cap`` cycles are seen and the
    result is a lower bound flagged ``saturated``; the size limit is then
    not enforced.
    """
    m = _matrix(g)
    if cap is None:
        _check_size(m, limit)
    _, count, saturated = _simple_cycles(m, chordless=False, cap=cap)
    return CycleCount(count, saturated)
