"""Mutable undirected simple graph with journaled removal and exact restore.

Each vertex owns a circular doubly-linked list of half-edges ("arcs"),
built once in ascending neighbor order.  Removing a vertex unlinks the
twin of every arc in its list from the neighbor's list and leaves the
vertex's own list frozen, so a restore can relink the twins in reverse
order (dancing links).  Undo is strictly LIFO through a journal.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from itertools import count

__all__ = [
    "Checkpoint",
    "Graph",
    "GraphError",
    "MarkSet",
    "from_edge_list",
    "mark_reachable",
    "shortest_path",
]

_serials = count(1)


class GraphError(ValueError):
    """Invalid graph construction input (self-loop, multi-edge, bad id)."""


@dataclass(frozen=True)
class Checkpoint:
    journal_length: int
    serial: int


class MarkSet:
    """Per-vertex flags with constant-time bulk clear (epoch stamping)."""

    __slots__ = ("stamp", "epoch")

    def __init__(self, n: int) -> None:
        self.stamp = [0] * n
        self.epoch = 1

    def clear(self) -> None:
        self.epoch += 1

    def add(self, v: int) -> None:
        self.stamp[v] = self.epoch

    def discard(self, v: int) -> None:
        if self.stamp[v] == self.epoch:
            self.stamp[v] = 0

    def __contains__(self, v: int) -> bool:
        return self.stamp[v] == self.epoch

    def members(self) -> set[int]:
        e = self.epoch
        return {v for v, x in enumerate(self.stamp) if x == e}

    def __len__(self) -> int:
        e = self.epoch
        return sum(1 for x in self.stamp if x == e)


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Arcs ``2e`` and ``2e+1`` are the two directions of edge ``e``; arc
    ``2m + v`` is the list sentinel of vertex ``v``.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        edge_list: list[tuple[int, int]] = []
        arc_to: list[dict[int, int]] = [{} for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in arc_to[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            e = len(edge_list)
            edge_list.append((u, v))
            arc_to[u][v] = 2 * e
            arc_to[v][u] = 2 * e + 1

        m = len(edge_list)
        size = 2 * m + n
        head = [0] * size
        nxt = [0] * size
        prv = [0] * size
        for e, (u, v) in enumerate(edge_list):
            head[2 * e] = v
            head[2 * e + 1] = u
        for v in range(n):
            sentinel = 2 * m + v
            head[sentinel] = v
            last = sentinel
            for w in sorted(arc_to[v]):
                a = arc_to[v][w]
                nxt[last] = a
                prv[a] = last
                last = a
            nxt[last] = sentinel
            prv[sentinel] = last

        self.n = n
        self.m = m
        self.edges = edge_list
        self._arc_to = arc_to
        self._head = head
        self._nxt = nxt
        self._prv = prv
        self._base = 2 * m
        self._active = [True] * n
        self._edge_live = [True] * m
        self._deg = [len(a) for a in arc_to]
        self.m_active = m
        self._journal: list[int] = []
        self._serial: list[int] = []
        self.peak_journal = 0
        self.edge_scans = 0

    # -- queries -----------------------------------------------------------

    def is_active(self, v: int) -> bool:
        return self._active[v]

    def degree(self, v: int) -> int:
        return self._deg[v]

    def is_adjacent(self, u: int, v: int) -> bool:
        a = self._arc_to[u].get(v)
        return (
            a is not None
            and self._edge_live[a >> 1]
            and self._active[u]
            and self._active[v]
        )

    def neighbors(self, v: int) -> list[int]:
        """Active neighbors of ``v`` in ascending id order."""
        head, nxt = self._head, self._nxt
        sentinel = self._base + v
        out = []
        a = nxt[sentinel]
        while a != sentinel:
            out.append(head[a])
            a = nxt[a]
        self.edge_scans += len(out)
        return out

    def vertices(self) -> list[int]:
        return [v for v in range(self.n) if self._active[v]]

    def active_edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            if self._active[v]:
                out.extend((v, w) for w in self.neighbors(v) if v < w)
        return out

    def snapshot(self) -> tuple:
        """Observable state: active flags plus ordered neighbor lists."""
        return (
            tuple(self._active),
            tuple(tuple(self.neighbors(v)) if self._active[v] else () for v in range(self.n)),
            self.m_active,
        )

    def copy(self) -> Graph:
        """Fresh graph holding only the currently active vertices and edges."""
        g = Graph(self.n, self.active_edges())
        for v in range(self.n):
            if not self._active[v]:
                g.remove_vertex(v)
        g._journal.clear()
        g._serial.clear()
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m_active={self.m_active})"

    # -- mutation ----------------------------------------------------------

    def _push(self, entry: int) -> None:
        self._journal.append(entry)
        self._serial.append(next(_serials))
        if len(self._journal) > self.peak_journal:
            self.peak_journal = len(self._journal)

    def remove_vertex(self, v: int) -> None:
        assert self._active[v], f"vertex {v} is not active"
        head, nxt, prv, deg = self._head, self._nxt, self._prv, self._deg
        self._active[v] = False
        sentinel = self._base + v
        a = nxt[sentinel]
        while a != sentinel:
            b = a ^ 1
            p, q = prv[b], nxt[b]
            nxt[p] = q
            prv[q] = p
            deg[head[a]] -= 1
            a = nxt[a]
        self.m_active -= deg[v]
        self.edge_scans += deg[v]
        self._push(v)

    def remove_edge(self, u: int, v: int) -> None:
        a = self._arc_to[u].get(v)
        assert a is not None and self.is_adjacent(u, v), f"edge ({u}, {v}) is not active"
        nxt, prv = self._nxt, self._prv
        for b in (a, a ^ 1):
            p, q = prv[b], nxt[b]
            nxt[p] = q
            prv[q] = p
        self._edge_live[a >> 1] = False
        self._deg[u] -= 1
        self._deg[v] -= 1
        self.m_active -= 1
        self._push(~a)

    def checkpoint(self) -> Checkpoint:
        k = len(self._journal)
        return Checkpoint(k, self._serial[k - 1] if k else 0)

    def restore(self, c: Checkpoint) -> None:
        journal = self._journal
        k = c.journal_length
        assert k <= len(journal) and (k == 0 or self._serial[k - 1] == c.serial), (
            "checkpoint was invalidated by an earlier restore"
        )
        head, nxt, prv, deg = self._head, self._nxt, self._prv, self._deg
        while len(journal) > k:
            entry = journal.pop()
            if entry >= 0:
                v = entry
                sentinel = self._base + v
                a = prv[sentinel]
                while a != sentinel:
                    b = a ^ 1
                    nxt[prv[b]] = b
                    prv[nxt[b]] = b
                    deg[head[a]] += 1
                    a = prv[a]
                self._active[v] = True
                self.m_active += deg[v]
                self.edge_scans += deg[v]
            else:
                a = ~entry
                for b in (a ^ 1, a):
                    nxt[prv[b]] = b
                    prv[nxt[b]] = b
                self._edge_live[a >> 1] = True
                deg[head[a]] += 1
                deg[head[a ^ 1]] += 1
                self.m_active += 1
        del self._serial[k:]

    @property
    def journal_size(self) -> int:
        return len(self._journal)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def mark_reachable(
    g: Graph,
    sources: Iterable[int],
    marks: MarkSet,
    guard: Callable[[int], bool] | None = None,
    exclude: MarkSet | None = None,
) -> int:
    """Mark everything reachable from ``sources`` through unmarked vertices.

    A vertex is entered only if it is active, not already marked, not in
    ``exclude`` and satisfies ``guard``.  Sources are subject to the same
    filter.  Returns the number of newly marked vertices; the work is
    proportional to the arcs of the newly marked vertices.
    """
    head, nxt = g._head, g._nxt
    base = g._base
    stamp, epoch = marks.stamp, marks.epoch
    if exclude is not None:
        xstamp, xepoch = exclude.stamp, exclude.epoch
    else:
        xstamp, xepoch = None, None
    active = g._active
    stack = []
    for x in sources:
        if (
            stamp[x] != epoch
            and active[x]
            and (xstamp is None or xstamp[x] != xepoch)
            and (guard is None or guard(x))
        ):
            stamp[x] = epoch
            stack.append(x)
    found = len(stack)
    scans = 0
    while stack:
        x = stack.pop()
        sentinel = base + x
        a = nxt[sentinel]
        while a != sentinel:
            scans += 1
            w = head[a]
            if (
                stamp[w] != epoch
                and (xstamp is None or xstamp[w] != xepoch)
                and (guard is None or guard(w))
            ):
                stamp[w] = epoch
                found += 1
                stack.append(w)
            a = nxt[a]
    g.edge_scans += scans
    return found


def shortest_path(
    g: Graph, s: int, t: int, exclude: MarkSet | None = None
) -> list[int] | None:
    """Minimum-edge s-t path by BFS, or ``None`` when t is unreachable.

    Any shortest path is chordless: a chord would shortcut it.
    """
    if s == t:
        raise ValueError("s and t must differ")
    if not (g.is_active(s) and g.is_active(t)):
        raise ValueError("s and t must be active vertices")
    parent = {t: t}
    head, nxt, base = g._head, g._nxt, g._base
    queue = deque([t])
    scans = 0
    while queue:
        x = queue.popleft()
        sentinel = base + x
        a = nxt[sentinel]
        while a != sentinel:
            scans += 1
            w = head[a]
            if w not in parent and (exclude is None or w not in exclude):
                parent[w] = x
                if w == s:
                    g.edge_scans += scans
                    path = [s]
                    while path[-1] != t:
                        path.append(parent[path[-1]])
                    return path
                queue.append(w)
            a = nxt[a]
    g.edge_scans += scans
    return None


def _check_vertex(g: Graph, v: int, name: str) -> None:
    if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < g.n:
        raise ValueError(f"{name}={v!r} is not a vertex of a graph with {g.n} vertices")
    if not g.is_active(v):
        raise ValueError(f"{name}={v} has been removed from the graph")
