"""Enumeration of chordless (induced) s-t paths.

Two enumerators share the same branching rule: a chordless s-t path that
leaves ``s`` through ``v`` is ``s`` followed by a chordless v-t path of the
graph with ``s`` and every other neighbor of ``s`` deleted, and those
subproblems partition the solutions.

``enumerate_chordless_st_paths_simple`` recomputes reachability at every
node.  ``enumerate_chordless_st_paths`` carries a shortest-path witness
into the first child and maintains reachability marks incrementally along
each chain of first children, which brings the work per output down to
O(|V| + |E|).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from .graph import Graph, MarkSet, _check_vertex, mark_reachable

__all__ = [
    "EnumStats",
    "PathSink",
    "branch_candidates",
    "chordless_st_paths",
    "enumerate_chordless_st_paths",
    "enumerate_chordless_st_paths_simple",
    "recompute_marks",
    "update_marks_first_child",
]

#: Receives each solution as a fresh list; a truthy return value stops the run.
PathSink = Callable[[list[int]], "bool | None"]


@dataclass
class EnumStats:
    outputs: int = 0
    iterations: int = 0
    recomputes: int = 0
    max_delay_edgescans: int = 0
    bounded: bool = False
    stopped: bool = False
    capped: bool = False
    peak_journal: int = 0
    _last_scans: int = field(default=0, repr=False, compare=False)

    def _start(self, g: Graph) -> None:
        self._last_scans = g.edge_scans

    def _tick(self, g: Graph) -> None:
        delay = g.edge_scans - self._last_scans
        if delay > self.max_delay_edgescans:
            self.max_delay_edgescans = delay
        self._last_scans = g.edge_scans

    def _finish(self, g: Graph) -> None:
        self._tick(g)
        self.peak_journal = max(self.peak_journal, g.peak_journal)


# -- mark maintenance --------------------------------------------------------


def _block(blocked: MarkSet, s: int, nbrs: Sequence[int]) -> None:
    blocked.clear()
    blocked.add(s)
    for r in nbrs:
        blocked.add(r)


def _has_marked_neighbor(g: Graph, v: int, marks: MarkSet) -> bool:
    head, nxt = g._head, g._nxt
    stamp, epoch = marks.stamp, marks.epoch
    sentinel = g._base + v
    a = nxt[sentinel]
    scans = 0
    while a != sentinel:
        scans += 1
        if stamp[head[a]] == epoch:
            g.edge_scans += scans
            return True
        a = nxt[a]
    g.edge_scans += scans
    return False


def _recompute(g: Graph, t: int, marks: MarkSet, blocked: MarkSet) -> int:
    marks.clear()
    return mark_reachable(g, (t,), marks, exclude=blocked)


def _extend_marks(g: Graph, first: int, t: int, marks: MarkSet, blocked: MarkSet) -> int:
    # A vertex that reaches t only through N(first) reaches it through some
    # x in N(first) that is t itself or touches an already marked vertex.
    stamp, epoch = marks.stamp, marks.epoch
    seeds = [
        x
        for x in g.neighbors(first)
        if x not in blocked
        and stamp[x] != epoch
        and (x == t or _has_marked_neighbor(g, x, marks))
    ]
    return mark_reachable(g, seeds, marks, exclude=blocked)


def _closed_neighborhood(g: Graph, s: int, blocked: MarkSet | None) -> MarkSet:
    if blocked is None:
        blocked = MarkSet(g.n)
    _block(blocked, s, g.neighbors(s))
    return blocked


def recompute_marks(g: Graph, s: int, t: int, marks: MarkSet, blocked: MarkSet | None = None) -> int:
    """Reset ``marks`` to the vertices that reach ``t`` once ``s`` and N(s) are deleted.

    Returns the number of marked vertices.
    """
    return _recompute(g, t, marks, _closed_neighborhood(g, s, blocked))


def update_marks_first_child(
    g: Graph, s: int, nxt_s: int, t: int, marks: MarkSet, blocked: MarkSet | None = None
) -> int:
    """Grow marks valid for G - N[s] - N(nxt_s) into marks valid for G - N[s].

    Only vertices whose every route to ``t`` crosses N(nxt_s) get marked,
    and the search never enters a marked vertex, so the cost is linear in
    the arcs of N(nxt_s) and of the newly marked vertices.  Returns the
    number of newly marked vertices.
    """
    return _extend_marks(g, nxt_s, t, marks, _closed_neighborhood(g, s, blocked))


def branch_candidates(g: Graph, s: int, t: int, marks: MarkSet) -> list[int]:
    """Neighbors v of s such that v reaches t avoiding the rest of N[s].

    ``marks`` must hold exactly the vertices of G - N[s] that reach ``t``.
    """
    return [v for v in g.neighbors(s) if v == t or _has_marked_neighbor(g, v, marks)]


# -- enumerators -------------------------------------------------------------


def _validate(g: Graph, s: int, t: int) -> None:
    _check_vertex(g, s, "s")
    _check_vertex(g, t, "t")
    if s == t:
        raise ValueError("s and t must differ; use cycle enumeration for cycles")


def _emitter(g: Graph, sink: PathSink, stats: EnumStats, cap: int | None):
    def emit(path: list[int]) -> bool:
        stats.outputs += 1
        stats._tick(g)
        stop = bool(sink(list(path)))
        if cap is not None and stats.outputs >= cap:
            stats.capped = True
            stop = True
        return stop

    return emit


def enumerate_chordless_st_paths_simple(g: Graph, s: int, t: int, sink: PathSink) -> EnumStats:
    """Reference enumerator: full reachability recomputation at every node."""
    _validate(g, s, t)
    stats = EnumStats()
    stats._start(g)
    emit = _emitter(g, sink, stats, None)
    marks = MarkSet(g.n)
    blocked = MarkSet(g.n)
    root = g.checkpoint()
    path = [s]
    stack: list[list] = []
    # the recursion only enters vertices that can still reach t
    v = s if mark_reachable(g, [t], marks) and s in marks else -1
    try:
        while True:
            if v >= 0:
                stats.iterations += 1
                if g.is_adjacent(v, t):
                    path.append(t)
                    if emit(path):
                        stats.stopped = True
                        return stats
                    path.pop()
                else:
                    nbrs = g.neighbors(v)
                    _block(blocked, v, nbrs)
                    _recompute(g, t, marks, blocked)
                    stats.recomputes += 1
                    cands = [w for w in nbrs if _has_marked_neighbor(g, w, marks)]
                    stack.append([v, g.checkpoint(), nbrs, cands, 0])
                v = -1
            if not stack:
                break
            frame = stack[-1]
            u, ck, nbrs, cands, i = frame
            g.restore(ck)
            if path[-1] != u:
                path.pop()
            if i == len(cands):
                stack.pop()
                continue
            w = cands[i]
            frame[4] = i + 1
            g.remove_vertex(u)
            for r in nbrs:
                if r != w:
                    g.remove_vertex(r)
            path.append(w)
            v = w
    finally:
        g.restore(root)
        stats._finish(g)
    return stats


class _PathSearch:
    """Scratch state for the output-sensitive enumerator, reusable across runs."""

    def __init__(self, g: Graph) -> None:
        n = g.n
        self.g = g
        self.marks = MarkSet(n)
        self.blocked = MarkSet(n)
        self.seen = MarkSet(n)
        self.nxt = [-1] * n
        self.dist = [0] * n

    def witness(self, v: int, t: int) -> bool:
        """BFS from t in the current graph; fills nxt/dist until v is reached."""
        g = self.g
        head, nxt, base = g._head, g._nxt, g._base
        succ, dist = self.nxt, self.dist
        seen = self.seen
        seen.clear()
        stamp, epoch = seen.stamp, seen.epoch
        stamp[t] = epoch
        dist[t] = 0
        succ[t] = -1
        queue = deque((t,))
        scans = 0
        found = False
        while queue and not found:
            x = queue.popleft()
            d = dist[x] + 1
            sentinel = base + x
            a = nxt[sentinel]
            while a != sentinel:
                scans += 1
                w = head[a]
                if stamp[w] != epoch:
                    stamp[w] = epoch
                    succ[w] = x
                    dist[w] = d
                    if w == v:
                        found = True
                        break
                    queue.append(w)
                a = nxt[a]
        g.edge_scans += scans
        return found

    def _check_witness(self, v: int, t: int) -> None:
        g = self.g
        seq = [v]
        while seq[-1] != t:
            seq.append(self.nxt[seq[-1]])
            assert len(seq) <= g.n, "witness does not terminate at t"
        for i, x in enumerate(seq):
            assert g.is_active(x), f"witness vertex {x} was removed"
            if i:
                assert g.is_adjacent(seq[i - 1], x), "witness has a missing edge"
            for y in seq[i + 2 :]:
                assert not g.is_adjacent(x, y), f"witness has chord ({x}, {y})"

    def run(
        self,
        s: int,
        t: int,
        emit: Callable[[list[int]], bool],
        stats: EnumStats,
        max_edges: int | None = None,
        debug: bool = False,
    ) -> bool:
        """Enumerate chordless s-t paths of the current graph; True if stopped."""
        g = self.g
        marks, blocked = self.marks, self.blocked
        nxt, dist = self.nxt, self.dist
        root = g.checkpoint()
        try:
            if not self.witness(s, t):
                return False
            marks.clear()
            path = [s]
            # frame: [source, checkpoint, neighbors, first child, cursor]
            stack: list[list] = []
            v = s
            child_valid = True
            while True:
                if v >= 0:
                    stats.iterations += 1
                    if debug:
                        self._check_witness(v, t)
                    if g.is_adjacent(v, t):
                        path.append(t)
                        if emit(path):
                            stats.stopped = True
                            return True
                        path.pop()
                        child_valid = True
                    elif max_edges is not None and len(path) - 1 + dist[v] > max_edges:
                        # no completion fits; marks were never built here
                        child_valid = False
                    else:
                        first = nxt[v]
                        nbrs = g.neighbors(v)
                        stack.append([v, g.checkpoint(), nbrs, first, -1])
                        g.remove_vertex(v)
                        for r in nbrs:
                            if r != first:
                                g.remove_vertex(r)
                        path.append(first)
                        v = first
                        continue
                    v = -1

                if not stack:
                    return False
                frame = stack[-1]
                u, ck, nbrs, first, i = frame
                g.restore(ck)
                path.pop()
                _block(blocked, u, nbrs)
                if i < 0:
                    if child_valid:
                        _extend_marks(g, first, t, marks, blocked)
                    else:
                        _recompute(g, t, marks, blocked)
                        stats.recomputes += 1
                    i = 0
                else:
                    _recompute(g, t, marks, blocked)
                    stats.recomputes += 1

                chosen = -1
                while i < len(nbrs):
                    w = nbrs[i]
                    i += 1
                    if w != first and _has_marked_neighbor(g, w, marks):
                        chosen = w
                        break
                frame[4] = i
                if chosen < 0:
                    stack.pop()
                    child_valid = True
                    continue

                marks.clear()
                g.remove_vertex(u)
                for r in nbrs:
                    if r != chosen:
                        g.remove_vertex(r)
                found = self.witness(chosen, t)
                assert found, "marked candidate has no path to t"
                path.append(chosen)
                v = chosen
        finally:
            g.restore(root)


def enumerate_chordless_st_paths(
    g: Graph,
    s: int,
    t: int,
    sink: PathSink,
    *,
    max_edges: int | None = None,
    cap: int | None = None,
    debug: bool = False,
) -> EnumStats:
    """Enumerate every chordless s-t path of ``g`` exactly once.

    Parameters
    ----------
    g : Graph
        Host graph.  It is mutated during the run and restored on return,
        including when the sink stops the run or raises.
    s, t : int
        Distinct active vertices.
    sink : callable
        Called with each path as a list of vertex ids from ``s`` to ``t``.
        Returning a truthy value stops the enumeration.
    max_edges : int, optional
        Only report paths with at most this many edges.  Branches whose
        shortest completion is already too long are pruned, which keeps
        the output correct but gives up the per-output time bound.
    cap : int, optional
        Stop after this many outputs.
    debug : bool
        Check the carried witness path at every recursion node.

    Returns
    -------
    EnumStats
    """
    _validate(g, s, t)
    if max_edges is not None and max_edges < 1:
        raise ValueError(f"max_edges must be at least 1, got {max_edges}")
    if cap is not None and cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")
    stats = EnumStats(bounded=max_edges is not None)
    stats._start(g)
    try:
        _PathSearch(g).run(s, t, _emitter(g, sink, stats, cap), stats, max_edges, debug)
    finally:
        stats._finish(g)
    return stats


def chordless_st_paths(g: Graph, s: int, t: int, max_edges: int | None = None) -> list[list[int]]:
    """All chordless s-t paths of ``g`` as a list, in enumeration order."""
    out: list[list[int]] = []
    enumerate_chordless_st_paths(g, s, t, out.append, max_edges=max_edges)
    return out
