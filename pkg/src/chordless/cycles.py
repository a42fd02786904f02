"""Chordless cycle enumeration by reduction to chordless s-t paths.

Anchors are processed in ascending id.  For anchor ``s`` and each
neighbor ``t`` of ``s``, the edge {s, t} is deleted and the chordless s-t
paths are enumerated; each one closes into a chordless cycle through
``s``.  Neighbors of ``s`` with id above ``t`` are deleted for that stage,
which leaves only first steps ``a < t``; a chordless path cannot touch a
second neighbor of ``s`` anyway, so this drops nothing else and each cycle
is reported once, from its smaller cycle-neighbor toward the larger.
After its stage the anchor is deleted for good: cycles avoiding it keep
all their chords.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

from .graph import Graph, _check_vertex
from .paths import EnumStats, _emitter, _PathSearch

__all__ = [
    "CycleSink",
    "canonical_cycle",
    "chordless_cycles",
    "enumerate_chordless_cycles",
    "enumerate_chordless_cycles_through",
    "vertex_in_chordless_cycle",
]

CycleSink = Callable[[list[int]], "bool | None"]


def canonical_cycle(seq: Sequence[int], anchor: int | None = None) -> tuple[int, ...]:
    """Rotate/reflect a cycle so ``anchor`` (default: the minimum) comes first
    and its smaller cycle-neighbor second."""
    k = len(seq)
    if k < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {k}")
    if anchor is None:
        anchor = min(seq)
    i = list(seq).index(anchor)
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    if fwd[1] < fwd[-1]:
        return fwd
    return (fwd[0],) + fwd[:0:-1]


def _check_options(max_len: int | None, cap: int | None) -> None:
    if max_len is not None and max_len < 3:
        raise ValueError(f"max_len must be at least 3, got {max_len}")
    if cap is not None and cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")


def _anchor_stage(g, s, search, emit, stats, max_edges) -> bool:
    nbrs = g.neighbors(s)
    for j in range(1, len(nbrs)):
        t = nbrs[j]
        ck = g.checkpoint()
        g.remove_edge(s, t)
        for r in nbrs[j + 1 :]:
            g.remove_vertex(r)
        stopped = search.run(s, t, emit, stats, max_edges)
        g.restore(ck)
        if stopped:
            return True
    return False


def enumerate_chordless_cycles(
    g: Graph,
    sink: CycleSink,
    *,
    max_len: int | None = None,
    cap: int | None = None,
) -> EnumStats:
    """Report every chordless cycle of ``g`` once, in canonical form.

    ``max_len`` bounds the number of edges (equivalently vertices) of a
    reported cycle; ``cap`` stops after that many outputs.  ``g`` is
    restored before returning.
    """
    _check_options(max_len, cap)
    stats = EnumStats(bounded=max_len is not None)
    stats._start(g)
    emit = _emitter(g, sink, stats, cap)
    max_edges = None if max_len is None else max_len - 1
    search = _PathSearch(g)
    root = g.checkpoint()
    try:
        for s in range(g.n):
            if not g.is_active(s):
                continue
            if _anchor_stage(g, s, search, emit, stats, max_edges):
                break
            g.remove_vertex(s)
    finally:
        g.restore(root)
        stats._finish(g)
    return stats


def enumerate_chordless_cycles_through(
    g: Graph,
    v: int,
    sink: CycleSink,
    *,
    max_len: int | None = None,
    cap: int | None = None,
) -> EnumStats:
    """Report the chordless cycles containing ``v``, each starting at ``v``
    followed by its smaller cycle-neighbor."""
    _check_vertex(g, v, "v")
    _check_options(max_len, cap)
    stats = EnumStats(bounded=max_len is not None)
    stats._start(g)
    emit = _emitter(g, sink, stats, cap)
    max_edges = None if max_len is None else max_len - 1
    root = g.checkpoint()
    try:
        _anchor_stage(g, v, _PathSearch(g), emit, stats, max_edges)
    finally:
        g.restore(root)
        stats._finish(g)
    return stats


def vertex_in_chordless_cycle(g: Graph, v: int) -> bool:
    """True iff ``v`` lies on a cycle, found by stopping at the first
    chordless cycle through it (every cycle through v can be shortened
    along its chords to a chordless one that still contains v)."""
    return enumerate_chordless_cycles_through(g, v, lambda c: True).outputs > 0


def chordless_cycles(
    g: Graph,
    through: int | None = None,
    max_len: int | None = None,
    cap: int | None = None,
) -> list[list[int]]:
    out: list[list[int]] = []
    if through is None:
        enumerate_chordless_cycles(g, out.append, max_len=max_len, cap=cap)
    else:
        enumerate_chordless_cycles_through(g, through, out.append, max_len=max_len, cap=cap)
    return out
