"""Seeded graph generators and closed-form fixtures.

Random families draw from numpy's PCG64 bit generator seeded with the
given 64-bit seed, so a (parameters, seed) pair always yields the same
edge list in the same order.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .graph import Graph

__all__ = [
    "complete",
    "cycle",
    "gnp",
    "interval_random",
    "path",
    "petersen",
    "sparse_cycle_plus_chords",
    "star",
    "wheel",
]


def _rng(seed: int) -> np.random.Generator:
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def gnp(n: int, density: float, seed: int = 0) -> Graph:
    """G(n, p): every pair, in lexicographic order, kept with probability ``density``."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    draws = _rng(seed).random(n * (n - 1) // 2)
    keep = draws < density
    return Graph(n, [pair for pair, k in zip(combinations(range(n), 2), keep) if k])


def sparse_cycle_plus_chords(n: int, avg_degree: float = 4.0, seed: int = 0) -> Graph:
    """Hamiltonian cycle 0-1-...-(n-1)-0 plus floor(n*(avg_degree-2)/2) random chords."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if avg_degree < 2:
        raise ValueError(f"avg_degree must be at least 2, got {avg_degree}")
    k = int(n * (avg_degree - 2) // 2)
    room = n * (n - 1) // 2 - n
    if k > room:
        raise ValueError(f"{k} chords requested but only {room} non-cycle pairs exist")
    edges = [(i, (i + 1) % n) for i in range(n)]
    taken = {frozenset(e) for e in edges}
    rng = _rng(seed)
    while len(edges) < n + k:
        u, v = (int(x) for x in rng.integers(0, n, size=2))
        key = frozenset((u, v))
        if u == v or key in taken:
            continue
        taken.add(key)
        edges.append((min(u, v), max(u, v)))
    return Graph(n, edges)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Center 0 joined to leaves 1..n."""
    if n < 1:
        raise ValueError(f"star needs at least one leaf, got {n}")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to every vertex of the rim cycle 1..n."""
    if n < 3:
        raise ValueError(f"wheel needs a rim of at least 3, got {n}")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)] + rim)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def interval_random(n: int, seed: int = 0, max_length: float = 0.3) -> Graph:
    """Interval graph of n random closed intervals inside [0, 1 + max_length]."""
    if n < 1:
        raise ValueError(f"interval graph needs n >= 1, got {n}")
    rng = _rng(seed)
    left = rng.random(n)
    right = left + rng.random(n) * max_length
    edges = [
        (i, j)
        for i, j in combinations(range(n), 2)
        if left[i] <= right[j] and left[j] <= right[i]
    ]
    return Graph(n, edges)
