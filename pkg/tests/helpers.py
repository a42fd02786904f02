"""Shared corpus builders and independent reference checks for the tests."""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from chordless.generators import gnp
from chordless.graph import Graph

DENSITIES = (0.2, 0.4, 0.6, 0.8)


def corpus(n_range=range(4, 13), densities=DENSITIES, seeds=range(9)):
    """(n, density, seed, graph) for the random oracle corpus."""
    for n in n_range:
        for p in densities:
            for seed in seeds:
                yield n, p, seed, gnp(n, p, seed=1000 * n + int(p * 100) + seed * 7919)


def st_pairs(n: int, k: int, seed: int) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    pairs = []
    for _ in range(k):
        s, t = rng.sample(range(n), 2)
        pairs.append((s, t))
    return pairs


def adjacency_sets(g: Graph) -> list[set[int]]:
    adj = [set() for _ in range(g.n)]
    for u, v in g.active_edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _induced_degrees(adj, members):
    return {v: len(adj[v] & members) for v in members}


def _connected(adj, members) -> bool:
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for w in adj[x] & members:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


def subset_cycles(g: Graph) -> set[frozenset[int]]:
    """Vertex sets inducing a cycle: connected, every induced degree 2, size >= 3."""
    adj = adjacency_sets(g)
    out = set()
    verts = [v for v in range(g.n) if g.is_active(v)]
    for k in range(3, len(verts) + 1):
        for combo in combinations(verts, k):
            members = set(combo)
            if all(d == 2 for d in _induced_degrees(adj, members).values()) and _connected(adj, members):
                out.add(frozenset(combo))
    return out


def subset_paths(g: Graph, s: int, t: int) -> set[frozenset[int]]:
    """Vertex sets inducing a path with end vertices s and t."""
    adj = adjacency_sets(g)
    others = [v for v in range(g.n) if g.is_active(v) and v not in (s, t)]
    out = set()
    for k in range(len(others) + 1):
        for combo in combinations(others, k):
            members = set(combo) | {s, t}
            deg = _induced_degrees(adj, members)
            if deg[s] == 1 and deg[t] == 1 and all(deg[v] == 2 for v in combo) and _connected(adj, members):
                out.add(frozenset(members))
    return out


def bfs_distance(adj, s, t, banned=frozenset()):
    if s in banned or t in banned:
        return None
    dist = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            return dist[x]
        for w in adj[x]:
            if w not in dist and w not in banned:
                dist[w] = dist[x] + 1
                queue.append(w)
    return None


def reach_set(adj, t, banned):
    """Vertices reaching t while avoiding ``banned`` (t itself included)."""
    if t in banned:
        return set()
    seen = {t}
    stack = [t]
    while stack:
        x = stack.pop()
        for w in adj[x]:
            if w not in seen and w not in banned:
                seen.add(w)
                stack.append(w)
    return seen


def cycle_vertices_by_bridges(g: Graph) -> set[int]:
    """Vertices incident to at least one non-bridge edge (Tarjan low-link)."""
    adj = adjacency_sets(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1 or not g.is_active(root):
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        bridges.add(frozenset((parent, v)))
                continue
            if w == parent:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(sorted(adj[w]))))
            else:
                low[v] = min(low[v], disc[w])
    out = set()
    for u, v in g.active_edges():
        if frozenset((u, v)) not in bridges:
            out.update((u, v))
    return out
