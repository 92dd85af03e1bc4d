"""Independent reference implementations used only to check the package.

Everything here is deliberately naive: per-pair dominance checks,
per-node-pair objective evaluation, exhaustive subset search.  None of
it shares code with the implementations under test.
"""

from __future__ import annotations

import numpy as np


def dominates_oracle(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b)) and any(x < y for x, y in zip(a, b))


def pairwise_front_sort(vectors) -> list[list[int]]:
    """O(N^2) front stratification by repeated non-dominated peeling."""
    v = np.asarray(vectors, dtype=float)
    remaining = list(range(len(v)))
    fronts = []
    while remaining:
        front = [i for i in remaining
                 if not any(dominates_oracle(v[j], v[i]) for j in remaining if j != i)]
        fronts.append(sorted(front))
        remaining = [i for i in remaining if i not in set(front)]
    return fronts


def pairwise_front_sort_matrix(vectors) -> list[list[int]]:
    """Same peeling oracle, but with an explicit N x N dominance matrix so
    1,000-point instances finish quickly.  Still O(N^2) per peel."""
    v = np.asarray(vectors, dtype=float)
    le = (v[:, None, 0] <= v[None, :, 0]) & (v[:, None, 1] <= v[None, :, 1])
    lt = (v[:, None, 0] < v[None, :, 0]) | (v[:, None, 1] < v[None, :, 1])
    dom = le & lt  # dom[i, j]: i dominates j
    alive = np.ones(len(v), dtype=bool)
    fronts = []
    while alive.any():
        front = alive & ~dom[alive].any(axis=0)
        fronts.append(np.flatnonzero(front).tolist())
        alive &= ~front
    return fronts


def objectives_bruteforce(edges, degrees, m, labels):
    """(f1, f2) computed edge by edge and node by node, no vectorization."""
    intra = sum(1 for (u, v) in edges if labels[u] == labels[v])
    f1 = 1.0 - intra / m
    f2 = 0.0
    for c in set(labels):
        degsum = sum(degrees[v] for v in range(len(labels)) if labels[v] == c)
        f2 += (degsum / (2.0 * m)) ** 2
    return f1, f2


def modularity_double_sum(adj, degrees, m, labels):
    """Literal n^2 double sum over the adjacency matrix."""
    n = len(labels)
    q = 0.0
    for i in range(n):
        for j in range(n):
            if labels[i] == labels[j]:
                a_ij = 1.0 if j in adj[i] else 0.0
                q += a_ij - degrees[i] * degrees[j] / (2.0 * m)
    return q / (2.0 * m)


def best_rank_subset(rank_multisets_target: list[int], ranks: list[int], size: int):
    """Lexicographically minimal rank multiset among all subsets of `size`."""
    from itertools import combinations
    best = None
    for combo in combinations(range(len(ranks)), size):
        key = sorted(ranks[i] for i in combo)
        if best is None or key < best:
            best = key
    return best


def fig1_edges(one_based: bool = True):
    """Three 4-cliques bridged by the edges 4-5, 4-10, 5-10 (1-based)."""
    edges = []
    for base in (1, 5, 9):
        group = [base + i for i in range(4)]
        for i in range(4):
            for j in range(i + 1, 4):
                edges.append((group[i], group[j]))
    edges += [(4, 5), (4, 10), (5, 10)]
    if not one_based:
        edges = [(a - 1, b - 1) for a, b in edges]
    return edges


def random_graph_text(n: int, p: float, seed: int) -> str:
    """Erdos-Renyi edge-list text with at least one edge."""
    gen = np.random.default_rng(seed)
    lines = []
    for u in range(n):
        for v in range(u + 1, n):
            if gen.random() < p:
                lines.append(f"{u} {v}")
    if not lines:
        lines.append("0 1")
    return "\n".join(lines) + "\n"
