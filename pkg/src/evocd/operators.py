"""Topology-aware genetic operators.

Crossover is a multi-parent majority vote per node; mutation reassigns
selected nodes to the most frequent label among their neighbors, read
from a snapshot of the pre-mutation partition.  Ties break uniformly at
random from the per-individual stream, so runs are replayable for any
worker layout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, ContractViolation
from .graph import Graph
from .rng import RngStream


@dataclass(frozen=True)
class OperatorParams:
    crossover_prob: float = 0.8
    mutation_prob: float = 0.2
    parents_per_crossover: int = 4

    def __post_init__(self):
        if not 0.0 <= self.crossover_prob <= 1.0:
            raise ConfigError(f"crossover_prob must be in [0,1], got {self.crossover_prob}")
        if not 0.0 <= self.mutation_prob <= 1.0:
            raise ConfigError(f"mutation_prob must be in [0,1], got {self.mutation_prob}")
        if self.parents_per_crossover < 2:
            raise ConfigError("parents_per_crossover must be >= 2")


def _generator(rng) -> np.random.Generator:
    if isinstance(rng, RngStream):
        return rng.generator
    if isinstance(rng, np.random.Generator):
        return rng
    raise TypeError("expected RngStream or numpy Generator")


def initialize_population(g: Graph, n_pop: int, rng) -> list[np.ndarray]:
    """Neighbor-seeded start: singleton labels, each node then adopts the
    label (= id) of a uniformly random neighbor with probability 0.5."""
    if n_pop < 2:
        raise ConfigError("population size must be >= 2")
    population = []
    base = rng if isinstance(rng, RngStream) else None
    for i in range(n_pop):
        gen = base.child(i).generator if base is not None else _generator(rng)
        labels = np.arange(g.node_count, dtype=np.int64)
        adopt = np.flatnonzero((gen.random(g.node_count) < 0.5) & (g.degrees > 0))
        if adopt.size:
            deg = g.degrees[adopt]
            k = np.minimum((gen.random(adopt.size) * deg).astype(np.int64), deg - 1)
            labels[adopt] = g.indices[g.indptr[adopt] + k]
        population.append(labels)
    return population


def _vote(parent_matrix: np.ndarray, gen: np.random.Generator) -> np.ndarray:
    """Per-node majority vote over a (k, n) stack of parents, uniform ties."""
    k, n = parent_matrix.shape
    counts = np.zeros((k, n), dtype=np.int32)
    for i in range(k):
        counts += parent_matrix == parent_matrix[i]
    tied = counts == counts.max(axis=0)
    # choose a uniformly random tied row per column; tied rows of one label
    # are equinumerous, so this is uniform over the tied label set
    cum = np.cumsum(tied, axis=0)
    total = cum[-1]
    pick = np.minimum((gen.random(n) * total).astype(np.int64), total - 1)
    row = (cum > pick).argmax(axis=0)
    return parent_matrix[row, np.arange(n)]


def crossover(parents, rng) -> np.ndarray:
    """Combine >= 2 parent partitions by per-node label majority."""
    try:
        matrix = np.asarray(parents)
    except ValueError:
        raise ContractViolation("parent partitions have mismatched lengths") from None
    if matrix.ndim != 2:
        raise ContractViolation("parent partitions have mismatched lengths")
    if matrix.shape[0] < 2:
        raise ContractViolation("crossover needs at least two parents")
    return _vote(matrix, _generator(rng))


def _neighbor_majority(g: Graph, labels: np.ndarray, nodes: np.ndarray,
                       gen: np.random.Generator) -> np.ndarray:
    """Most frequent label among each node's neighbors (uniform ties).

    `nodes` must all have degree >= 1.  Runs fully vectorized: neighbor
    labels are grouped per node by a single sort, then reduced per segment.
    """
    lens = g.degrees[nodes]
    total = int(lens.sum())
    offsets = np.cumsum(lens) - lens
    flat = g.indices[np.arange(total) - np.repeat(offsets, lens) + np.repeat(g.indptr[nodes], lens)]
    nlabels = labels[flat].astype(np.int64)
    width = int(nlabels.max()) + 1
    seg = np.repeat(np.arange(nodes.size, dtype=np.int64), lens)
    key = np.sort(seg * width + nlabels)

    run_start = np.flatnonzero(np.r_[True, key[1:] != key[:-1]])
    run_count = np.diff(np.append(run_start, total))
    run_seg = key[run_start] // width
    run_label = key[run_start] % width

    seg_start = np.flatnonzero(np.r_[True, run_seg[1:] != run_seg[:-1]])
    runs_per_seg = np.diff(np.append(seg_start, run_seg.size))
    seg_of_run = np.repeat(np.arange(nodes.size), runs_per_seg)

    best = np.maximum.reduceat(run_count, seg_start)
    tied = run_count == best[seg_of_run]
    tie_sizes = np.add.reduceat(tied, seg_start)
    pick = np.minimum((gen.random(nodes.size) * tie_sizes).astype(np.int64), tie_sizes - 1)

    cum = np.cumsum(tied)
    before = cum[seg_start] - tied[seg_start]
    chosen = tied & (cum - before[seg_of_run] == pick[seg_of_run] + 1)
    return run_label[chosen]


def mutate(labels: np.ndarray, g: Graph, mutation_prob: float, rng) -> np.ndarray:
    """Reassign each selected node to its neighbors' majority label.

    Selection is independent per node with probability `mutation_prob`;
    majorities are read from the input partition (synchronous update).
    Isolated nodes keep their label.
    """
    if labels.shape != (g.node_count,):
        raise ContractViolation("partition length does not match node count")
    gen = _generator(rng)
    out = np.array(labels, dtype=np.int64, copy=True)
    if mutation_prob <= 0.0:
        return out
    selected = np.flatnonzero(gen.random(g.node_count) < mutation_prob)
    selected = selected[g.degrees[selected] > 0]
    if selected.size:
        out[selected] = _neighbor_majority(g, labels, selected, gen)
    return out


def _make_child(pool: np.ndarray, g: Graph, params: OperatorParams,
                gen: np.random.Generator) -> np.ndarray:
    """One offspring from a (P, n) mating-pool matrix."""
    if gen.random() < params.crossover_prob:
        idx = gen.choice(pool.shape[0], size=params.parents_per_crossover, replace=False)
        child = _vote(pool[idx], gen)
    else:
        child = pool[int(gen.integers(pool.shape[0]))].copy()
    return mutate(child, g, params.mutation_prob, gen)


def create_offspring(mating_pool, g: Graph, params: OperatorParams, rng) -> list[np.ndarray]:
    """Produce |mating_pool| children per the gated crossover-then-mutate
    scheme; each child draws from its own derived stream."""
    try:
        pool = np.asarray(mating_pool)
    except ValueError:
        raise ContractViolation("mating pool partitions have mismatched lengths") from None
    if pool.ndim != 2:
        raise ContractViolation("mating pool partitions have mismatched lengths")
    if pool.shape[0] < params.parents_per_crossover:
        raise ConfigError(
            f"mating pool of {pool.shape[0]} is smaller than "
            f"parents_per_crossover={params.parents_per_crossover}")
    if isinstance(rng, RngStream):
        gens = [rng.child(i).generator for i in range(pool.shape[0])]
    else:
        gen = _generator(rng)
        gens = [gen] * pool.shape[0]
    return [_make_child(pool, g, params, gens[i]) for i in range(pool.shape[0])]
