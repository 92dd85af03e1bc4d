"""Synthetic ground-truth benchmarks and verification harness.

The generator plants a partition and wires each node's edge stubs
inside/outside its community according to a mixing fraction mu (the
expected share of a node's edges that leave its community).  A
brute-force enumerator over all set partitions provides the exact
Pareto front for tiny graphs, which anchors the engine's correctness.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable

import numpy as np
from scipy import stats

from .engine import EvolutionConfig, evolve, select_best
from .errors import ConfigError
from .graph import Graph, build_graph
from .metrics import ami, harmonic_quality, nmi
from .objectives import community_count, modularity, scalarized_quality
from .rng import RngStream

BELL_12 = 4_213_597


@dataclass(frozen=True)
class BenchmarkSpec:
    n: int
    mu: float
    avg_degree: float = 20.0
    min_comm: int = 20
    max_comm: int = 100
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.mu < 1.0:
            raise ConfigError(f"mu must be in [0,1), got {self.mu}")
        if not 1 <= self.min_comm <= self.max_comm <= self.n:
            raise ConfigError("need 1 <= min_comm <= max_comm <= n")
        if self.avg_degree >= self.n:
            raise ConfigError("avg_degree must be below n")
        if (1.0 - self.mu) * self.avg_degree >= self.min_comm:
            raise ConfigError(
                "infeasible spec: expected intra-degree "
                f"{(1.0 - self.mu) * self.avg_degree:.1f} >= min community size {self.min_comm}")


@dataclass(frozen=True)
class GroundTruthGraph:
    graph: Graph
    truth: np.ndarray
    realized_mu: float
    dropped_stubs: int = 0


def generate_planted(spec: BenchmarkSpec, rng=None) -> GroundTruthGraph:
    """Plant communities of uniform-random sizes and wire stubs by mu."""
    stream = rng if rng is not None else RngStream(spec.seed, "planted")
    gen = stream.generator

    sizes: list[int] = []
    while sum(sizes) < spec.n:
        sizes.append(int(gen.integers(spec.min_comm, spec.max_comm + 1)))
    sizes[-1] -= sum(sizes) - spec.n
    if sizes[-1] == 0:
        sizes.pop()
    sizes_arr = np.array(sizes)
    truth = np.repeat(np.arange(len(sizes)), sizes_arr)
    comm_start = np.concatenate([[0], np.cumsum(sizes_arr)[:-1]])

    half = spec.avg_degree / 2.0
    base = int(half)
    stubs_per_node = base + (gen.random(spec.n) < (half - base)).astype(np.int64)

    edges: set[tuple[int, int]] = set()
    dropped = 0
    inter_count = 0
    n = spec.n
    for v in range(n):
        c = truth[v]
        size_c = int(sizes_arr[c])
        start_c = int(comm_start[c])
        pos_v = v - start_c
        for _ in range(int(stubs_per_node[v])):
            is_inter = gen.random() < spec.mu
            placed = False
            for _attempt in range(100):
                if is_inter:
                    j = int(gen.integers(0, n - size_c))
                    u = j + size_c if j >= start_c else j
                else:
                    if size_c < 2:
                        break
                    j = int(gen.integers(0, size_c - 1))
                    u = start_c + (j + 1 if j >= pos_v else j)
                key = (v, u) if v < u else (u, v)
                if key not in edges:
                    edges.add(key)
                    inter_count += is_inter
                    placed = True
                    break
            if not placed:
                dropped += 1

    g, _, _ = build_graph(sorted(edges), n)
    inter_edges = int(np.count_nonzero(truth[g.edge_u] != truth[g.edge_v]))
    return GroundTruthGraph(graph=g, truth=truth,
                            realized_mu=inter_edges / g.edge_count,
                            dropped_stubs=dropped)


# ---------------------------------------------------------------------------
# exact Pareto oracle

def _all_set_partitions(n: int) -> np.ndarray:
    """All restricted-growth strings of length n, as an int8 matrix."""
    mat = np.zeros((1, 1), dtype=np.int8)
    mx = np.zeros(1, dtype=np.int8)
    for _ in range(1, n):
        k = (mx + 2).astype(np.int64)
        rep = np.repeat(np.arange(len(mat)), k)
        total = int(k.sum())
        within = (np.arange(total) - np.repeat(np.cumsum(k) - k, k)).astype(np.int8)
        mat = np.concatenate([mat[rep], within[:, None]], axis=1)
        mx = np.maximum(mx[rep], within)
    return mat


def _evaluate_block(g: Graph, labels: np.ndarray, k_max: int) -> np.ndarray:
    """(f1, f2) for a block of small-label partitions; loops over labels,
    not rows."""
    m = g.edge_count
    same = labels[:, g.edge_u] == labels[:, g.edge_v]
    f1 = 1.0 - same.sum(axis=1) / m
    f2 = np.zeros(len(labels))
    for c in range(k_max):
        share = ((labels == c) * g.degrees).sum(axis=1) / (2.0 * m)
        f2 += share * share
    return np.column_stack([f1, f2])


def _front1_mask(vectors: np.ndarray) -> np.ndarray:
    """Boolean mask of the non-dominated subset (duplicates keep first)."""
    order = np.lexsort((vectors[:, 1], vectors[:, 0]))
    f2 = vectors[order, 1]
    running = np.minimum.accumulate(f2)
    keep_sorted = np.empty(len(vectors), dtype=bool)
    keep_sorted[0] = True
    keep_sorted[1:] = f2[1:] < running[:-1]
    mask = np.zeros(len(vectors), dtype=bool)
    mask[order] = keep_sorted
    return mask


def exact_pareto(g: Graph, max_n: int = 12, block: int = 262_144):
    """Enumerate every set partition of V and return the exact front as a
    list of ((f1, f2), witness labels) pairs, sorted by f1."""
    n = g.node_count
    if n > max_n:
        raise ConfigError(
            f"exact enumeration refused for n={n} > {max_n}: "
            f"the number of set partitions grows as the Bell numbers "
            f"(Bell(12) = {BELL_12:,})")
    mat = _all_set_partitions(n)
    arch_vecs = np.empty((0, 2))
    arch_wits: list[np.ndarray] = []
    for lo in range(0, len(mat), block):
        chunk = mat[lo:lo + block].astype(np.int64)
        vecs = _evaluate_block(g, chunk, n)
        mask = _front1_mask(vecs)
        cand_vecs = np.concatenate([arch_vecs, vecs[mask]])
        cand_wits = arch_wits + [chunk[i] for i in np.flatnonzero(mask)]
        keep = _front1_mask(cand_vecs)
        arch_vecs = cand_vecs[keep]
        arch_wits = [cand_wits[i] for i in np.flatnonzero(keep)]
    order = np.argsort(arch_vecs[:, 0])
    return [((float(arch_vecs[i, 0]), float(arch_vecs[i, 1])), arch_wits[i])
            for i in order]


# ---------------------------------------------------------------------------
# experiment harness

@dataclass(frozen=True)
class ExperimentReport:
    rows: list          # per-cell aggregates
    runs: list          # per-run records (CSV schema)
    failures: list = field(default_factory=list)


RUN_CSV_FIELDS = ["n", "mu", "Np", "T", "Cp", "Mp", "Es", "seed", "nmi", "ami",
                  "H", "Q", "modularity", "k_detected", "k_truth", "wall_ms", "workers"]


def _confidence95(values: np.ndarray) -> float:
    if len(values) < 2:
        return 0.0
    sem = values.std(ddof=1) / np.sqrt(len(values))
    return float(stats.t.ppf(0.975, len(values) - 1) * sem)


def run_single(spec: BenchmarkSpec, cfg: EvolutionConfig, run_index: int) -> dict:
    """One seeded generate + evolve + score cycle (picklable for pools)."""
    gt = generate_planted(replace(spec, seed=spec.seed + run_index))
    run_cfg = replace(cfg, seed=cfg.seed + run_index)
    t0 = time.perf_counter()
    front = evolve(gt.graph, run_cfg)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    best = select_best(front)
    nmi_v = nmi(best.labels, gt.truth)
    ami_v = ami(best.labels, gt.truth)
    return {
        "n": spec.n, "mu": spec.mu,
        "Np": run_cfg.population, "T": run_cfg.generations,
        "Cp": run_cfg.params.crossover_prob, "Mp": run_cfg.params.mutation_prob,
        "Es": run_cfg.params.parents_per_crossover,
        "seed": run_cfg.seed,
        "nmi": nmi_v, "ami": ami_v,
        "H": harmonic_quality(ami_v, nmi_v),
        "Q": scalarized_quality(best.f1, best.f2),
        "modularity": modularity(gt.graph, best.labels),
        "k_detected": community_count(best.labels),
        "k_truth": community_count(gt.truth),
        "wall_ms": wall_ms,
        "workers": run_cfg.workers,
    }


def _run_single_serial(args):
    spec, cfg, run_index = args
    return run_single(spec, replace(cfg, workers=1), run_index)


def run_experiment(grid: Iterable[tuple[BenchmarkSpec, EvolutionConfig]],
                   seeds: int, workers: int = 1) -> ExperimentReport:
    """Run every (spec, config) cell over `seeds` independent seeds and
    aggregate means with 95% confidence intervals."""
    grid = list(grid)
    if not grid:
        raise ConfigError("empty experiment grid")
    if seeds < 2:
        raise ConfigError("need at least 2 seeds for confidence intervals")

    tasks = [(spec, cfg, s) for spec, cfg in grid for s in range(seeds)]
    results: list[dict | None] = [None] * len(tasks)
    failures = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(_run_single_serial, t): i for i, t in enumerate(tasks)}
            for fut, i in futures.items():
                try:
                    results[i] = fut.result()
                except Exception as exc:  # record, keep the cell going
                    failures.append({"task": i, "error": str(exc)})
    else:
        for i, t in enumerate(tasks):
            try:
                results[i] = run_single(t[0], t[1], t[2])
            except Exception as exc:
                failures.append({"task": i, "error": str(exc)})

    rows = []
    per_cell = len(list(range(seeds)))
    for c, (spec, cfg) in enumerate(grid):
        cell_runs = [r for r in results[c * per_cell:(c + 1) * per_cell] if r is not None]
        row = {
            "n": spec.n, "mu": spec.mu,
            "Np": cfg.population, "T": cfg.generations,
            "seeds": len(cell_runs),
            "effort": ga_effort(cfg.population, cfg.generations),
        }
        for metric in ("nmi", "ami", "H", "Q", "wall_ms"):
            vals = np.array([r[metric] for r in cell_runs]) if cell_runs else np.array([])
            row[f"mean_{metric}"] = float(vals.mean()) if len(vals) else float("nan")
            row[f"ci95_{metric}"] = _confidence95(vals)
        rows.append(row)
    runs = [r for r in results if r is not None]
    return ExperimentReport(rows=rows, runs=runs, failures=failures)


def thread_scaling(spec: BenchmarkSpec, cfg: EvolutionConfig,
                   worker_counts: list[int]) -> dict:
    """Time identical runs at each worker count; fronts must match."""
    if 1 not in worker_counts:
        raise ConfigError("worker_counts must include 1 as the baseline")
    gt = generate_planted(spec)
    entries = []
    baseline = None
    reference = None
    # baseline first so later fronts can be compared against it
    for w in [1] + [w for w in worker_counts if w != 1]:
        t0 = time.perf_counter()
        front = evolve(gt.graph, replace(cfg, workers=w))
        elapsed = time.perf_counter() - t0
        signature = sorted((ind.f1, ind.f2, ind.labels.tobytes()) for ind in front)
        if w == 1:
            baseline = elapsed
            reference = signature
        entries.append({"workers": w, "seconds": elapsed,
                        "front_matches_single": signature == reference})
    for e in entries:
        e["speedup"] = baseline / e["seconds"]
    return {"n": spec.n, "mu": spec.mu, "entries": entries}


def ga_effort(population: int, generations: int) -> int:
    """Total candidate evaluations of a run."""
    if population <= 0 or generations <= 0:
        raise ConfigError("population and generations must be positive")
    return population * generations
