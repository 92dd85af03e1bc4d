"""NSGA-II evolutionary loop over graph partitions.

Non-dominated sorting uses the 2-objective staircase sweep (O(N log N));
the quadratic pairwise method lives only in the test suite as an oracle.
Offspring creation and evaluation are data-parallel across a process
pool; per-child random streams are derived from (seed, generation,
child index), so results are a pure function of (graph, config) no
matter how many workers run them.
"""

from __future__ import annotations

import time
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, ContractViolation
from .graph import Graph
from .objectives import canonicalize, community_count, evaluate_many, scalarized_quality
from .operators import OperatorParams, _generator, _make_child, initialize_population
from .rng import RngStream


@dataclass
class Individual:
    labels: np.ndarray
    f1: float
    f2: float
    rank: int | None = None
    crowding: float | None = None
    epoch: int | None = None

    @property
    def objectives(self) -> tuple[float, float]:
        return (self.f1, self.f2)

    @property
    def quality(self) -> float:
        return scalarized_quality(self.f1, self.f2)


@dataclass(frozen=True)
class EvolutionConfig:
    population: int = 100
    generations: int = 100
    params: OperatorParams = field(default_factory=OperatorParams)
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.population < 4 or self.population % 2:
            raise ConfigError(f"population must be even and >= 4, got {self.population}")
        if self.generations < 1:
            raise ConfigError(f"generations must be >= 1, got {self.generations}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")


@dataclass
class ParetoFront:
    """Rank-1 individuals of the final population, deduplicated by
    canonical partition.  Carries the run history for reporting."""

    members: list[Individual]
    best_quality_history: list[float] = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def dominates(a, b) -> bool:
    """Strict Pareto dominance for minimization; equal vectors do not dominate."""
    return a[0] <= b[0] and a[1] <= b[1] and (a[0] < b[0] or a[1] < b[1])


def fast_nondominated_sort(vectors) -> list[list[int]]:
    """Stratify 2-d objective vectors into fronts by the staircase sweep.

    Returns lists of input indices per front, each in ascending input
    order.  Exactly equal vectors share a front.
    """
    v = np.asarray(vectors, dtype=np.float64)
    if v.ndim != 2 or v.shape[1] != 2 or len(v) == 0:
        raise ContractViolation("expected a nonempty (N, 2) array of objective vectors")
    order = np.lexsort((v[:, 1], v[:, 0]))
    min_f2: list[float] = []      # per-front minimum f2, strictly increasing
    fronts: list[list[int]] = []
    prev_key = None
    prev_front = -1
    for idx in order:
        key = (v[idx, 0], v[idx, 1])
        if key == prev_key:
            fronts[prev_front].append(int(idx))
            continue
        f = bisect_right(min_f2, key[1])
        if f == len(min_f2):
            min_f2.append(key[1])
            fronts.append([])
        else:
            min_f2[f] = key[1]
        fronts[f].append(int(idx))
        prev_key, prev_front = key, f
    for fr in fronts:
        fr.sort()
    return fronts


def crowding_distance(front_vectors) -> np.ndarray:
    """Standard NSGA-II crowding: boundary points get +inf, interior
    points sum range-normalized neighbor gaps per objective."""
    v = np.asarray(front_vectors, dtype=np.float64)
    if v.ndim == 1:
        v = v.reshape(1, -1)
    if len(v) == 0:
        raise ContractViolation("empty front")
    dist = np.zeros(len(v))
    for j in range(v.shape[1]):
        o = np.argsort(v[:, j], kind="stable")
        span = v[o[-1], j] - v[o[0], j]
        dist[o[0]] = dist[o[-1]] = np.inf
        if span > 0 and len(v) > 2:
            dist[o[1:-1]] += (v[o[2:], j] - v[o[:-2], j]) / span
    return dist


def rank_and_crowd(population: list[Individual], epoch: int) -> list[list[int]]:
    """Stamp rank, crowding distance, and epoch onto a population in place."""
    vectors = np.array([(ind.f1, ind.f2) for ind in population])
    fronts = fast_nondominated_sort(vectors)
    for r, front in enumerate(fronts, start=1):
        crowd = crowding_distance(vectors[front])
        for i, c in zip(front, crowd):
            population[i].rank = r
            population[i].crowding = float(c)
            population[i].epoch = epoch
    return fronts


def _check_epoch(population: list[Individual]) -> None:
    epochs = {ind.epoch for ind in population}
    if len(epochs) != 1 or None in epochs:
        raise ContractViolation("population carries stale or mixed rank epochs")


def _crowded_better(a: Individual, b: Individual, gen: np.random.Generator) -> Individual:
    if a.rank != b.rank:
        return a if a.rank < b.rank else b
    if a.crowding != b.crowding:
        return a if a.crowding > b.crowding else b
    return a if gen.random() < 0.5 else b


def tournament_select(population: list[Individual], n_out: int, rng) -> list[Individual]:
    """Independent binary tournaments under the crowded-comparison order."""
    _check_epoch(population)
    gen = _generator(rng)
    pairs = gen.integers(0, len(population), size=(n_out, 2))
    return [_crowded_better(population[a], population[b], gen) for a, b in pairs]


def environmental_selection(combined: list[Individual], n_pop: int) -> list[Individual]:
    """Elitist truncation of a 2*n_pop population back to n_pop: whole
    fronts in rank order, overflow front cut by descending crowding
    (ties keep input order)."""
    if len(combined) != 2 * n_pop:
        raise ContractViolation(f"expected {2 * n_pop} individuals, got {len(combined)}")
    vectors = np.array([(ind.f1, ind.f2) for ind in combined])
    fronts = fast_nondominated_sort(vectors)
    survivors: list[Individual] = []
    for front in fronts:
        if len(survivors) + len(front) <= n_pop:
            survivors.extend(combined[i] for i in front)
            if len(survivors) == n_pop:
                break
        else:
            crowd = crowding_distance(vectors[front])
            keep = np.argsort(-crowd, kind="stable")[: n_pop - len(survivors)]
            survivors.extend(combined[front[i]] for i in sorted(keep.tolist()))
            break
    return survivors


# ---------------------------------------------------------------------------
# parallel offspring + evaluation

_WORKER_GRAPH: Graph | None = None


def _init_worker(g: Graph) -> None:
    global _WORKER_GRAPH
    _WORKER_GRAPH = g


def _offspring_chunk(pool_matrix: np.ndarray, child_indices: np.ndarray,
                     seed: int, gen_index: int, params: OperatorParams,
                     g: Graph | None = None):
    g = g if g is not None else _WORKER_GRAPH
    base = RngStream(seed, "offspring", gen_index)
    children = np.empty((len(child_indices), g.node_count), dtype=np.int64)
    for row, i in enumerate(child_indices):
        children[row] = _make_child(pool_matrix, g, params, base.child(int(i)).generator)
    return children, evaluate_many(g, children)


class _Evaluator:
    """Runs offspring generation inline or across a process pool."""

    def __init__(self, g: Graph, workers: int):
        self.g = g
        self.workers = workers
        self._pool = None
        if workers > 1:
            self._pool = ProcessPoolExecutor(max_workers=workers,
                                             initializer=_init_worker, initargs=(g,))

    def offspring(self, pool_matrix: np.ndarray, seed: int, gen_index: int,
                  params: OperatorParams):
        n_children = pool_matrix.shape[0]
        indices = np.arange(n_children)
        if self._pool is None:
            return _offspring_chunk(pool_matrix, indices, seed, gen_index, params, self.g)
        chunks = [c for c in np.array_split(indices, self.workers) if len(c)]
        futures = [self._pool.submit(_offspring_chunk, pool_matrix, c, seed, gen_index, params)
                   for c in chunks]
        parts = [f.result() for f in futures]
        labels = np.concatenate([p[0] for p in parts])
        objs = np.concatenate([p[1] for p in parts])
        return labels, objs

    def close(self):
        if self._pool is not None:
            self._pool.shutdown()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


# ---------------------------------------------------------------------------

def dedup_rank1(population: list[Individual]) -> list[Individual]:
    seen = set()
    out = []
    for ind in population:
        if ind.rank != 1:
            continue
        key = canonicalize(ind.labels).tobytes()
        if key not in seen:
            seen.add(key)
            out.append(ind)
    return out


def evolve(g: Graph, cfg: EvolutionConfig) -> ParetoFront:
    """Run the full evolutionary loop and return the final rank-1 front."""
    rng = RngStream(cfg.seed)
    timings = {"initialize": 0.0, "evaluate": 0.0, "select": 0.0,
               "offspring": 0.0, "environmental": 0.0}
    history: list[float] = []

    t0 = time.perf_counter()
    init_labels = initialize_population(g, cfg.population, rng.child("init"))
    timings["initialize"] += time.perf_counter() - t0

    t0 = time.perf_counter()
    objs = evaluate_many(g, np.stack(init_labels))
    population = [Individual(lbl, float(o[0]), float(o[1]))
                  for lbl, o in zip(init_labels, objs)]
    timings["evaluate"] += time.perf_counter() - t0

    with _Evaluator(g, cfg.workers) as evaluator:
        for gen_index in range(cfg.generations):
            t0 = time.perf_counter()
            rank_and_crowd(population, epoch=gen_index)
            mating = tournament_select(population, cfg.population,
                                       rng.child("tournament", gen_index))
            timings["select"] += time.perf_counter() - t0

            t0 = time.perf_counter()
            pool_matrix = np.stack([ind.labels for ind in mating])
            child_labels, child_objs = evaluator.offspring(
                pool_matrix, cfg.seed, gen_index, cfg.params)
            offspring = [Individual(child_labels[i], float(child_objs[i, 0]),
                                    float(child_objs[i, 1]))
                         for i in range(len(child_labels))]
            timings["offspring"] += time.perf_counter() - t0

            t0 = time.perf_counter()
            population = environmental_selection(population + offspring, cfg.population)
            timings["environmental"] += time.perf_counter() - t0
            history.append(max(ind.quality for ind in population))

    rank_and_crowd(population, epoch=cfg.generations)
    members = dedup_rank1(population)
    return ParetoFront(members=members, best_quality_history=history, timings=timings)


def select_best(front: ParetoFront | list[Individual]) -> Individual:
    """Highest scalarized quality; ties prefer fewer communities, then
    earlier position in the front."""
    members = front.members if isinstance(front, ParetoFront) else list(front)
    if not members:
        raise ContractViolation("empty Pareto front")
    best = members[0]
    best_key = (-best.quality, community_count(best.labels))
    for ind in members[1:]:
        key = (-ind.quality, community_count(ind.labels))
        if key < best_key:
            best, best_key = ind, key
    return best
