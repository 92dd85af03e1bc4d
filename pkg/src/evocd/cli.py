"""Command-line front end: detect / eval / generate / bench / oracle.

Exit codes: 0 success, 2 I/O or input-data errors, 3 configuration or
contract errors.  Primary outputs are byte-identical for identical
inputs, seed, and flags; wall-clock timings go to a separate sidecar
file so they never perturb the primary artifacts.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

import numpy as np

from . import benchmark as bench_mod
from .engine import EvolutionConfig, evolve, select_best
from .errors import ConfigError, ContractViolation, EmptyGraphError, EvocdError, ParseError
from .graph import load_edge_list, write_edge_list
from .metrics import ami, harmonic_quality, nmi
from .objectives import community_count, modularity, scalarized_quality
from .operators import OperatorParams

EXIT_OK = 0
EXIT_IO = 2
EXIT_CONFIG = 3


def _default_workers() -> int:
    env = os.environ.get("EVOCD_WORKERS")
    return int(env) if env else 1


def _add_engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--population", type=int, default=100)
    p.add_argument("--generations", type=int, default=100)
    p.add_argument("--crossover", type=float, default=0.8)
    p.add_argument("--mutation", type=float, default=0.2)
    p.add_argument("--parents", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: $EVOCD_WORKERS or 1)")


def _engine_config(args) -> EvolutionConfig:
    workers = args.workers if args.workers is not None else _default_workers()
    return EvolutionConfig(
        population=args.population,
        generations=args.generations,
        params=OperatorParams(crossover_prob=args.crossover,
                              mutation_prob=args.mutation,
                              parents_per_crossover=args.parents),
        seed=args.seed,
        workers=workers,
    )


def _config_echo(cfg: EvolutionConfig) -> dict:
    return {
        "population": cfg.population, "generations": cfg.generations,
        "crossover": cfg.params.crossover_prob, "mutation": cfg.params.mutation_prob,
        "parents": cfg.params.parents_per_crossover,
        "seed": cfg.seed, "workers": cfg.workers,
    }


def _load_graph(path: str, fmt: str):
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh, fmt="csv" if fmt == "csv" else "whitespace")


def _write_json(path: str | None, payload) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_partition(path: str, table) -> np.ndarray:
    """Partition file: JSON {"labels": [...]} or two-column CSV (node, community)."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    labels = np.full(len(table), -1, dtype=np.int64)
    if text.lstrip().startswith("{"):
        data = json.loads(text)["labels"]
        if len(data) != len(table):
            raise ContractViolation(
                f"partition has {len(data)} labels for {len(table)} nodes")
        return np.asarray(data, dtype=np.int64)
    seen = 0
    for row in csv.reader(text.splitlines()):
        if not row or row[0].startswith("#") or (seen == 0 and row[0] == "node"):
            seen = 1
            continue
        node, comm = row[0].strip(), row[1].strip()
        if node not in table.to_internal:
            raise ContractViolation(f"partition names unknown node {node!r}")
        labels[table.internal(node)] = int(comm)
        seen = 1
    if (labels < 0).any():
        missing = int((labels < 0).sum())
        raise ContractViolation(f"partition misses {missing} graph nodes")
    return labels


def cmd_detect(args) -> int:
    cfg = _engine_config(args)
    g, table, load_report = _load_graph(args.graph, args.input_format)
    front = evolve(g, cfg)
    best = select_best(front)

    nodes = [table.external(v) for v in range(g.node_count)]
    partitions = {}
    front_rows = []
    for i, ind in enumerate(front):
        ref = f"p{i}"
        partitions[ref] = [int(x) for x in ind.labels]
        front_rows.append({
            "labels_ref": ref,
            "f1": ind.f1, "f2": ind.f2,
            "Q": scalarized_quality(ind.f1, ind.f2),
            "k": community_count(ind.labels),
        })
    best_index = next(i for i, ind in enumerate(front) if ind is best)
    report = {
        "config": _config_echo(cfg),
        "graph": load_report,
        "generations": cfg.generations,
        "per_generation_best_q": front.best_quality_history,
        "front": front_rows,
        "best": front_rows[best_index],
        "nodes": nodes,
        "partitions": partitions,
    }

    out = args.output or "detect"
    _write_json(f"{out}.json", report)
    with open(f"{out}_best.csv", "w", encoding="utf-8") as fh:
        fh.write("node,community\n")
        for v, label in enumerate(best.labels):
            fh.write(f"{nodes[v]},{int(label)}\n")
    _write_json(f"{out}_timing.json",
                {"phase_seconds": front.timings, "written_at": time.time()})
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["labels_ref", "f1", "f2", "Q", "k"])
        for row in front_rows:
            writer.writerow([row["labels_ref"], row["f1"], row["f2"], row["Q"], row["k"]])
    return EXIT_OK


def cmd_eval(args) -> int:
    g, table, _ = _load_graph(args.graph, args.input_format)
    detected = _read_partition(args.partition, table)
    truth = _read_partition(args.truth, table)
    nmi_v = nmi(detected, truth)
    ami_v = ami(detected, truth)
    payload = {
        "nmi": nmi_v,
        "ami": ami_v,
        "H": harmonic_quality(ami_v, nmi_v),
        "modularity": modularity(g, detected),
        "k_detected": community_count(detected),
        "k_truth": community_count(truth),
    }
    _write_json(args.output, payload)
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = bench_mod.BenchmarkSpec(n=args.nodes, mu=args.mu,
                                   avg_degree=args.avg_degree,
                                   min_comm=args.min_comm, max_comm=args.max_comm,
                                   seed=args.seed)
    gt = bench_mod.generate_planted(spec)
    out = args.output or "planted"
    with open(f"{out}.edges", "w", encoding="utf-8") as fh:
        write_edge_list(gt.graph, None, fh)
    with open(f"{out}_truth.csv", "w", encoding="utf-8") as fh:
        fh.write("node,community\n")
        for v, c in enumerate(gt.truth):
            fh.write(f"{v},{int(c)}\n")
    _write_json(f"{out}_spec.json", {
        "n": spec.n, "mu": spec.mu, "avg_degree": spec.avg_degree,
        "min_comm": spec.min_comm, "max_comm": spec.max_comm, "seed": spec.seed,
        "realized_mu": gt.realized_mu, "edges": gt.graph.edge_count,
        "dropped_stubs": gt.dropped_stubs,
    })
    return EXIT_OK


def cmd_bench(args) -> int:
    cfg = _engine_config(args)
    mus = [float(x) for x in args.mu_grid.split(",") if x.strip()]
    if not mus:
        raise ConfigError("empty --mu-grid")
    grid = [(bench_mod.BenchmarkSpec(n=args.nodes, mu=mu,
                                     avg_degree=args.avg_degree,
                                     min_comm=args.min_comm, max_comm=args.max_comm,
                                     seed=args.seed), cfg)
            for mu in mus]
    report = bench_mod.run_experiment(grid, seeds=args.seeds, workers=cfg.workers)
    out = args.output or "bench"
    with open(f"{out}_runs.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=bench_mod.RUN_CSV_FIELDS)
        writer.writeheader()
        writer.writerows(report.runs)
    _write_json(f"{out}_report.json",
                {"config": _config_echo(cfg), "rows": report.rows,
                 "failures": report.failures})
    # plot-ready series, one block per figure panel
    series = {"mu": mus}
    for metric in ("nmi", "ami", "wall_ms"):
        series[f"mean_{metric}"] = [row[f"mean_{metric}"] for row in report.rows]
        series[f"ci95_{metric}"] = [row[f"ci95_{metric}"] for row in report.rows]
    _write_json(f"{out}_plotdata.json", series)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g, table, _ = _load_graph(args.graph, args.input_format)
    front = bench_mod.exact_pareto(g, max_n=args.max_n)
    payload = {
        "n": g.node_count, "m": g.edge_count,
        "front": [{
            "f1": f1, "f2": f2,
            "Q": scalarized_quality(f1, f2),
            "labels": [int(x) for x in labels],
        } for (f1, f2), labels in front],
    }
    _write_json(args.output, payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="evocd",
                                     description="Multi-objective evolutionary community detection")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="run the engine on an edge list")
    p.add_argument("graph")
    p.add_argument("--input-format", choices=["whitespace", "csv"], default="whitespace")
    _add_engine_flags(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output", default=None, help="output path prefix")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("eval", help="score a partition against ground truth")
    p.add_argument("partition")
    p.add_argument("truth")
    p.add_argument("graph")
    p.add_argument("--input-format", choices=["whitespace", "csv"], default="whitespace")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("generate", help="generate a planted-partition benchmark graph")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--avg-degree", type=float, default=20.0)
    p.add_argument("--min-comm", type=int, default=20)
    p.add_argument("--max-comm", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None, help="output path prefix")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="run a mu-grid experiment with seeds and CIs")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--mu-grid", required=True, help="comma-separated mu values")
    p.add_argument("--avg-degree", type=float, default=20.0)
    p.add_argument("--min-comm", type=int, default=20)
    p.add_argument("--max-comm", type=int, default=100)
    p.add_argument("--seeds", type=int, default=5)
    _add_engine_flags(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output", default=None, help="output path prefix")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="exact Pareto front by full enumeration (tiny graphs)")
    p.add_argument("graph")
    p.add_argument("--input-format", choices=["whitespace", "csv"], default="whitespace")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ParseError, EmptyGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConfigError, ContractViolation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except EvocdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
