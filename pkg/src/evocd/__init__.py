"""Parallel multi-objective evolutionary community detection.

Minimizes two conflicting partition objectives (intra-community edge
deficiency and inter-community degree concentration) with an NSGA-II
loop over topology-aware operators, returning a Pareto front of
partitions plus a scalarized best pick.
"""

from .benchmark import (BenchmarkSpec, GroundTruthGraph, exact_pareto, ga_effort,
                        generate_planted, run_experiment, thread_scaling)
from .engine import (EvolutionConfig, Individual, ParetoFront, crowding_distance,
                     dominates, environmental_selection, evolve,
                     fast_nondominated_sort, select_best, tournament_select)
from .errors import (ConfigError, ContractViolation, EmptyGraphError, EvocdError,
                     ParseError)
from .graph import Graph, NodeLabelTable, from_edges, load_edge_list, write_edge_list
from .metrics import ami, contingency, entropy_report, harmonic_quality, nmi
from .objectives import (canonicalize, community_count, evaluate_objectives,
                         modularity, scalarized_quality)
from .operators import (OperatorParams, create_offspring, crossover,
                        initialize_population, mutate)
from .rng import RngStream

__version__ = "0.1.0"

__all__ = [
    "BenchmarkSpec", "ConfigError", "ContractViolation", "EmptyGraphError",
    "EvocdError", "EvolutionConfig", "Graph", "GroundTruthGraph", "Individual",
    "NodeLabelTable", "OperatorParams", "ParetoFront", "ParseError", "RngStream",
    "ami", "canonicalize", "community_count", "contingency", "create_offspring",
    "crossover", "crowding_distance", "dominates", "environmental_selection",
    "entropy_report", "evaluate_objectives", "evolve", "exact_pareto",
    "fast_nondominated_sort",
    "from_edges", "ga_effort", "generate_planted", "harmonic_quality",
    "initialize_population", "load_edge_list", "modularity", "mutate", "nmi",
    "run_experiment", "scalarized_quality", "select_best", "thread_scaling",
    "tournament_select", "write_edge_list",
]
