"""Immutable undirected simple graph with dense integer node ids.

Graphs are loaded once (single-threaded), then shared freely across
workers: all arrays are frozen after construction.  Adjacency is stored
in CSR form (indptr/indices) plus a flat edge list (each undirected edge
once, with u < v) because the objective evaluation is edge-vectorized.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyGraphError, ParseError


@dataclass(frozen=True)
class NodeLabelTable:
    """Bijection between external node identifiers and dense internal ids."""

    to_external: tuple
    to_internal: dict = field(repr=False)

    def external(self, v: int):
        return self.to_external[v]

    def internal(self, label) -> int:
        return self.to_internal[label]

    def __len__(self):
        return len(self.to_external)


@dataclass(frozen=True)
class Graph:
    """Undirected, unweighted simple graph over nodes 0..node_count-1."""

    node_count: int
    edge_count: int
    indptr: np.ndarray    # CSR offsets, len node_count + 1
    indices: np.ndarray   # sorted neighbor ids, len 2 * edge_count
    degrees: np.ndarray   # per-node degree
    edge_u: np.ndarray    # edge endpoints, u < v, len edge_count
    edge_v: np.ndarray

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted, duplicate-free neighbors of v (v itself excluded)."""
        if not 0 <= v < self.node_count:
            raise IndexError(f"node {v} out of range [0, {self.node_count})")
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.degrees[v])


@dataclass(frozen=True)
class LoadedGraph:
    graph: Graph
    labels: NodeLabelTable
    report: dict

    def __iter__(self):  # allow g, table, report = load_edge_list(...)
        return iter((self.graph, self.labels, self.report))


def build_graph(edges: Sequence[tuple[int, int]], node_count: int) -> tuple[Graph, int, int]:
    """Assemble a Graph from internal-id edge pairs.

    Self-loops and duplicate edges are dropped; returns the graph plus the
    counts of dropped self-loops and duplicates.
    """
    if edges:
        arr = np.asarray(edges, dtype=np.int64)
        loops = arr[:, 0] == arr[:, 1]
        dropped_loops = int(loops.sum())
        arr = arr[~loops]
    else:
        arr = np.empty((0, 2), dtype=np.int64)
        dropped_loops = 0

    if len(arr):
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        keys = lo * node_count + hi
        uniq, first = np.unique(keys, return_index=True)
        dropped_dups = len(arr) - len(uniq)
        order = np.sort(first)
        lo, hi = lo[order], hi[order]
    else:
        lo = hi = np.empty(0, dtype=np.int64)
        dropped_dups = 0

    m = len(lo)
    if m == 0:
        raise EmptyGraphError("empty graph: no edges remain after cleaning")

    both_u = np.concatenate([lo, hi])
    both_v = np.concatenate([hi, lo])
    degrees = np.bincount(both_u, minlength=node_count).astype(np.int64)
    indptr = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    order = np.lexsort((both_v, both_u))
    indices = both_v[order]

    for a in (indptr, indices, degrees, lo, hi):
        a.setflags(write=False)

    g = Graph(
        node_count=node_count,
        edge_count=m,
        indptr=indptr,
        indices=indices,
        degrees=degrees,
        edge_u=lo,
        edge_v=hi,
    )
    return g, dropped_loops, dropped_dups


def _split_line(line: str, fmt: str, lineno: int) -> tuple[str, str]:
    parts = line.split(",") if fmt == "csv" else line.split()
    parts = [p.strip() for p in parts if p.strip()]
    if len(parts) != 2:
        raise ParseError(f"expected two node identifiers, got {len(parts)}: {line!r}",
                         line_number=lineno)
    return parts[0], parts[1]


def load_edge_list(source, fmt: str = "whitespace") -> LoadedGraph:
    """Parse an edge-list text stream into a Graph plus its label table.

    `source` may be a file-like object, a string of text, or an iterable of
    lines.  Lines starting with '#' and blank lines are ignored.  Node
    identifiers are kept as text in the label table; internal ids are dense
    integers in order of first appearance.
    """
    if fmt not in ("whitespace", "csv"):
        raise ValueError(f"unknown edge-list format {fmt!r}")
    if isinstance(source, str):
        source = io.StringIO(source)

    to_internal: dict = {}
    to_external: list = []
    edges: list[tuple[int, int]] = []

    def intern(label: str) -> int:
        v = to_internal.get(label)
        if v is None:
            v = len(to_external)
            to_internal[label] = v
            to_external.append(label)
        return v

    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        a, b = _split_line(line, fmt, lineno)
        edges.append((intern(a), intern(b)))

    g, dropped_loops, dropped_dups = build_graph(edges, len(to_external))
    table = NodeLabelTable(tuple(to_external), to_internal)
    report = {
        "nodes": g.node_count,
        "edges": g.edge_count,
        "dropped_self_loops": dropped_loops,
        "dropped_duplicates": dropped_dups,
    }
    return LoadedGraph(g, table, report)


def from_edges(pairs: Iterable[tuple]) -> LoadedGraph:
    """Build a graph from an iterable of id pairs (same cleaning as loading)."""
    to_internal: dict = {}
    to_external: list = []
    edges = []
    for pair in pairs:
        try:
            a, b = pair
        except (TypeError, ValueError):
            raise TypeError(f"expected a pair of node ids, got {pair!r}") from None
        for x in (a, b):
            if x not in to_internal:
                to_internal[x] = len(to_external)
                to_external.append(x)
        edges.append((to_internal[a], to_internal[b]))
    g, dropped_loops, dropped_dups = build_graph(edges, len(to_external))
    table = NodeLabelTable(tuple(to_external), to_internal)
    report = {
        "nodes": g.node_count,
        "edges": g.edge_count,
        "dropped_self_loops": dropped_loops,
        "dropped_duplicates": dropped_dups,
    }
    return LoadedGraph(g, table, report)


def write_edge_list(g: Graph, table: NodeLabelTable | None, stream) -> None:
    """Write one edge per line using external labels (round-trip stable)."""
    for u, v in zip(g.edge_u, g.edge_v):
        a = table.external(u) if table is not None else u
        b = table.external(v) if table is not None else v
        stream.write(f"{a} {b}\n")
