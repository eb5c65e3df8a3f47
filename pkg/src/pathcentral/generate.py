"""Synthetic directed graphs for tests and benchmarks.

Three families: uniform random digraphs, a preferential-attachment family
whose hubs accumulate both in- and out-edges (giving a few vertices large
betweenness, which benchmark error columns need), and layered DAGs with
short diameters and no cycles.
"""

from __future__ import annotations

import numpy as np

from .graph import DirectedGraph

__all__ = ["random_digraph", "hub_digraph", "layered_dag"]


def _rng_of(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_digraph(n: int, edge_prob: float, seed=None) -> DirectedGraph:
    """Uniform digraph: every ordered pair (u, v), u != v, independently."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not (0.0 <= edge_prob <= 1.0):
        raise ValueError("edge_prob must be in [0, 1]")
    rng = _rng_of(seed)
    mask = rng.random((n, n)) < edge_prob
    np.fill_diagonal(mask, False)
    rows, cols = np.nonzero(mask)
    edges = list(zip(rows.tolist(), cols.tolist()))
    return DirectedGraph.from_edges(edges, vertex_count=n)


def hub_digraph(n: int, out_per_vertex: int = 3, in_per_vertex: int = 3, seed=None) -> DirectedGraph:
    """Preferential attachment with attachment on both edge directions.

    Starts from a small directed cycle. Each new vertex draws distinct
    out-targets proportionally to (in-degree + 1) and distinct in-sources
    proportionally to (out-degree + 1), so early vertices grow into hubs
    that sit on many shortest paths in both directions.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if out_per_vertex < 1 or in_per_vertex < 1:
        raise ValueError("degree parameters must be >= 1")
    rng = _rng_of(seed)
    core = min(max(out_per_vertex, in_per_vertex) + 1, n)
    edges = set()
    in_deg = [0] * n
    out_deg = [0] * n

    def add(u: int, v: int) -> None:
        if u != v and (u, v) not in edges:
            edges.add((u, v))
            out_deg[u] += 1
            in_deg[v] += 1

    for i in range(core):
        add(i, (i + 1) % core)

    for v in range(core, n):
        existing = v
        out_quota = min(out_per_vertex, existing)
        in_quota = min(in_per_vertex, existing)
        in_weights = np.array(in_deg[:existing], dtype=np.float64) + 1.0
        targets = rng.choice(existing, size=out_quota, replace=False,
                             p=in_weights / in_weights.sum())
        for t in targets.tolist():
            add(v, t)
        out_weights = np.array(out_deg[:existing], dtype=np.float64) + 1.0
        sources = rng.choice(existing, size=in_quota, replace=False,
                             p=out_weights / out_weights.sum())
        for s in sources.tolist():
            add(s, v)

    return DirectedGraph.from_edges(sorted(edges), vertex_count=n)


def layered_dag(layers: int, width: int, edge_prob: float = 0.5, seed=None) -> DirectedGraph:
    """DAG with ``layers`` ranks of ``width`` vertices, edges one rank down.

    Every vertex keeps at least one outgoing edge to the next rank (so the
    DAG is connected rank to rank); extra edges appear independently.
    """
    if layers < 2 or width < 1:
        raise ValueError("need layers >= 2 and width >= 1")
    if not (0.0 <= edge_prob <= 1.0):
        raise ValueError("edge_prob must be in [0, 1]")
    rng = _rng_of(seed)
    edges = []
    for layer in range(layers - 1):
        base = layer * width
        nxt = base + width
        for i in range(width):
            picked = [j for j in range(width) if rng.random() < edge_prob]
            if not picked:
                picked = [int(rng.integers(width))]
            for j in picked:
                edges.append((base + i, nxt + j))
    return DirectedGraph.from_edges(edges, vertex_count=layers * width)
