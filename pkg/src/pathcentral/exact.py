"""Exact centrality oracles.

Ground truth for the sampling estimators: dependency-accumulation
betweenness (all vertices in one pass), a pair-restricted betweenness that
only visits the root's upstream sources, an all-pairs distance check for
coverage, and exhaustive simple-path enumeration for k-path scores.

Everything below a configurable size threshold is computed in exact rational
arithmetic so equality tests in higher layers are meaningful; above it the
same code paths run in floats.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .errors import GuardError
from .graph import DirectedGraph
from .reachability import ReachabilityInfo, compute_reachability

__all__ = [
    "brandes_betweenness",
    "brandes_betweenness_all",
    "restricted_pair_betweenness",
    "exact_coverage",
    "exact_kpath",
    "EXACT_ARITHMETIC_THRESHOLD",
    "COVERAGE_GUARD",
    "KPATH_VERTEX_GUARD",
    "KPATH_LENGTH_GUARD",
]

EXACT_ARITHMETIC_THRESHOLD = 1000
COVERAGE_GUARD = 2000
KPATH_VERTEX_GUARD = 15
KPATH_LENGTH_GUARD = 5


def _sigma_bfs(adj, source: int):
    """BFS from ``source`` with path counting.

    Returns (dist, sigma, order, preds) over reached vertices; sigma values
    are exact integers, order lists vertices by nondecreasing distance.
    """
    dist = {source: 0}
    sigma = {source: 1}
    preds: dict[int, list[int]] = {source: []}
    order = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        su = sigma[u]
        for v in adj[u]:
            dv = dist.get(v)
            if dv is None:
                dist[v] = du + 1
                sigma[v] = su
                preds[v] = [u]
                order.append(v)
                queue.append(v)
            elif dv == du + 1:
                sigma[v] += su
                preds[v].append(u)
    return dist, sigma, order, preds


def brandes_betweenness_all(
    g: DirectedGraph, exact_threshold: int = EXACT_ARITHMETIC_THRESHOLD
):
    """Betweenness of every vertex by dependency accumulation.

    One BFS plus one backward sweep per source; rational arithmetic up to
    ``exact_threshold`` vertices, floats above. Normalized by the number of
    ordered vertex pairs. Computing a single vertex costs the same as all
    of them, so callers that need several scores should call this once.
    """
    n = g.vertex_count
    if n < 2:
        raise GuardError("betweenness needs at least 2 vertices")
    exact = n <= exact_threshold
    zero = Fraction(0) if exact else 0.0
    scores = [zero] * n
    adj = g._fwd
    for s in range(n):
        _, sigma, order, preds = _sigma_bfs(adj, s)
        delta = dict.fromkeys(order, zero)
        for w in reversed(order):
            if exact:
                coeff = (1 + delta[w]) / sigma[w]
            else:
                coeff = (1.0 + delta[w]) / sigma[w]
            for u in preds[w]:
                delta[u] += sigma[u] * coeff
            if w != s:
                scores[w] += delta[w]
    denom = n * (n - 1)
    return [v / denom for v in scores]


def brandes_betweenness(
    g: DirectedGraph, root: int, exact_threshold: int = EXACT_ARITHMETIC_THRESHOLD
):
    """Exact betweenness of one vertex; see ``brandes_betweenness_all``."""
    g._check(root)
    return brandes_betweenness_all(g, exact_threshold)[root]


def restricted_pair_betweenness(
    g: DirectedGraph,
    root: int,
    reach: ReachabilityInfo | None = None,
    exact_threshold: int = EXACT_ARITHMETIC_THRESHOLD,
):
    """Betweenness of ``root`` summed over upstream-by-downstream pairs only.

    For a qualifying pair (the two legs through the root add up to the
    pair's distance) the number of shortest paths through the root factors
    into the two leg counts, so one forward BFS per upstream source plus a
    single BFS from the root covers everything. Agrees with the
    dependency-accumulation value on every graph; the point of keeping both
    is that they can check each other.
    """
    g._check(root)
    n = g.vertex_count
    if n < 2:
        raise GuardError("betweenness needs at least 2 vertices")
    if reach is None:
        reach = compute_reachability(g, root)
    exact = n <= exact_threshold
    if not reach.upstream or not reach.downstream:
        return Fraction(0) if exact else 0.0

    adj = g._fwd
    _, sigma_from_root, _, _ = _sigma_bfs(adj, root)
    dist_from_root = reach.dist_from_root
    targets = sorted(reach.downstream)

    total = Fraction(0) if exact else 0.0
    for s in sorted(reach.upstream):
        dist_s, sigma_s, _, _ = _sigma_bfs(adj, s)
        d_to_root = dist_s[root]
        count_to_root = sigma_s[root]
        for t in targets:
            if t == s:
                continue
            dt = dist_s.get(t)
            if dt is None or d_to_root + dist_from_root[t] != dt:
                continue
            through = count_to_root * sigma_from_root[t]
            if exact:
                total += Fraction(through, sigma_s[t])
            else:
                total += through / sigma_s[t]
    return total / (n * (n - 1))


def exact_coverage(g: DirectedGraph, root: int, guard: int = COVERAGE_GUARD):
    """Fraction of ordered non-root pairs with the root on a shortest path.

    All-pairs distances come from scipy's BFS-based shortest-path kernel
    (an independent code path from this package's own searches); a pair
    (s, t) counts iff d(s, root) + d(root, t) equals a finite d(s, t).
    """
    import numpy as np
    from scipy.sparse import csgraph

    g._check(root)
    n = g.vertex_count
    if n < 2:
        raise GuardError("coverage needs at least 2 vertices")
    if n > guard:
        raise GuardError(f"exact coverage is capped at {guard} vertices, got {n}")

    dist = csgraph.shortest_path(g.to_csr(), method="auto", unweighted=True)
    through = dist[:, root][:, None] + dist[root, :][None, :]
    hit = np.isfinite(dist) & (through == dist)
    hit[root, :] = False
    hit[:, root] = False
    np.fill_diagonal(hit, False)
    return Fraction(int(hit.sum()), n * (n - 1))


def exact_kpath(
    g: DirectedGraph,
    root: int,
    k: int,
    weight: str = "original",
    reach: ReachabilityInfo | None = None,
) -> Fraction:
    """k-path centrality of ``root`` by exhaustive simple-path enumeration.

    Sums, over every simple path of length 1..k that starts at a non-root
    vertex and touches the root, the path's weight: the product of
    reciprocal counts of unvisited out-neighbors at each step (all of them
    for ``weight="original"``, only those inside the root's domain for
    ``weight="restricted"``). Any path touching the root lies entirely
    inside the root's domain, so the enumeration can stay there without
    losing contributions.

    Guarded to small inputs; the path count is factorial in the worst case.
    """
    g._check(root)
    n = g.vertex_count
    if n > KPATH_VERTEX_GUARD:
        raise GuardError(f"exact k-path is capped at {KPATH_VERTEX_GUARD} vertices, got {n}")
    if k > KPATH_LENGTH_GUARD:
        raise GuardError(f"exact k-path is capped at k={KPATH_LENGTH_GUARD}, got {k}")
    if k < 1:
        raise ValueError("k must be >= 1")
    if weight not in ("original", "restricted"):
        raise ValueError(f"weight must be 'original' or 'restricted', got {weight!r}")
    if reach is None:
        reach = compute_reachability(g, root)

    domain = reach.domain
    adj = g._fwd
    restricted = weight == "restricted"
    total = Fraction(0)

    def extend(u: int, depth: int, weight_den: int, visited: set[int], touched: bool):
        nonlocal total
        if depth == k:
            return
        candidates = [v for v in adj[u] if v in domain and v not in visited]
        if not candidates:
            return
        if restricted:
            step = len(candidates)
        else:
            step = sum(1 for v in adj[u] if v not in visited)
        den = weight_den * step
        for v in candidates:
            now_touched = touched or v == root
            if now_touched:
                total += Fraction(1, den)
            visited.add(v)
            extend(v, depth + 1, den, visited, now_touched)
            visited.remove(v)

    for s in sorted(reach.upstream):
        extend(s, 0, 1, {s}, False)
    return total / (k * n)
