"""Shared fixtures plus independent oracles.

The oracles recompute answers straight from definitions (pairwise vertex
deletion, explicit path enumeration, dense linear algebra) so the faster
implementations in the package are checked against something honest.
"""
from __future__ import annotations

import numpy as np
import pytest

from stressdraw import PlanarEmbedding, edge_key
from stressdraw.solver import OuterPolygon
from stressdraw.spread import StOrientation


@pytest.fixture
def k4() -> PlanarEmbedding:
    """Tetrahedron: outer triangle 0,2,1 with vertex 3 inside."""
    return PlanarEmbedding(4, ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)), (0, 2, 1))


@pytest.fixture
def octahedron() -> PlanarEmbedding:
    """Outer triangle 0,2,1 around inner triangle 3,4,5; every face a triangle."""
    return PlanarEmbedding(
        6,
        ((1, 3, 5, 2), (2, 4, 3, 0), (0, 5, 4, 1),
         (5, 0, 1, 4), (5, 3, 1, 2), (0, 3, 4, 2)),
        (0, 2, 1),
    )


@pytest.fixture
def two_ring_wheel() -> PlanarEmbedding:
    """Hub 0, inner ring 1-4, outer ring 5-8; outer face is a quad."""
    return PlanarEmbedding(
        9,
        ((1, 2, 3, 4),
         (5, 2, 0, 4), (6, 3, 0, 1), (7, 4, 0, 2), (8, 1, 0, 3),
         (6, 1, 8), (7, 2, 5), (8, 3, 6), (5, 4, 7)),
        (5, 6, 7, 8),
    )


def _connected_without(adj: list[set[int]], n: int, removed: set[int]) -> bool:
    keep = [v for v in range(n) if v not in removed]
    if not keep:
        return True
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(keep)


def brute_three_connected(emb: PlanarEmbedding) -> bool:
    """Definition-level check: n >= 4 and no set of at most 2 vertices
    disconnects the rest."""
    n = emb.n
    if n < 4:
        return False
    adj = [set(emb.rotation[v]) for v in range(n)]
    if not _connected_without(adj, n, set()):
        return False
    for a in range(n):
        if not _connected_without(adj, n, {a}):
            return False
        for b in range(a + 1, n):
            if not _connected_without(adj, n, {a, b}):
                return False
    return True


def enumerate_canonical_paths(o: StOrientation) -> dict[tuple[int, int], int]:
    """Count, for every directed edge, how many canonical paths contain it,
    by materializing each path: source-tree walk up to the tail, the edge
    itself, then the sink-tree walk down from the head."""
    counts: dict[tuple[int, int], int] = {e: 0 for e in o.directed_edges()}
    for a, b in o.directed_edges():
        up = [a]
        while o.t1_parent.get(up[-1]) is not None:
            up.append(o.t1_parent[up[-1]])
        down = [b]
        while o.tn_parent.get(down[-1]) is not None:
            down.append(o.tn_parent[down[-1]])
        path = up[::-1] + down
        for step in zip(path, path[1:]):
            counts[step] += 1
    return counts


def dense_stress_positions(
    emb: PlanarEmbedding,
    weights: dict[tuple[int, int], float],
    poly: OuterPolygon,
) -> dict[int, tuple[float, float]]:
    """Independent dense solve of the equilibrium system via numpy."""
    pinned = dict(poly.positions)
    interior = [v for v in range(emb.n) if v not in pinned]
    idx = {v: i for i, v in enumerate(interior)}
    k = len(interior)
    a = np.zeros((k, k))
    rhs = np.zeros((k, 2))
    for v in interior:
        i = idx[v]
        for u in emb.rotation[v]:
            w = weights[edge_key(u, v)]
            a[i, i] += w
            if u in idx:
                a[i, idx[u]] -= w
            else:
                rhs[i, 0] += w * pinned[u][0]
                rhs[i, 1] += w * pinned[u][1]
    sol = np.linalg.solve(a, rhs)
    out: dict[int, tuple[float, float]] = dict(pinned)
    for v in interior:
        out[v] = (float(sol[idx[v], 0]), float(sol[idx[v], 1]))
    return out


def max_position_gap(
    p: dict[int, tuple[float, float]], q: dict[int, tuple[float, float]]
) -> float:
    assert p.keys() == q.keys()
    return max(
        max(abs(p[v][0] - q[v][0]), abs(p[v][1] - q[v][1])) for v in p
    )
