"""Equilibrium drawings: pin the outer face, solve for everything else.

Interior vertex positions satisfy, per coordinate, the weighted balance
sum_{v ~ u} w_uv (p_u - p_v) = 0. With positive weights on every edge that
touches an interior vertex and a strictly convex outer polygon, the solved
drawing of a 3-connected planar embedding is planar with convex faces.
Weights on edges between two pinned vertices are accepted but have no
effect on the system.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csc_matrix
from scipy.sparse.linalg import splu

from .errors import (
    NonPositiveWeight,
    PreconditionError,
    ResidualExceeded,
    SingularSystem,
)
from .graph import Edge, PlanarEmbedding, edge_key

# Hard cap on the equilibrium residual, relative to the polygon radius.
RESIDUAL_RTOL = 1e-8


@dataclass(frozen=True)
class OuterPolygon:
    """Strictly convex positions for the outer face, in cyclic order."""

    order: tuple[int, ...]
    positions: dict[int, tuple[float, float]]

    @property
    def centroid(self) -> tuple[float, float]:
        xs = [p[0] for p in self.positions.values()]
        ys = [p[1] for p in self.positions.values()]
        return sum(xs) / len(xs), sum(ys) / len(ys)

    @property
    def radius(self) -> float:
        """Largest distance from the centroid to a polygon vertex."""
        cx, cy = self.centroid
        return max(math.hypot(x - cx, y - cy) for x, y in self.positions.values())


@dataclass(frozen=True)
class Drawing:
    """Vertex positions together with the pinned polygon that produced them."""

    positions: dict[int, tuple[float, float]]
    polygon: OuterPolygon
    residual: float


def regular_polygon(outer_face: tuple[int, ...], radius: float = 1.0) -> OuterPolygon:
    """Regular polygon pinning: vertex i sits at angle pi/2 + 2*pi*i/k."""
    k = len(outer_face)
    if k < 3:
        raise PreconditionError(f"outer face needs >= 3 vertices, got {k}")
    if not radius > 0:
        raise PreconditionError(f"radius must be positive, got {radius}")
    positions = {}
    for i, v in enumerate(outer_face):
        theta = math.pi / 2 + 2 * math.pi * i / k
        positions[v] = (radius * math.cos(theta), radius * math.sin(theta))
    return OuterPolygon(order=tuple(outer_face), positions=positions)


def equilibrium_residual(
    emb: PlanarEmbedding,
    weights: dict[Edge, float],
    positions: dict[int, tuple[float, float]],
    pinned: set[int],
) -> float:
    """Max absolute per-coordinate imbalance over the interior vertices."""
    worst = 0.0
    for u in range(emb.n):
        if u in pinned:
            continue
        sx = sy = 0.0
        xu, yu = positions[u]
        for v in emb.rotation[u]:
            w = weights[edge_key(u, v)]
            xv, yv = positions[v]
            sx += w * (xu - xv)
            sy += w * (yu - yv)
        worst = max(worst, abs(sx), abs(sy))
    return worst


def solve_stress(
    emb: PlanarEmbedding,
    weights: dict[Edge, float],
    poly: OuterPolygon,
) -> Drawing:
    """Solve the weighted equilibrium system with the outer face pinned.

    One sparse LU factorization of the interior weighted Laplacian is
    reused for both coordinates, followed by a few iterative-refinement
    passes. The result must meet the hard residual bound
    RESIDUAL_RTOL * poly.radius or ResidualExceeded is raised.
    """
    pinned = set(poly.positions)
    if set(emb.outer_face) != pinned:
        raise PreconditionError("polygon does not pin exactly the outer face")
    interior = [v for v in range(emb.n) if v not in pinned]
    tol = RESIDUAL_RTOL * poly.radius
    if not interior:
        return Drawing(dict(poly.positions), poly, 0.0)

    index = {v: i for i, v in enumerate(interior)}
    k = len(interior)
    rows: list[int] = []
    cols: list[int] = []
    vals: list[float] = []
    rhs = np.zeros((k, 2))
    for u in interior:
        i = index[u]
        diag = 0.0
        for v in emb.rotation[u]:
            w = weights.get(edge_key(u, v))
            if w is None or not w > 0 or not math.isfinite(w):
                raise NonPositiveWeight(
                    f"edge {edge_key(u, v)} needs a positive finite weight, got {w!r}"
                )
            diag += w
            if v in pinned:
                px, py = poly.positions[v]
                rhs[i, 0] += w * px
                rhs[i, 1] += w * py
            else:
                rows.append(i)
                cols.append(index[v])
                vals.append(-w)
        rows.append(i)
        cols.append(i)
        vals.append(diag)

    lap = csc_matrix((vals, (rows, cols)), shape=(k, k))
    try:
        lu = splu(lap)
    except RuntimeError as exc:
        raise SingularSystem(f"interior system could not be factorized: {exc}") from exc
    sol = lu.solve(rhs)
    for _ in range(3):
        gap = rhs - lap @ sol
        if np.abs(gap).max() <= 0.01 * tol:
            break
        sol += lu.solve(gap)

    positions = dict(poly.positions)
    for u in interior:
        i = index[u]
        positions[u] = (float(sol[i, 0]), float(sol[i, 1]))
    residual = equilibrium_residual(emb, weights, positions, pinned)
    if residual > tol:
        raise ResidualExceeded(
            f"equilibrium residual {residual:.3e} exceeds {tol:.3e}"
        )
    return Drawing(positions, poly, residual)


def unit_weights(emb: PlanarEmbedding) -> dict[Edge, float]:
    return {e: 1.0 for e in emb.edges()}


def tutte(emb: PlanarEmbedding, poly: OuterPolygon) -> Drawing:
    """Classic barycentric drawing: every edge weight equal to one."""
    return solve_stress(emb, unit_weights(emb), poly)
