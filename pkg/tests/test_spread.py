"""Orientation, path counting, and the directional spread pipeline."""
from __future__ import annotations

import math

import pytest

from conftest import enumerate_canonical_paths

from stressdraw import (
    DegeneratePosition,
    Drawing,
    NotStOrientation,
    OuterPolygon,
    PlanarEmbedding,
    ZeroGap,
    count_paths,
    crossing_count,
    ensure_general_position,
    faces_convex,
    regular_polygon,
    rotate_drawing,
    spread_drawing,
    spread_pipeline,
    spread_weights,
    st_orient,
    target_x,
    tutte,
)

TARGET_RTOL = 1e-6


def _path_graph():
    emb = PlanarEmbedding(
        5,
        ((1,), (0, 2), (1, 3), (2, 4), (3,)),
        (0, 4),
    )
    poly = OuterPolygon((0, 4), {0: (0.0, 0.0), 4: (1.0, 0.0)})
    pos = {v: (v / 4 if v != 1 else 0.3, 0.0) for v in range(5)}
    return emb, poly, Drawing(pos, poly, 0.0)


def _house_graph():
    """Four vertices on a line; edge (1,2) belongs to neither extreme tree."""
    emb = PlanarEmbedding(
        4,
        ((1, 2), (0, 2, 3), (0, 1, 3), (1, 2)),
        (0, 3),
    )
    poly = OuterPolygon((0, 3), {0: (0.0, 0.0), 3: (3.0, 0.0)})
    pos = {0: (0.0, 0.0), 1: (1.0, 0.2), 2: (2.0, -0.1), 3: (3.0, 0.0)}
    return emb, poly, Drawing(pos, poly, 0.0)


def test_general_position_keeps_good_drawing(octahedron):
    poly = regular_polygon(octahedron.outer_face)
    # the symmetric frame itself has an x tie, so pre-rotate off the axis
    d = rotate_drawing(tutte(octahedron, poly), 0.3)
    fixed, angle = ensure_general_position(d)
    assert angle == 0.0
    assert fixed.positions == d.positions


def test_general_position_rotates_axis_aligned_square():
    emb = PlanarEmbedding(4, ((1, 3), (0, 2), (1, 3), (2, 0)), (0, 1, 2, 3))
    poly = regular_polygon(emb.outer_face)
    d = Drawing(dict(poly.positions), poly, 0.0)
    xs = sorted(p[0] for p in d.positions.values())
    assert any(abs(a - b) < 1e-12 for a, b in zip(xs, xs[1:]))
    fixed, angle = ensure_general_position(d)
    assert angle != 0.0
    fx = sorted(p[0] for p in fixed.positions.values())
    assert all(b - a > 1e-9 for a, b in zip(fx, fx[1:]))


def test_general_position_gives_up_on_coincident_points(k4):
    poly = regular_polygon(k4.outer_face)
    pos = dict(poly.positions)
    pos[3] = pos[k4.outer_face[0]]
    with pytest.raises(DegeneratePosition):
        ensure_general_position(Drawing(pos, poly, 0.0))


def test_st_orient_k4(k4):
    poly = regular_polygon(k4.outer_face)
    d, _ = ensure_general_position(tutte(k4, poly))
    o = st_orient(d, k4)
    assert set(o.order) == set(range(4))
    assert o.rank[o.source] == 0
    assert o.rank[o.sink] == 3
    for u, v in o.directed_edges():
        assert o.rank[u] < o.rank[v]
    assert o.out_deg(o.sink) == 0
    assert o.in_deg(o.source) == 0


def test_st_orient_acyclic_on_octahedron(octahedron):
    poly = regular_polygon(octahedron.outer_face)
    d, _ = ensure_general_position(tutte(octahedron, poly))
    o = st_orient(d, octahedron)
    assert sorted(o.rank.values()) == list(range(6))
    for u, v in o.directed_edges():
        assert o.rank[u] < o.rank[v]
    # every non-extreme vertex has both kinds of incident edges
    for v in range(6):
        if v not in (o.source, o.sink):
            assert o.out_deg(v) > 0 and o.in_deg(v) > 0


def test_st_orient_rejects_interior_extreme():
    emb = PlanarEmbedding(3, ((1,), (0, 2), (1,)), (0, 2))
    poly = OuterPolygon((0, 2), {0: (0.5, 0.0), 2: (1.0, 0.0)})
    d = Drawing({0: (0.5, 0.0), 1: (0.0, 0.0), 2: (1.0, 0.0)}, poly, 0.0)
    with pytest.raises(NotStOrientation):
        st_orient(d, emb)


def test_targets_single_interior():
    emb = PlanarEmbedding(3, ((1,), (0, 2), (1,)), (0, 2))
    poly = OuterPolygon((0, 2), {0: (0.0, 0.0), 2: (1.0, 0.0)})
    d = Drawing({0: (0.0, 0.0), 1: (0.3, 0.0), 2: (1.0, 0.0)}, poly, 0.0)
    o = st_orient(d, emb)
    t = target_x(o, poly)
    assert t[0] == 0.0 and t[2] == 1.0
    assert abs(t[1] - 0.5) < 1e-12


def test_targets_even_spacing_on_path():
    emb, poly, d = _path_graph()
    o = st_orient(d, emb)
    t = target_x(o, poly)
    want = {0: 0.0, 1: 0.25, 2: 0.5, 3: 0.75, 4: 1.0}
    for v, x in want.items():
        assert abs(t[v] - x) < 1e-12
    counts = count_paths(o)
    assert all(c == 4 for c in counts.values())


def test_house_graph_counts_frozen():
    emb, _, d = _house_graph()
    o = st_orient(d, emb)
    counts = count_paths(o)
    assert counts == {(0, 1): 3, (0, 2): 2, (1, 2): 1, (1, 3): 2, (2, 3): 3}
    assert counts == enumerate_canonical_paths(o)


def test_counts_match_enumeration_on_fixtures(k4, octahedron, two_ring_wheel):
    for emb in (k4, octahedron, two_ring_wheel):
        poly = regular_polygon(emb.outer_face)
        d, _ = ensure_general_position(tutte(emb, poly))
        o = st_orient(d, emb)
        assert count_paths(o) == enumerate_canonical_paths(o)


def test_count_sum_identity(octahedron):
    """Total of per-edge counts equals the total length of all canonical paths."""
    poly = regular_polygon(octahedron.outer_face)
    d, _ = ensure_general_position(tutte(octahedron, poly))
    o = st_orient(d, octahedron)
    counts = count_paths(o)
    lengths = 0
    for a, b in o.directed_edges():
        up = [a]
        while o.t1_parent.get(up[-1]) is not None:
            up.append(o.t1_parent[up[-1]])
        down = [b]
        while o.tn_parent.get(down[-1]) is not None:
            down.append(o.tn_parent[down[-1]])
        lengths += len(up) + len(down) - 1
    assert sum(counts.values()) == lengths


def test_spread_weights_formula():
    emb, poly, d = _house_graph()
    o = st_orient(d, emb)
    t = target_x(o, poly)
    counts = count_paths(o)
    w = spread_weights(o, t, counts)
    gap = t[1] - t[0]
    assert abs(w[(0, 1)] - 3.0 / gap) < 1e-12
    assert all(v > 0 for v in w.values())


def test_spread_weights_zero_gap():
    emb, poly, d = _house_graph()
    o = st_orient(d, emb)
    counts = count_paths(o)
    t = {0: 0.0, 1: 0.5, 2: 0.5, 3: 3.0}
    with pytest.raises(ZeroGap):
        spread_weights(o, t, counts)


def test_pipeline_hits_targets_exactly(k4, octahedron):
    for emb in (k4, octahedron):
        poly = regular_polygon(emb.outer_face)
        res = spread_pipeline(emb, poly)
        tol = TARGET_RTOL * poly.radius
        for v, x in res.targets.items():
            assert abs(res.frame.positions[v][0] - x) <= tol
        assert all(w > 0 for w in res.weights.values())


def test_pipeline_direction_rotates_frame(octahedron):
    poly = regular_polygon(octahedron.outer_face)
    a = spread_pipeline(octahedron, poly, direction=0.0)
    b = spread_pipeline(octahedron, poly, direction=math.pi / 2)
    assert a.angle != b.angle
    # final drawings stay planar and convex either way
    for res in (a, b):
        assert crossing_count(res.drawing, octahedron) == 0
        assert faces_convex(res.drawing, octahedron)


def test_spread_drawing_planar_on_generated():
    from stressdraw import generate_planar

    for seed in (21, 22, 23):
        emb = generate_planar(16, 36, seed=seed)
        poly = regular_polygon(emb.outer_face)
        w, d = spread_drawing(emb, poly)
        assert crossing_count(d, emb) == 0
        assert faces_convex(d, emb)
        assert all(v > 0 for v in w.values())


def test_rotate_drawing_round_trip(octahedron):
    poly = regular_polygon(octahedron.outer_face)
    d = tutte(octahedron, poly)
    r = rotate_drawing(rotate_drawing(d, 0.7), -0.7)
    for v in d.positions:
        assert abs(r.positions[v][0] - d.positions[v][0]) < 1e-12
        assert abs(r.positions[v][1] - d.positions[v][1]) < 1e-12
