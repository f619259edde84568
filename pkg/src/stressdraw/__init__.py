"""Convex planar drawings of 3-connected planar graphs via weighted stress.

Pin the outer face to a convex polygon, give every edge a positive weight,
and place each interior vertex at the weighted average of its neighbors.
The weight systems here trade the classic unit-weight drawing's exponential
shrinkage for bounded edge-length ratios: directional spreads from path
counts, their convex morphs, depth-decaying tree weights, and a fully
uniform x-spacing with a constructed outer polygon.
"""
from .errors import (
    BadParams,
    DegeneratePosition,
    EdgeSetMismatch,
    EulerViolation,
    GenerationStalled,
    InfeasibleParams,
    InputError,
    InvalidEmbedding,
    MalformedRotation,
    NonPositiveWeight,
    NotStOrientation,
    NotTriangulation,
    NoValidTopBottom,
    NumericError,
    PreconditionError,
    ResidualExceeded,
    SingularSystem,
    StressDrawError,
    ZeroGap,
    ZeroLengthEdge,
)
from .graph import (
    Edge,
    Face,
    PlanarEmbedding,
    edge_key,
    from_dict,
    generate_planar,
    load_graph,
    save_graph,
    to_dict,
    traverse_faces,
    validate,
    validate_three_connected,
    worst_case_graph,
)
from .metrics import (
    DrawingMetrics,
    compute_metrics,
    crossing_count,
    edge_length_ratio,
    faces_convex,
    metrics_json,
)
from .morph import (
    KaleidoscopeRow,
    best_row,
    kaleidoscope,
    morph_weights,
    rows_to_csv,
    worst_row,
    xy_morph,
)
from .solver import (
    Drawing,
    OuterPolygon,
    equilibrium_residual,
    regular_polygon,
    solve_stress,
    tutte,
    unit_weights,
)
from .spread import (
    SpreadResult,
    StOrientation,
    count_paths,
    ensure_general_position,
    rotate_drawing,
    spread_drawing,
    spread_pipeline,
    spread_weights,
    st_orient,
    target_x,
)
from .svg import render_svg
from .treespread import (
    SchnyderWood,
    best_r,
    bfs_depths,
    bfs_spread,
    depth_weights,
    schnyder_depths,
    schnyder_spread,
    schnyder_wood,
)
from .uniform import (
    UniformResult,
    convex_outer_placement,
    st_indices,
    uniform_drawing,
    uniform_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "BadParams",
    "DegeneratePosition",
    "Drawing",
    "DrawingMetrics",
    "Edge",
    "EdgeSetMismatch",
    "EulerViolation",
    "Face",
    "GenerationStalled",
    "InfeasibleParams",
    "InputError",
    "InvalidEmbedding",
    "KaleidoscopeRow",
    "MalformedRotation",
    "NoValidTopBottom",
    "NonPositiveWeight",
    "NotStOrientation",
    "NotTriangulation",
    "NumericError",
    "OuterPolygon",
    "PlanarEmbedding",
    "PreconditionError",
    "ResidualExceeded",
    "SchnyderWood",
    "SingularSystem",
    "SpreadResult",
    "StOrientation",
    "StressDrawError",
    "UniformResult",
    "ZeroGap",
    "ZeroLengthEdge",
    "best_r",
    "best_row",
    "bfs_depths",
    "bfs_spread",
    "compute_metrics",
    "convex_outer_placement",
    "count_paths",
    "crossing_count",
    "depth_weights",
    "edge_key",
    "edge_length_ratio",
    "ensure_general_position",
    "equilibrium_residual",
    "faces_convex",
    "from_dict",
    "generate_planar",
    "kaleidoscope",
    "load_graph",
    "metrics_json",
    "morph_weights",
    "regular_polygon",
    "render_svg",
    "rotate_drawing",
    "rows_to_csv",
    "save_graph",
    "schnyder_depths",
    "schnyder_spread",
    "schnyder_wood",
    "solve_stress",
    "spread_drawing",
    "spread_pipeline",
    "spread_weights",
    "st_indices",
    "st_orient",
    "target_x",
    "to_dict",
    "traverse_faces",
    "tutte",
    "uniform_drawing",
    "uniform_pipeline",
    "unit_weights",
    "validate",
    "validate_three_connected",
    "worst_case_graph",
    "worst_row",
    "xy_morph",
]
