"""Four-colour fields, grey growth and crystal structure on the basketweave
domino tiling, plus the cube-molecule geometry checks."""

from .coloring import (
    ClassificationReport,
    Color,
    PartialColoring,
    Verdict,
    WindowBarren,
    classify,
    enumerate_colorings,
    exact_candidates,
    field,
    is_perfect_within,
    propagate,
    validate_seed,
)
from .lattice import (
    AdjacencyKind,
    LatticeSymmetry,
    TileId,
    UnitSquare,
    Window,
    coordination_sequence,
    neighbors,
    point_symmetries,
    tiles_in_window,
)
from .seeds import PERFECT_SEED, STRIP_SEED

__all__ = [
    "AdjacencyKind",
    "ClassificationReport",
    "Color",
    "STRIP_SEED",
    "PERFECT_SEED",
    "LatticeSymmetry",
    "PartialColoring",
    "TileId",
    "UnitSquare",
    "Verdict",
    "Window",
    "WindowBarren",
    "classify",
    "coordination_sequence",
    "enumerate_colorings",
    "exact_candidates",
    "field",
    "is_perfect_within",
    "neighbors",
    "point_symmetries",
    "propagate",
    "tiles_in_window",
    "validate_seed",
]
