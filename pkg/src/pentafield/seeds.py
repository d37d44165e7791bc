"""Reference seeds, checked end to end by the test suite."""

from .coloring import Color
from .lattice import TileId

R, B, Y, G = Color.R, Color.B, Color.Y, Color.G

# Five-tile perfect seed.  The tile footprint is the only one (up to lattice
# symmetry) whose grey-growth run reproduces the reference V/Y sequences.
PERFECT_SEED = {
    TileId(-1, -1, 0): R,
    TileId(1, -1, 0): B,
    TileId(-1, 0, 0): Y,
    TileId(0, 0, 0): G,
    TileId(1, 1, 0): R,
}

# Forcing order around the seed: a is forced first, b and d next, c after.
PERFECT_LABELS = {
    "a": TileId(-1, -1, 1),
    "b": TileId(0, -1, 0),
    "c": TileId(-2, 0, 0),
    "d": TileId(-1, 0, 1),
}

# Fertile seed whose field is a diagonal strip with an R/G rim.
STRIP_SEED = {
    TileId(-1, -1, 0): B,
    TileId(0, 0, 0): Y,
    TileId(1, 0, 1): R,
    TileId(1, 1, 0): B,
}
STRIP_TILE_A = TileId(2, 2, 0)
