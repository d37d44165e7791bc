"""Coordinates, adjacency and symmetries of the basketweave domino tiling.

The plane is cut into 2x2 blocks ``B(i, j)`` covering the unit squares
``{2i, 2i+1} x {2j, 2j+1}``.  Blocks with ``i + j`` even hold two horizontal
dominoes (slot 0 bottom, slot 1 top); blocks with ``i + j`` odd hold two
vertical dominoes (slot 0 left, slot 1 right).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class TileId(NamedTuple):
    i: int
    j: int
    slot: int

    def __repr__(self) -> str:
        return f"T({self.i},{self.j},{self.slot})"


class UnitSquare(NamedTuple):
    x: int
    y: int


class AdjacencyKind(enum.Enum):
    FULL = "full"
    EDGE = "edge"


def is_horizontal(t: TileId) -> bool:
    return (t.i + t.j) % 2 == 0


def tile_of_square(s: UnitSquare | tuple[int, int]) -> TileId:
    x, y = s
    i, j = x // 2, y // 2
    if (i + j) % 2 == 0:
        return TileId(i, j, y - 2 * j)
    return TileId(i, j, x - 2 * i)


def squares_of_tile(t: TileId) -> tuple[UnitSquare, UnitSquare]:
    i, j, s = t
    if (i + j) % 2 == 0:
        return UnitSquare(2 * i, 2 * j + s), UnitSquare(2 * i + 1, 2 * j + s)
    return UnitSquare(2 * i + s, 2 * j), UnitSquare(2 * i + s, 2 * j + 1)


def tile_center(t: TileId) -> tuple[float, float]:
    """Center of the domino in unit-square coordinates."""
    a, b = squares_of_tile(t)
    return (a.x + b.x + 1) / 2, (a.y + b.y + 1) / 2


# (di, dj, slot) offsets keyed by (block parity, slot).  Derived once from
# the rectangle geometry; tests re-derive them by rasterisation.
_EDGE_OFFSETS = {
    (0, 0): ((-1, 0, 1), (0, -1, 0), (0, -1, 1), (0, 0, 1), (1, 0, 0)),
    (0, 1): ((-1, 0, 1), (0, 0, 0), (0, 1, 0), (0, 1, 1), (1, 0, 0)),
    (1, 0): ((-1, 0, 0), (-1, 0, 1), (0, -1, 1), (0, 0, 1), (0, 1, 0)),
    (1, 1): ((0, -1, 1), (0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 0, 1)),
}
_CORNER_OFFSETS = {
    (0, 0): ((-1, -1, 1), (1, -1, 1)),
    (0, 1): ((-1, 1, 0), (1, 1, 0)),
    (1, 0): ((-1, -1, 1), (-1, 1, 1)),
    (1, 1): ((1, -1, 0), (1, 1, 0)),
}
_FULL_OFFSETS = {k: _EDGE_OFFSETS[k] + _CORNER_OFFSETS[k] for k in _EDGE_OFFSETS}


def neighbors(t: TileId, kind: AdjacencyKind = AdjacencyKind.FULL) -> list[TileId]:
    table = _FULL_OFFSETS if kind is AdjacencyKind.FULL else _EDGE_OFFSETS
    i, j, s = t
    return [TileId(i + di, j + dj, ss) for di, dj, ss in table[((i + j) % 2, s)]]


@dataclass(frozen=True)
class Window:
    """Square of ``(2r+1) x (2r+1)`` blocks centred on block ``center``."""

    radius: int
    center: tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        if self.radius < 0:
            raise ValueError(f"window radius must be >= 0, got {self.radius}")

    @property
    def side(self) -> int:
        return 2 * self.radius + 1

    def __len__(self) -> int:
        return 2 * self.side**2

    def __contains__(self, t: object) -> bool:
        if not isinstance(t, tuple) or len(t) != 3:
            return False
        ci, cj = self.center
        return abs(t[0] - ci) <= self.radius and abs(t[1] - cj) <= self.radius

    def tiles(self) -> list[TileId]:
        return tiles_in_window(self)

    def on_boundary(self, t: TileId) -> bool:
        ci, cj = self.center
        return max(abs(t.i - ci), abs(t.j - cj)) == self.radius


def tiles_in_window(w: Window) -> list[TileId]:
    """Row-major by block (j outer, i inner), slot ascending."""
    ci, cj = w.center
    r = w.radius
    return [
        TileId(i, j, s)
        for j in range(cj - r, cj + r + 1)
        for i in range(ci - r, ci + r + 1)
        for s in (0, 1)
    ]


def bfs_distances(
    start: Iterable[TileId], kind: AdjacencyKind, max_dist: int
) -> dict[TileId, int]:
    dist = {t: 0 for t in start}
    queue = deque(dist)
    while queue:
        t = queue.popleft()
        d = dist[t]
        if d == max_dist:
            continue
        for u in neighbors(t, kind):
            if u not in dist:
                dist[u] = d + 1
                queue.append(u)
    return dist


def coordination_sequence(t0: TileId, kind: AdjacencyKind, s_max: int) -> list[int]:
    if s_max < 0:
        raise ValueError("s_max must be >= 0")
    counts = [0] * (s_max + 1)
    for d in bfs_distances([t0], kind, s_max).values():
        counts[d] += 1
    return counts


# Point operations of the square lattice as integer matrices (a, b, c, d)
# acting on continuous plane coordinates: (X, Y) -> (aX + bY, cX + dY).
POINT_OPS: dict[str, tuple[int, int, int, int]] = {
    "id": (1, 0, 0, 1),
    "rot90": (0, -1, 1, 0),
    "rot180": (-1, 0, 0, -1),
    "rot270": (0, 1, -1, 0),
    "flip_x": (-1, 0, 0, 1),
    "flip_y": (1, 0, 0, -1),
    "diag": (0, 1, 1, 0),
    "antidiag": (0, -1, -1, 0),
}


@dataclass(frozen=True)
class LatticeSymmetry:
    """Isometry ``P -> M P + offset`` of the plane, offset in unit squares.

    ``M`` is one of :data:`POINT_OPS`.  Only combinations that map dominoes
    onto dominoes are symmetries; use :meth:`is_valid` to check.
    """

    offset: tuple[int, int] = (0, 0)
    op: str = "id"

    @classmethod
    def translation(cls, a: int, b: int) -> "LatticeSymmetry":
        """Translation by ``(a, b)`` blocks; ``a + b`` must be even."""
        if (a + b) % 2:
            raise ValueError(f"block translation ({a},{b}) does not preserve parity")
        return cls((2 * a, 2 * b), "id")

    def map_square(self, s: tuple[int, int]) -> UnitSquare:
        a, b, c, d = POINT_OPS[self.op]
        # map the square's centre, then back to its lower-left corner
        cx, cy = 2 * s[0] + 1, 2 * s[1] + 1
        nx = a * cx + b * cy + 2 * self.offset[0]
        ny = c * cx + d * cy + 2 * self.offset[1]
        return UnitSquare((nx - 1) // 2, (ny - 1) // 2)

    def apply_raw(self, t: TileId) -> TileId | None:
        p, q = (tile_of_square(self.map_square(s)) for s in squares_of_tile(t))
        return p if p == q else None

    def apply(self, t: TileId) -> TileId:
        u = self.apply_raw(t)
        if u is None:
            raise ValueError(f"{self} does not map {t} onto a single domino")
        return u

    def is_valid(self, probe_radius: int = 3) -> bool:
        tiles = tiles_in_window(Window(probe_radius))
        return all(self.apply_raw(t) is not None for t in tiles)


def apply_symmetry(t: TileId, g: LatticeSymmetry) -> TileId:
    return g.apply(t)


def point_symmetries() -> list[LatticeSymmetry]:
    """Symmetries fixing the origin block up to a small unit-square offset.

    Every symmetry of the tiling is one of these composed with a parity
    preserving block translation.
    """
    found = []
    for op in POINT_OPS:
        for dx in range(4):
            for dy in range(4):
                g = LatticeSymmetry((dx, dy), op)
                if g.is_valid():
                    found.append(g)
                    break
            else:
                continue
            break
    return found


def iter_window_squares(w: Window) -> Iterator[UnitSquare]:
    for t in tiles_in_window(w):
        yield from squares_of_tile(t)
