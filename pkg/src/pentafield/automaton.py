"""Grey-growth automaton: white dominoes with exactly 3 or 4 grey neighbours
turn grey, all at once, every tick."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.spatial import ConvexHull

from .lattice import AdjacencyKind, TileId, Window, neighbors, tile_center

YELLOW_COUNT = 3
VIOLET_COUNT = 4


class RegionTooSmall(RuntimeError):
    """Growth reached the boundary of the preallocated working region."""


@dataclass(frozen=True)
class AutomatonState:
    grey: frozenset[TileId]
    time: int = 1


@dataclass(frozen=True)
class StepReport:
    time: int
    yellow: frozenset[TileId]
    violet: frozenset[TileId]

    @property
    def Y(self) -> int:
        return len(self.yellow)

    @property
    def V(self) -> int:
        return len(self.violet)

    @property
    def C(self) -> int:
        return self.Y + self.V


def step(
    st: AutomatonState, kind: AdjacencyKind = AdjacencyKind.FULL
) -> tuple[AutomatonState, StepReport]:
    counts: dict[TileId, int] = {}
    for g in st.grey:
        for u in neighbors(g, kind):
            if u not in st.grey:
                counts[u] = counts.get(u, 0) + 1
    yellow = frozenset(u for u, n in counts.items() if n == YELLOW_COUNT)
    violet = frozenset(u for u, n in counts.items() if n == VIOLET_COUNT)
    report = StepReport(st.time, yellow, violet)
    return AutomatonState(st.grey | yellow | violet, st.time + 1), report


class Region:
    """Flat-indexed block window with a neighbour table for vectorised steps.

    Index ``len(self)`` is a sentinel that is never grey.
    """

    def __init__(self, w: Window, kind: AdjacencyKind = AdjacencyKind.FULL):
        self.window = w
        self.kind = kind
        side = w.side
        ci, cj = w.center
        self.i0, self.j0 = ci - w.radius, cj - w.radius
        self.side = side
        n = 2 * side * side
        self.size = n
        jj, ii, ss = np.meshgrid(np.arange(side), np.arange(side), np.arange(2), indexing="ij")
        ii, jj, ss = ii.ravel(), jj.ravel(), ss.ravel()
        gi, gj = ii + self.i0, jj + self.j0
        parity = (gi + gj) % 2
        self.boundary = (ii == 0) | (jj == 0) | (ii == side - 1) | (jj == side - 1)
        # per (parity, slot) offset table, same order as lattice.neighbors
        deg = len(neighbors(TileId(0, 0, 0), kind))
        nbr = np.full((n, deg), n, dtype=np.int64)
        for par in (0, 1):
            for slot in (0, 1):
                sel = np.nonzero((parity == par) & (ss == slot))[0]
                proto = TileId(par, 0, slot)
                for k, u in enumerate(neighbors(proto, kind)):
                    di, dj = u.i - proto.i, u.j - proto.j
                    ni, nj = ii[sel] + di, jj[sel] + dj
                    ok = (ni >= 0) & (nj >= 0) & (ni < side) & (nj < side)
                    idx = (nj * side + ni) * 2 + u.slot
                    nbr[sel[ok], k] = idx[ok]
        self.nbr = nbr

    def __len__(self) -> int:
        return self.size

    def index(self, t: TileId) -> int:
        i, j = t.i - self.i0, t.j - self.j0
        if not (0 <= i < self.side and 0 <= j < self.side):
            raise KeyError(t)
        return (j * self.side + i) * 2 + t.slot

    def tile(self, k: int) -> TileId:
        cell, slot = divmod(int(k), 2)
        j, i = divmod(cell, self.side)
        return TileId(i + self.i0, j + self.j0, slot)

    def mask(self, tiles: Iterable[TileId]) -> np.ndarray:
        m = np.zeros(self.size + 1, dtype=bool)
        for t in tiles:
            m[self.index(t)] = True
        return m

    def tiles_of(self, m: np.ndarray) -> frozenset[TileId]:
        return frozenset(self.tile(k) for k in np.nonzero(m[: self.size])[0])


@dataclass
class AutomatonRun:
    """Sequences V, Y, C indexed from time 1; ``born[k]`` is the tick at which
    region tile ``k`` turned grey (0 for seed tiles, -1 if never)."""

    V: list[int]
    Y: list[int]
    region: Region
    born: np.ndarray
    frames: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = field(default_factory=list)

    @property
    def C(self) -> list[int]:
        return [v + y for v, y in zip(self.V, self.Y)]

    @property
    def ticks(self) -> int:
        return len(self.V)

    def grey_at(self, s: int) -> frozenset[TileId]:
        """Grey set at time ``s`` (before that tick's painting)."""
        m = (self.born >= 0) & (self.born < s)
        return self.region.tiles_of(np.append(m, False))

    def state(self) -> AutomatonState:
        return AutomatonState(self.grey_at(self.ticks + 1), self.ticks + 1)

    def csv(self) -> str:
        rows = ["s,V,Y,C"]
        rows += [f"{s},{v},{y},{v + y}" for s, (v, y) in enumerate(zip(self.V, self.Y), 1)]
        return "\n".join(rows) + "\n"


def default_region(seed: Iterable[TileId], T: int) -> Window:
    seed = list(seed)
    if not seed:
        return Window(T + 2)
    ci = (min(t.i for t in seed) + max(t.i for t in seed)) // 2
    cj = (min(t.j for t in seed) + max(t.j for t in seed)) // 2
    reach = max(max(abs(t.i - ci), abs(t.j - cj)) for t in seed)
    return Window(reach + T + 2, (ci, cj))


def run(
    seed: Iterable[TileId],
    T: int,
    region: Window | None = None,
    kind: AdjacencyKind = AdjacencyKind.FULL,
    keep_frames: bool = False,
) -> AutomatonRun:
    """Run ``T`` ticks from ``seed`` on a fixed working region.

    Raises :class:`RegionTooSmall` as soon as a boundary tile of the region
    turns grey, since from then on counts near the edge are unreliable.
    """
    if T < 1:
        raise ValueError("T must be >= 1")
    seed = list(seed)
    w = region or default_region(seed, T)
    reg = Region(w, kind)
    grey = reg.mask(seed)
    born = np.full(reg.size, -1, dtype=np.int32)
    born[grey[:-1]] = 0
    if np.any(grey[:-1] & reg.boundary):
        raise RegionTooSmall("seed touches the region boundary")
    V, Y, frames = [], [], []
    nbr = reg.nbr
    # only tiles near the grey cluster can change; track a block bounding box
    for s in range(1, T + 1):
        counts = grey[nbr].sum(axis=1, dtype=np.int8)
        white = ~grey[:-1]
        yellow = white & (counts == YELLOW_COUNT)
        violet = white & (counts == VIOLET_COUNT)
        Y.append(int(yellow.sum()))
        V.append(int(violet.sum()))
        if keep_frames:
            frames.append((grey[:-1].copy(), yellow, violet))
        new = yellow | violet
        grey[:-1] |= new
        born[new] = s
        if np.any(new & reg.boundary):
            raise RegionTooSmall(f"growth reached the region boundary at tick {s}")
    return AutomatonRun(V, Y, reg, born, frames)


def detect_period(seq: Sequence[int], burn_in: int, max_fraction: int = 3):
    """Smallest period of the first differences of ``seq`` from time ``burn_in``.

    ``seq[0]`` is the value at time 1, so the differences examined are
    ``seq(s+1) - seq(s)`` for ``s >= burn_in``.  A period ``p`` is accepted
    only if ``p <= len(diffs) / max_fraction``.  Returns ``(p, values)`` or
    None.
    """
    if not 1 <= burn_in < len(seq):
        raise ValueError("burn_in must index into seq")
    diffs = [b - a for a, b in zip(seq[burn_in - 1 :], seq[burn_in:])]
    for p in range(1, len(diffs) // max_fraction + 1):
        if all(diffs[k] == diffs[k + p] for k in range(len(diffs) - p)):
            return p, tuple(diffs[:p])
    return None


OCTAGON_CONSTANT = 2 * math.sin(math.pi / 8)


@dataclass
class ShapeMetrics:
    hull: np.ndarray  # hull vertices, counter-clockwise
    facets: list[float]  # lengths of the merged hull facets, counter-clockwise
    corners: np.ndarray  # polygon corners from the major facets (empty if < 3)
    side_lengths: list[float]  # distances between consecutive corners
    circumradius: float  # mean distance from the corner centroid to the corners
    ratio: float  # longest / shortest side
    estimate: float | None  # mean side / circumradius, None if not an octagon

    @property
    def error(self) -> float | None:
        if self.estimate is None:
            return None
        return abs(self.estimate - OCTAGON_CONSTANT) / OCTAGON_CONSTANT


FACET_TURN = math.radians(20)


def shape_metrics(
    points: np.ndarray | Iterable[TileId], min_side: float = 0.05, turn: float = FACET_TURN
) -> ShapeMetrics:
    """Polygon fit of the convex hull of a grey cluster.

    Consecutive hull edges are merged into one facet while their direction
    stays within ``turn`` of the facet's first edge.  Facets shorter than
    ``min_side`` times the perimeter are treated as rounding at a corner;
    the corners are the intersections of the lines through consecutive major
    facets.  With exactly eight major facets the estimate is mean side over
    mean corner radius, which is 2 sin(pi/8) for a regular octagon.
    """
    pts = _as_points(points)
    if len(pts) < 3:
        raise ValueError("degenerate hull: fewer than 3 points")
    hull = ConvexHull(pts)
    if hull.volume <= 0:
        raise ValueError("degenerate hull: zero area")
    verts = pts[hull.vertices]
    edges = np.roll(verts, -1, axis=0) - verts
    angles = np.arctan2(edges[:, 1], edges[:, 0])
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    perimeter = float(lengths.sum())

    # start at the sharpest turn so no facet wraps around the list end
    turns = (angles - np.roll(angles, 1)) % (2 * math.pi)
    k0 = int(np.argmax(turns))
    facets: list[list[int]] = []
    for k in list(range(k0, len(edges))) + list(range(k0)):
        if facets:
            d = (angles[k] - angles[facets[-1][0]]) % (2 * math.pi)
            if d <= turn:
                facets[-1].append(k)
                continue
        facets.append([k])
    facet_len = [float(lengths[f].sum()) for f in facets]

    major = [f for f, n in zip(facets, facet_len) if n >= min_side * perimeter]
    corners = []
    if len(major) >= 3:
        lines = []
        for f in major:
            a, b = verts[f[0]], verts[(f[-1] + 1) % len(verts)]
            lines.append((a, b - a))
        for (p1, d1), (p2, d2) in zip(lines, lines[1:] + lines[:1]):
            det = d1[0] * d2[1] - d1[1] * d2[0]
            t = ((p2[0] - p1[0]) * d2[1] - (p2[1] - p1[1]) * d2[0]) / det
            corners.append(p1 + t * d1)
    corners = np.array(corners).reshape(-1, 2)
    if len(corners):
        sides = [float(np.hypot(*(b - a))) for a, b in zip(corners, np.roll(corners, -1, axis=0))]
        centre = corners.mean(axis=0)
        circumradius = float(np.mean(np.hypot(*(corners - centre).T)))
        ratio = max(sides) / min(sides)
    else:
        sides, circumradius, ratio = [], 0.0, math.inf
    estimate = float(np.mean(sides) / circumradius) if len(corners) == 8 else None
    return ShapeMetrics(verts, facet_len, corners, sides, circumradius, ratio, estimate)


def _as_points(points) -> np.ndarray:
    if isinstance(points, np.ndarray):
        return points.astype(float)
    return np.array([tile_center(t) for t in points], dtype=float)
