"""Static checks of the cube-molecule model.

Each unit cell holds a cube of edge 1/sqrt(2), centred in the cell with its
top face horizontal.  The four space diagonals carry the colours R, G, B, Y.
In the reference (body) frame the top-face vertices lie on the x and y axes;
the fixed mounting turns the molecule by pi/6 about the vertical axis, so the
projected top vertices sit at angles pi/6 + k*pi/2, radius 1/2.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coloring import Color

EDGE = 1 / math.sqrt(2)
HALF = EDGE / 2
MOUNT_ANGLE = math.pi / 6
TOP_RADIUS = 0.5
TOL = 1e-9

# diagonal k joins body vertex (top, angle k*pi/2) to its antipode
DIAGONAL_COLORS = (Color.R, Color.G, Color.B, Color.Y)


def rot_z(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def rot_x(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def _body_vertices() -> tuple[np.ndarray, tuple[Color, ...]]:
    top = [
        (TOP_RADIUS * math.cos(k * math.pi / 2), TOP_RADIUS * math.sin(k * math.pi / 2), HALF)
        for k in range(4)
    ]
    pts = np.array(top + [(-x, -y, -z) for x, y, z in top])
    return pts, DIAGONAL_COLORS + DIAGONAL_COLORS


BODY_VERTICES, VERTEX_COLORS = _body_vertices()
MOUNT = rot_z(MOUNT_ANGLE)


@lru_cache(maxsize=1)
def cube_rotations() -> tuple[np.ndarray, ...]:
    """The 24 rotations mapping the body-frame cube onto itself."""
    to_axes = rot_z(math.pi / 4)  # body frame -> frame with axis-aligned faces
    out = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            m = np.zeros((3, 3))
            for row, (col, sg) in enumerate(zip(perm, signs)):
                m[row, col] = sg
            if np.linalg.det(m) > 0:
                out.append(to_axes.T @ m @ to_axes)
    return tuple(out)


@dataclass(frozen=True)
class Molecule:
    center: tuple[float, float]
    orientation: int = 0  # index into cube_rotations()

    @property
    def matrix(self) -> np.ndarray:
        return MOUNT @ cube_rotations()[self.orientation]


@dataclass(frozen=True)
class ProjectedVertex:
    x: float
    y: float
    color: Color


def mount_offsets() -> tuple[float, float]:
    """Distances ``(p, q)`` from a projected top vertex to the two nearest cell edges."""
    p = 0.5 - 0.5 * math.cos(MOUNT_ANGLE)
    q = 0.5 - 0.5 * math.sin(MOUNT_ANGLE)
    return p, q


def _top_face(world: np.ndarray) -> list[tuple[int, np.ndarray]]:
    pts = (world @ BODY_VERTICES.T).T
    top = [(k, p) for k, p in enumerate(pts) if p[2] > TOL]
    if len(top) != 4 or any(abs(p[2] - HALF) > TOL for _, p in top):
        raise ValueError("orientation does not keep the top face horizontal")
    for _, p in top:
        a = (math.atan2(p[1], p[0]) - MOUNT_ANGLE) % (math.pi / 2)
        if min(a, math.pi / 2 - a) > 1e-7:
            raise ValueError("orientation does not keep the mounting angle")
    return top


def top_face_projection(m: Molecule | np.ndarray, center=(0.0, 0.0)) -> list[ProjectedVertex]:
    """Projected top vertices, ordered by angle from the mounting direction."""
    if isinstance(m, Molecule):
        world, center = m.matrix, m.center
    else:
        world = m
    top = _top_face(world)
    top.sort(key=lambda kp: (math.atan2(kp[1][1], kp[1][0]) - MOUNT_ANGLE + 1e-7) % (2 * math.pi))
    return [
        ProjectedVertex(float(center[0] + p[0]), float(center[1] + p[1]), VERTEX_COLORS[k])
        for k, p in top
    ]


def top_pattern(m: Molecule | np.ndarray) -> tuple[Color, ...]:
    """Colours of the top face read counter-clockwise from angle pi/6."""
    return tuple(v.color for v in top_face_projection(m))


def edge_distances(v: ProjectedVertex, center=(0.0, 0.0)) -> tuple[float, float]:
    """Distances to the nearest vertical and horizontal edges of the unit cell."""
    dx = 0.5 - abs(v.x - center[0])
    dy = 0.5 - abs(v.y - center[1])
    return dx, dy


def orientation_of(world: np.ndarray) -> int:
    """Index of the allowed orientation nearest ``world`` (raises if none within 1e-9)."""
    errs = [float(np.abs(world - MOUNT @ g).max()) for g in cube_rotations()]
    k = int(np.argmin(errs))
    if errs[k] > TOL:
        raise ValueError(f"not an allowed orientation (nearest off by {errs[k]:.3g})")
    return k


def phase_shift_matrix(tilt: float = math.pi) -> np.ndarray:
    """Turn about the vertical by pi/6 + pi, tilt about the left-to-right axis,
    turn back by -pi/6; vertical turns are taken clockwise seen from above.

    Only a half-turn tilt returns the molecule to an allowed orientation.
    """
    return rot_z(math.pi / 6) @ rot_x(tilt) @ rot_z(-(math.pi / 6 + math.pi)) @ MOUNT


def phase_shift_permutation(tilt: float = math.pi) -> dict[Color, Color]:
    """Colour moved into each top-face position, as ``{old: new}`` pairs."""
    before = top_pattern(MOUNT)
    after = top_pattern(phase_shift_matrix(tilt))
    return {a: b for a, b in zip(before, after)}


def transposition(perm: dict[Color, Color]) -> tuple[Color, ...]:
    """Colours moved by ``perm``, sorted."""
    return tuple(sorted(c for c, d in perm.items() if c != d))


@dataclass(frozen=True)
class FreeRotation:
    edge: float
    space_diagonal: float
    edge_threshold: float
    can_rotate_freely: bool


def free_rotation_bound() -> FreeRotation:
    """A cube spins freely in the unit cell iff its space diagonal fits, i.e.
    its edge is at most 1/sqrt(3)."""
    diag = EDGE * math.sqrt(3)
    return FreeRotation(EDGE, diag, 1 / math.sqrt(3), diag <= 1 + TOL)


def _vertices(config: list[Molecule]) -> list[tuple[int, ProjectedVertex]]:
    return [(n, v) for n, m in enumerate(config) for v in top_face_projection(m)]


def min_same_color_distance(config: list[Molecule]) -> float:
    best = math.inf
    verts = _vertices(config)
    for (n1, v1), (n2, v2) in itertools.combinations(verts, 2):
        if n1 != n2 and v1.color == v2.color:
            best = min(best, math.hypot(v1.x - v2.x, v1.y - v2.y))
    return best


def satisfies_distance_rule(config: list[Molecule]) -> bool:
    return min_same_color_distance(config) >= 1 - TOL


FOUR_CELL_CENTERS = ((-0.5, -0.5), (0.5, -0.5), (-0.5, 0.5), (0.5, 0.5))


@lru_cache(maxsize=1)
def four_cell_configuration() -> tuple[Molecule, ...]:
    """Four molecules around the origin obeying the same-colour distance rule.

    The lower-left molecule is unrotated; the others take the first
    orientations (in :func:`cube_rotations` order) that satisfy the rule.
    """
    n = len(cube_rotations())
    for rest in itertools.product(range(n), repeat=3):
        config = [Molecule(c, o) for c, o in zip(FOUR_CELL_CENTERS, (0,) + rest)]
        if satisfies_distance_rule(config):
            return tuple(config)
    raise RuntimeError("no four-cell configuration satisfies the distance rule")


@dataclass
class FourCellReport:
    a: ProjectedVertex
    b: ProjectedVertex
    c: ProjectedVertex
    d: ProjectedVertex
    e: ProjectedVertex
    rectangle: tuple[float, float]  # sides of the rectangle spanned by a and the centre

    def lengths(self) -> tuple[float, float, float, float]:
        def dist(u):
            return math.hypot(u.x - self.a.x, u.y - self.a.y)

        return dist(self.b), dist(self.c), dist(self.d), dist(self.e)


def four_cell_distances(config: list[Molecule] | None = None) -> FourCellReport:
    """Point ``a`` is the lower-left molecule's vertex nearest the shared
    corner.  ``b`` and ``c`` are the first two vertices of other cells in the
    second distance shell around ``a`` (``c`` lies in the diagonal cell).
    ``d`` and ``e`` are the nearest vertices sharing a's colour."""
    config = list(config or four_cell_configuration())
    verts = _vertices(config)
    own = [v for n, v in verts if n == 0]
    a = min(own, key=lambda v: math.hypot(v.x, v.y))

    def dist(v):
        return math.hypot(v.x - a.x, v.y - a.y)

    others = sorted((v for n, v in verts if n != 0), key=lambda v: (round(dist(v), 9), v.x, v.y))
    shells = sorted({round(dist(v), 9) for v in others})
    if len(shells) < 2:
        raise ValueError("configuration too small")
    b, c = [v for v in others if round(dist(v), 9) == shells[1]][:2]
    same = [v for v in others if v.color == a.color]
    if len(same) < 2:
        raise ValueError(f"only {len(same)} vertices share the colour of a")
    d, e = same[:2]
    rect = (abs(a.x), abs(a.y))
    return FourCellReport(a, b, c, d, e, rect)
