"""Crystal decomposition of a coloured window.

Dominoes are grouped into super-tiles: the four dominoes meeting at a block
corner.  Corners ``(2i, 2j)`` with ``i + j`` of one fixed parity are used, so
every domino lies in exactly one super-tile and every super-tile shows all
four colours.  Super-tiles sit on a square grid whose edge neighbours are the
block offsets ``(+-1, +-1)``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .coloring import Color
from .lattice import TileId, Window, tile_of_square, tiles_in_window

# Block offset selecting the corner sublattice.  Chosen by scanning all four
# offsets on the five-tile perfect field; this one yields five patterns.
CANONICAL_ANCHOR = (1, 0)

# Translation vectors are searched within this many super-tiles.
MERGE_RADIUS = 3
MIN_REPEATS = 3
MAX_1D_WIDTH = 3
SIDE_FRACTION = 0.5

GRID_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


class IncompleteColoring(ValueError):
    pass


@dataclass(frozen=True)
class SuperTile:
    corner: tuple[int, int]  # block indices (i, j) of the corner point (2i, 2j)
    members: tuple[TileId, TileId, TileId, TileId]  # SW, SE, NW, NE
    pattern: tuple[Color, Color, Color, Color]

    @property
    def grid(self) -> tuple[int, int]:
        return corner_to_grid(self.corner)


def corner_to_grid(corner: tuple[int, int]) -> tuple[int, int]:
    i, j = corner
    p = (i + j) % 2
    return (i + j - p) // 2, (j - i + p) // 2


def grid_to_corner(uv: tuple[int, int], parity: int) -> tuple[int, int]:
    u, v = uv
    return u - v + parity, u + v


def supertile_members(corner: tuple[int, int]) -> tuple[TileId, TileId, TileId, TileId]:
    x, y = 2 * corner[0], 2 * corner[1]
    return tuple(tile_of_square(s) for s in ((x - 1, y - 1), (x, y - 1), (x - 1, y), (x, y)))


def partition_supertiles(
    colors: Mapping[TileId, Color],
    w: Window,
    anchor: tuple[int, int] = CANONICAL_ANCHOR,
    allow_partial: bool = False,
) -> list[SuperTile]:
    """Super-tiles lying wholly inside ``w``, row-major by corner.

    Every window tile must be coloured unless ``allow_partial`` is set, in
    which case super-tiles with an uncoloured member are skipped.
    """
    if not allow_partial:
        missing = [t for t in tiles_in_window(w) if t not in colors]
        if missing:
            raise IncompleteColoring(f"{len(missing)} window tiles uncoloured, e.g. {missing[0]}")
    parity = sum(anchor) % 2
    ci, cj = w.center
    r = w.radius
    out = []
    for j in range(cj - r, cj + r + 2):
        for i in range(ci - r, ci + r + 2):
            if (i + j) % 2 != parity:
                continue
            members = supertile_members((i, j))
            if not all(t in w for t in members):
                continue
            if not all(t in colors for t in members):
                continue
            out.append(SuperTile((i, j), members, tuple(colors[t] for t in members)))
    return out


def recolor(supertiles: list[SuperTile]) -> dict[tuple[int, int], int]:
    """Pattern id per super-tile corner, numbered in first-encounter order."""
    ids: dict[tuple, int] = {}
    return {st.corner: ids.setdefault(st.pattern, len(ids)) for st in supertiles}


def pattern_census(supertiles: list[SuperTile]) -> Counter:
    return Counter(st.pattern for st in supertiles)


def scan_anchors(colors: Mapping[TileId, Color], w: Window) -> dict[tuple[int, int], int]:
    """Number of distinct patterns for each of the four block anchor offsets."""
    return {
        a: len(pattern_census(partition_supertiles(colors, w, a)))
        for a in ((0, 0), (1, 0), (0, 1), (1, 1))
    }


@dataclass
class Component:
    id: int
    pattern: int
    cells: list[tuple[int, int]]  # grid coordinates
    vectors: list[tuple[int, int]]
    dim: str  # "2D", "1D" or "0D"
    crystal: int = -1
    flagged: bool = False

    @property
    def area(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class Relation:
    kind: str  # "Adjoined" | "SeparatedByInterface" | "GrainBoundary"
    first: int
    second: int
    via: int | None = None  # the 1D component for interfaces and grain boundaries

    def __str__(self) -> str:
        tail = f" via {self.via}" if self.via is not None else ""
        return f"{self.kind}({self.first},{self.second}){tail}"


@dataclass
class CrystalDecomposition:
    parity: int
    pattern_of: dict[tuple[int, int], int]  # grid cell -> pattern id
    component_of: dict[tuple[int, int], int]  # grid cell -> component id
    components: list[Component]
    patterns: list[tuple[Color, ...]]
    relations: list[Relation] = field(default_factory=list)

    @property
    def crystals(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for c in self.components:
            out.setdefault(c.crystal, []).append(c.id)
        return out

    def report(self) -> str:
        lines = []
        for c in self.components:
            vecs = " ".join(f"({a},{b})" for a, b in c.vectors) or "-"
            flag = " flagged" if c.flagged else ""
            lines.append(
                f"component {c.id} {c.dim} crystal={c.crystal} pattern={c.pattern} "
                f"vectors={vecs} area={c.area}{flag}"
            )
        lines += [f"relation {r}" for r in self.relations]
        return "\n".join(lines) + "\n"


def _label(pattern_of: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    comp: dict[tuple[int, int], int] = {}
    n = 0
    for cell in sorted(pattern_of, key=lambda uv: (uv[1], uv[0])):
        if cell in comp:
            continue
        comp[cell] = n
        queue = deque([cell])
        while queue:
            u, v = queue.popleft()
            for du, dv in GRID_STEPS:
                nb = (u + du, v + dv)
                if nb not in comp and pattern_of.get(nb) == pattern_of[cell]:
                    comp[nb] = n
                    queue.append(nb)
        n += 1
    return comp


def _translation_vectors(cells: set[tuple[int, int]]) -> list[tuple[int, int]]:
    found = []
    for du in range(0, MERGE_RADIUS + 1):
        for dv in range(-MERGE_RADIUS, MERGE_RADIUS + 1):
            if du == 0 and dv <= 0:
                continue
            if any(
                all((u + k * du, v + k * dv) in cells for k in range(1, MIN_REPEATS + 1))
                for u, v in cells
            ):
                found.append((du, dv))
    return found


def _width_across(cells: set[tuple[int, int]], vec: tuple[int, int]) -> float:
    du, dv = vec
    norm = float(np.hypot(du, dv))
    proj = [(u * dv - v * du) / norm for u, v in cells]
    return max(proj) - min(proj)


def decompose(
    colors: Mapping[TileId, Color],
    w: Window,
    anchor: tuple[int, int] = CANONICAL_ANCHOR,
    allow_partial: bool = False,
) -> CrystalDecomposition:
    """Split the recoded window into connected single-pattern regions.

    Each region is tagged by the rank of the translation vectors verified on
    it (a vector counts if some cell repeats ``MIN_REPEATS`` times along it).
    Rank-0 regions touching the window rim are absorbed into the neighbour
    they share most grid edges with and flagged.  Regions with the same
    pattern and the same tag belong to the same crystal.
    """
    sts = partition_supertiles(colors, w, anchor, allow_partial)
    parity = sum(anchor) % 2
    by_corner = recolor(sts)
    pattern_of = {corner_to_grid(c): p for c, p in by_corner.items()}
    patterns: list[tuple[Color, ...]] = []
    for st in sts:
        if by_corner[st.corner] == len(patterns):
            patterns.append(st.pattern)
    comp_of = _label(pattern_of)

    def rim(cell):
        return any((cell[0] + du, cell[1] + dv) not in pattern_of for du, dv in GRID_STEPS)

    # absorb truncated rank-0 fragments at the rim
    flagged = set()
    changed = True
    while changed:
        changed = False
        members: dict[int, set] = {}
        for cell, k in comp_of.items():
            members.setdefault(k, set()).add(cell)
        for k in sorted(members):
            cells = members[k]
            if _translation_vectors(cells) or not any(rim(c) for c in cells):
                continue
            shared: Counter = Counter()
            for u, v in cells:
                for du, dv in GRID_STEPS:
                    other = comp_of.get((u + du, v + dv))
                    if other is not None and other != k:
                        shared[other] += 1
            if not shared:
                continue
            target = min(shared, key=lambda o: (-shared[o], o))
            for c in cells:
                comp_of[c] = target
            flagged.add(target)
            changed = True
            break

    # renumber components in first-encounter order
    order: dict[int, int] = {}
    for cell in sorted(comp_of, key=lambda uv: (uv[1], uv[0])):
        order.setdefault(comp_of[cell], len(order))
    comp_of = {c: order[k] for c, k in comp_of.items()}
    flagged = {order[k] for k in flagged}

    cells_of: dict[int, list] = {}
    for cell in sorted(comp_of, key=lambda uv: (uv[1], uv[0])):
        cells_of.setdefault(comp_of[cell], []).append(cell)
    components = []
    for k in range(len(cells_of)):
        cells = cells_of[k]
        counts = Counter(pattern_of[c] for c in cells)
        pat = min(counts, key=lambda p: (-counts[p], p))
        cellset = set(cells)
        vecs = _translation_vectors(cellset)
        rank = int(np.linalg.matrix_rank(np.array(vecs))) if vecs else 0
        if rank == 2:
            dim = "2D"
        elif rank == 1 and _width_across(cellset, vecs[0]) <= MAX_1D_WIDTH:
            dim = "1D"
        elif rank == 1:
            dim = "2D"
        else:
            dim = "0D"
        components.append(Component(k, pat, cells, vecs, dim, flagged=k in flagged))

    crystal_key: dict[tuple, int] = {}
    for c in components:
        key = (c.pattern, c.dim)
        c.crystal = crystal_key.setdefault(key, len(crystal_key))

    d = CrystalDecomposition(parity, pattern_of, comp_of, components, patterns)
    d.relations = classify_relations(d)
    return d


def component_adjacency(d: CrystalDecomposition) -> dict[tuple[int, int], int]:
    """Number of shared grid edges for every touching component pair."""
    edges: Counter = Counter()
    for (u, v), k in d.component_of.items():
        for du, dv in ((1, 0), (0, 1)):
            other = d.component_of.get((u + du, v + dv))
            if other is not None and other != k:
                edges[(min(k, other), max(k, other))] += 1
    return dict(edges)


def classify_relations(d: CrystalDecomposition) -> list[Relation]:
    """Relations between touching components.

    The sides of a 1D component are the 2D components sharing at least
    ``SIDE_FRACTION`` of its length in grid edges; contacts at its tips do
    not count.  Sides from one crystal make it a grain boundary of that
    crystal (one relation per side).  Sides from two crystals make it an
    interface separating them.  Every other touching pair is adjoined.
    """
    comps = d.components
    adj = component_adjacency(d)
    rels = []
    side_pairs = set()
    for c in comps:
        if c.dim != "1D":
            continue
        sides = sorted(
            k
            for pair, n in adj.items()
            if c.id in pair
            for k in pair
            if k != c.id and comps[k].dim == "2D" and n >= SIDE_FRACTION * c.area
        )
        side_pairs.update((min(c.id, k), max(c.id, k)) for k in sides)
        if len({comps[k].crystal for k in sides}) == 1:
            rels += [Relation("GrainBoundary", c.id, k) for k in sides]
        else:
            for x in sides:
                for y in sides:
                    if x < y and comps[x].crystal != comps[y].crystal:
                        rels.append(Relation("SeparatedByInterface", x, y, via=c.id))
    for a, b in sorted(adj):
        if (a, b) not in side_pairs:
            rels.append(Relation("Adjoined", a, b))
    return sorted(rels, key=lambda r: (r.first, r.second, r.kind))
