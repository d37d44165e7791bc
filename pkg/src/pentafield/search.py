"""Exhaustive search for perfect seeds inside a finite patch of blocks."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .coloring import Color, Seed, is_perfect_within, validate_seed
from .lattice import LatticeSymmetry, TileId, Window, point_symmetries, tiles_in_window


def _normalize(tiles_colors: list[tuple[TileId, int]]) -> tuple:
    """Translate to a fixed base block and relabel colours by first use."""
    ts = sorted(tiles_colors)
    i0, j0 = min((t.j, t.i) for t, _ in ts)[::-1]
    p = (i0 + j0) % 2
    di, dj = p - i0, -j0
    moved = sorted((TileId(t.i + di, t.j + dj, t.slot), c) for t, c in ts)
    relabel: dict[int, int] = {}
    return tuple((t, relabel.setdefault(c, len(relabel))) for t, c in moved)


def canonical_form(seed: Seed, symmetries: list[LatticeSymmetry] | None = None) -> tuple:
    """Representative of ``seed`` modulo lattice symmetry and colour renaming."""
    syms = point_symmetries() if symmetries is None else symmetries
    items = [(t, int(c)) for t, c in seed.items()]
    return min(_normalize([(g.apply(t), c) for t, c in items]) for g in syms)


@dataclass
class SearchBudget:
    max_seeds: int | None = None
    max_seconds: float | None = None


@dataclass
class SearchResult:
    k: int
    patch_radius: int
    test_radius: int
    seeds: list[dict[TileId, Color]]
    classes_checked: int
    exhausted_budget: bool
    elapsed: float = 0.0
    class_sizes: list[int] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.exhausted_budget


def search_perfect_seeds(
    k: int,
    patch: Window = Window(1),
    test_radius: int = 8,
    budget: SearchBudget | None = None,
    symmetries: list[LatticeSymmetry] | None = None,
    footprint: list[TileId] | None = None,
) -> SearchResult:
    """All ``k``-tile seeds in ``patch`` perfect within ``test_radius``.

    Each symmetry class is tested once, on its first representative met in
    the deterministic enumeration order (tile subsets in window order,
    colourings in lexicographic order with colours introduced in order
    R, B, Y, G).  The perfection test is centred on the patch centre.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    budget = budget or SearchBudget()
    syms = point_symmetries() if symmetries is None else symmetries
    start = time.monotonic()
    tiles = tiles_in_window(patch)
    if footprint is not None:
        outside = [t for t in footprint if t not in patch]
        if outside:
            raise ValueError(f"footprint tile {outside[0]} lies outside the patch")
        keep = set(footprint)
        tiles = [t for t in tiles if t in keep]
    seen: dict[tuple, int] = {}
    found: list[dict[TileId, Color]] = []
    found_keys: list[tuple] = []
    checked = 0
    exhausted = False
    for subset in itertools.combinations(tiles, k):
        for cols in _first_use_colourings(k):
            seed = {t: Color(c) for t, c in zip(subset, cols)}
            key = canonical_form(seed, syms)
            if key in seen:
                seen[key] += 1
                continue
            seen[key] = 1
            if (budget.max_seeds is not None and checked >= budget.max_seeds) or (
                budget.max_seconds is not None and time.monotonic() - start > budget.max_seconds
            ):
                exhausted = True
                break
            checked += 1
            if validate_seed(seed):
                continue
            if is_perfect_within(seed, test_radius, patch.center):
                found.append(seed)
                found_keys.append(key)
        if exhausted:
            break
    return SearchResult(
        k,
        patch.radius,
        test_radius,
        found,
        checked,
        exhausted,
        time.monotonic() - start,
        [seen[key] for key in found_keys],
    )


def _first_use_colourings(k: int):
    """Colour tuples where colour ``c`` appears only after ``0..c-1``."""

    def rec(prefix: list[int], used: int):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for c in range(min(used + 1, 4)):
            prefix.append(c)
            yield from rec(prefix, max(used, c + 1))
            prefix.pop()

    yield from rec([], 0)
