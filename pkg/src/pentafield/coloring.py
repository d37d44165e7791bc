"""Proper 4-colourings under full (corner-inclusive) adjacency.

Two inference layers are provided.  :func:`propagate` applies only the
forcing rule (a tile whose coloured neighbours show three distinct colours
takes the fourth).  :func:`enumerate_colorings` and :func:`exact_candidates`
run an exact backtracking search over a finite window, using the same rule
as inference.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from dataclasses import field as dc_field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .lattice import (
    AdjacencyKind,
    TileId,
    Window,
    neighbors,
    tiles_in_window,
)


class Color(enum.IntEnum):
    R = 0
    B = 1
    Y = 2
    G = 3

    def __repr__(self) -> str:
        return self.name

    __str__ = __repr__


COLORS = tuple(Color)
ALL_MASK = 0b1111
_POPCOUNT = [bin(m).count("1") for m in range(16)]

Seed = Mapping[TileId, Color]

# Propagation for classification runs on a window this many blocks wider
# than the one being judged: corner dominoes of a truncated window have too
# few neighbours inside it to ever be forced.
PROPAGATION_MARGIN = 2
STABILITY_RIM = 1


def _bits(mask: int) -> list[Color]:
    return [c for c in COLORS if mask >> c & 1]


@dataclass
class PartialColoring:
    colors: dict[TileId, Color]
    contradiction: bool = False
    # round in which each tile was coloured; seed tiles are round 0
    rounds: dict[TileId, int] = dc_field(default_factory=dict)
    conflict: TileId | None = None

    def __len__(self) -> int:
        return len(self.colors)

    def __contains__(self, t: object) -> bool:
        return t in self.colors

    def __getitem__(self, t: TileId) -> Color:
        return self.colors[t]

    def covers(self, w: Window) -> bool:
        return all(t in self.colors for t in tiles_in_window(w))

    def restricted(self, w: Window) -> dict[TileId, Color]:
        return {t: c for t, c in self.colors.items() if t in w}


def validate_seed(seed: Seed) -> list[tuple[TileId, TileId]]:
    """Every full-adjacent pair of seed tiles sharing a colour, sorted."""
    bad = []
    for t in sorted(seed):
        for u in neighbors(t, AdjacencyKind.FULL):
            if u in seed and t < u and seed[t] == seed[u]:
                bad.append((t, u))
    return sorted(bad)


def propagate(seed: Seed, w: Window) -> PartialColoring:
    """Fixpoint of the forcing rule inside ``w``, computed round by round.

    All white tiles are judged against the colouring of the previous round,
    so the result and the per-tile round numbers do not depend on iteration
    order.
    """
    colors = {t: Color(c) for t, c in seed.items()}
    rounds = dict.fromkeys(colors, 0)
    if validate_seed(colors):
        return PartialColoring(colors, True, rounds, min(validate_seed(colors))[0])
    frontier = {u for t in colors for u in neighbors(t, AdjacencyKind.FULL)}
    r = 0
    while frontier:
        r += 1
        forced: dict[TileId, Color] = {}
        for t in sorted(frontier):
            if t in colors or t not in w:
                continue
            seen = 0
            for u in neighbors(t, AdjacencyKind.FULL):
                c = colors.get(u)
                if c is not None:
                    seen |= 1 << c
            n = bin(seen).count("1")
            if n == 4:
                return PartialColoring(colors, True, rounds, t)
            if n == 3:
                forced[t] = Color((ALL_MASK & ~seen).bit_length() - 1)
        if not forced:
            break
        for t, c in forced.items():
            for u in neighbors(t, AdjacencyKind.FULL):
                if forced.get(u) == c:
                    colors.update(forced)
                    rounds.update(dict.fromkeys(forced, r))
                    return PartialColoring(colors, True, rounds, min(t, u))
        colors.update(forced)
        rounds.update(dict.fromkeys(forced, r))
        frontier = {u for t in forced for u in neighbors(t, AdjacencyKind.FULL)}
    return PartialColoring(colors, False, rounds)


class WindowGraph:
    """Full-adjacency graph of one window with integer-indexed tiles."""

    def __init__(self, w: Window):
        self.window = w
        self.tiles = tiles_in_window(w)
        self.index = {t: k for k, t in enumerate(self.tiles)}
        self.nbrs: list[tuple[int, ...]] = [
            tuple(self.index[u] for u in neighbors(t, AdjacencyKind.FULL) if u in self.index)
            for t in self.tiles
        ]

    def __len__(self) -> int:
        return len(self.tiles)


@lru_cache(maxsize=32)
def window_graph(w: Window) -> WindowGraph:
    return WindowGraph(w)


class _Solver:
    """Backtracking over 4-bit colour domains with a trail for undo."""

    def __init__(self, g: WindowGraph, domains: list[int], order: list[int] | None = None):
        self.g = g
        self.dom = list(domains)
        self.trail: list[tuple[int, int]] = []
        self.order = order if order is not None else _front_order(g, self.dom)

    def _set(self, v: int, mask: int) -> None:
        self.trail.append((v, self.dom[v]))
        self.dom[v] = mask

    def undo(self, mark: int) -> None:
        dom, trail = self.dom, self.trail
        while len(trail) > mark:
            v, old = trail.pop()
            dom[v] = old

    def settle(self, queue: list[int]) -> bool:
        """Remove every singleton's colour from its neighbours, transitively."""
        dom, nbrs = self.dom, self.g.nbrs
        done = set()
        while queue:
            v = queue.pop()
            if v in done:
                continue
            done.add(v)
            bit = dom[v]
            for u in nbrs[v]:
                d = dom[u]
                if d & bit:
                    d &= ~bit
                    if not d:
                        return False
                    self._set(u, d)
                    if d & (d - 1) == 0:
                        queue.append(u)
        return True

    def initial(self) -> bool:
        queue = [v for v, d in enumerate(self.dom) if d and d & (d - 1) == 0]
        if any(d == 0 for d in self.dom):
            return False
        return self.settle(queue)

    def choose(self) -> int:
        """First open tile in the search order, preferring two-colour domains."""
        fallback = -1
        for v in self.order:
            n = _POPCOUNT[self.dom[v]]
            if n == 2:
                return v
            if n > 2 and fallback < 0:
                fallback = v
        return fallback

    def solutions(self, cap: int) -> Iterable[list[int]]:
        """Yield complete assignments (as masks) in deterministic order."""
        stack: list[tuple[int, list[int], int]] = []
        v = self.choose()
        if v < 0:
            yield list(self.dom)
            return
        stack.append((v, _bits(self.dom[v]), len(self.trail)))
        found = 0
        while stack:
            v, options, mark = stack[-1]
            self.undo(mark)
            if not options:
                stack.pop()
                continue
            c = options.pop(0)
            self._set(v, 1 << c)
            if not self.settle([v]):
                continue
            nv = self.choose()
            if nv < 0:
                yield list(self.dom)
                found += 1
                if found >= cap:
                    return
                continue
            stack.append((nv, _bits(self.dom[nv]), len(self.trail)))


def _front_order(g: WindowGraph, dom: list[int]) -> list[int]:
    """Tiles by graph distance from the fixed tiles, then by index.

    Branching next to what is already decided keeps contradictions local;
    sweeping from a far corner towards the seed thrashes.
    """
    fixed = [v for v, d in enumerate(dom) if d and d & (d - 1) == 0]
    dist = {v: 0 for v in fixed}
    queue = list(fixed) or [len(g) // 2]
    dist.setdefault(queue[0], 0)
    for v in queue:
        for u in g.nbrs[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return sorted(range(len(g)), key=lambda v: (dist.get(v, len(g)), v))


def _seed_domains(seed: Seed, g: WindowGraph) -> list[int] | None:
    dom = [ALL_MASK] * len(g)
    for t, c in seed.items():
        k = g.index.get(t)
        if k is not None:
            dom[k] = 1 << c
    if validate_seed(seed):
        return None
    return dom


@dataclass
class EnumerationResult:
    count: int
    capped: bool
    witnesses: list[dict[TileId, Color]]


def enumerate_colorings(seed: Seed, w: Window, cap: int = 2) -> EnumerationResult:
    """Count proper colourings of ``w`` extending ``seed``, stopping at ``cap``.

    Seed tiles outside ``w`` are ignored except for the global validity check.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    g = window_graph(w)
    dom = _seed_domains(seed, g)
    if dom is None:
        return EnumerationResult(0, False, [])
    solver = _Solver(g, dom)
    if not solver.initial():
        return EnumerationResult(0, False, [])
    count, witnesses = 0, []
    for sol in solver.solutions(cap):
        count += 1
        if len(witnesses) < 2:
            witnesses.append({t: Color(m.bit_length() - 1) for t, m in zip(g.tiles, sol)})
    return EnumerationResult(count, count >= cap, witnesses)


def is_window_barren(seed: Seed, w: Window) -> bool:
    return enumerate_colorings(seed, w, 1).count == 0


class WindowBarren(ValueError):
    """No proper colouring of the window extends the seed."""


def exact_candidates(seed: Seed, w: Window) -> dict[TileId, frozenset[Color]]:
    """Colours each window tile takes in at least one proper window colouring.

    Every found solution certifies one colour per tile at once, so a
    solvability query is only issued for (tile, colour) pairs no earlier
    solution has covered.  An all-empty map means the seed is window-barren.
    """
    g = window_graph(w)
    dom = _seed_domains(seed, g)
    base = _Solver(g, dom) if dom is not None else None
    if base is None or not base.initial():
        return {t: frozenset() for t in g.tiles}
    settled = list(base.dom)
    seen = [0] * len(g)
    first = next(iter(_Solver(g, settled).solutions(1)), None)
    if first is None:
        return {t: frozenset() for t in g.tiles}
    for k, m in enumerate(first):
        seen[k] |= m
    for k in range(len(g)):
        for c in _bits(settled[k] & ~seen[k]):
            if seen[k] >> c & 1:
                continue
            trial = list(settled)
            trial[k] = 1 << c
            solver = _Solver(g, trial)
            if not solver.settle([k]):
                continue
            sol = next(iter(solver.solutions(1)), None)
            if sol is not None:
                for kk, m in enumerate(sol):
                    seen[kk] |= m
    return {t: frozenset(_bits(seen[k])) for k, t in enumerate(g.tiles)}


def field(seed: Seed, w: Window) -> PartialColoring:
    """Window-forced tiles: the singletons of :func:`exact_candidates`."""
    cands = exact_candidates(seed, w)
    if any(not cs for cs in cands.values()):
        raise WindowBarren(f"seed is barren within radius {w.radius}")
    return PartialColoring({t: next(iter(cs)) for t, cs in cands.items() if len(cs) == 1})


# -- classification ---------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    kind: str  # "Barren" | "PerfectWithinRadius" | "FertileEvidence" | "Inconclusive"
    radius: int
    dormant: bool = False

    def __str__(self) -> str:
        if self.kind == "FertileEvidence":
            return f"FertileEvidence({self.radius}, dormant={str(self.dormant).lower()})"
        return f"{self.kind}({self.radius})"


@dataclass
class ClassificationReport:
    verdict: Verdict
    forced: dict[TileId, Color]
    schedule: tuple[int, ...]
    forced_by_radius: dict[int, dict[TileId, Color]] = dc_field(default_factory=dict)

    @property
    def is_perfect(self) -> bool:
        return self.verdict.kind == "PerfectWithinRadius"


def _within(colors: Mapping[TileId, Color], w: Window) -> dict[TileId, Color]:
    return {t: c for t, c in colors.items() if t in w}


def is_perfect_within(seed: Seed, radius: int, center: tuple[int, int] = (0, 0)) -> bool:
    w = Window(radius, center)
    pc = propagate(seed, Window(radius + PROPAGATION_MARGIN, center))
    return not pc.contradiction and pc.covers(w)


def classify(
    seed: Seed,
    schedule: Sequence[int] = (2, 3, 4),
    center: tuple[int, int] = (0, 0),
    exact_limit: int = 4,
) -> ClassificationReport:
    """Radius-indexed verdict for ``seed``.

    Barren if some scheduled window admits no extension.  Perfect within the
    largest radius if forcing alone colours that whole window.  Otherwise the
    window-forced sets at the last two radii are compared away from the rim
    of the smaller window (its outermost ``STABILITY_RIM`` blocks see fewer
    constraints); fertile evidence is reported only if they agree there.
    Exact forced sets are used when the largest radius is at most
    ``exact_limit``; otherwise forcing gives a sound under-approximation.
    """
    sched = tuple(schedule)
    if not sched or any(b <= a for a, b in zip(sched, sched[1:])):
        raise ValueError(f"schedule must be strictly increasing, got {sched}")
    for r in sched:
        if is_window_barren(seed, Window(r, center)):
            return ClassificationReport(Verdict("Barren", r), dict(seed), sched)
    r_max = sched[-1]
    pc = propagate(seed, Window(r_max + PROPAGATION_MARGIN, center))
    if not pc.contradiction and pc.covers(Window(r_max, center)):
        return ClassificationReport(
            Verdict("PerfectWithinRadius", r_max), pc.restricted(Window(r_max, center)), sched
        )
    forced_by_radius = {}
    # one method for both radii so their forced sets are comparable
    exact = r_max <= exact_limit
    for r in sched[-2:]:
        w = Window(r, center)
        if exact:
            forced_by_radius[r] = field(seed, w).colors
        else:
            forced_by_radius[r] = propagate(seed, w).colors
    forced = forced_by_radius[r_max]
    if len(sched) >= 2:
        inner = Window(max(sched[-2] - STABILITY_RIM, 0), center)
        stable = _within(forced, inner) == _within(forced_by_radius[sched[-2]], inner)
    else:
        stable = False
    if not stable:
        return ClassificationReport(Verdict("Inconclusive", r_max), forced, sched, forced_by_radius)
    dormant = set(forced) == {t for t in seed if t in Window(r_max, center)}
    return ClassificationReport(
        Verdict("FertileEvidence", r_max, dormant), forced, sched, forced_by_radius
    )
