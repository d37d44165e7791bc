"""SVG views of a window of the domino model.

Output bytes depend only on the inputs: elements are emitted in window
order and the palettes are fixed.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Collection, Mapping

from .coloring import Color
from .lattice import TileId, Window, squares_of_tile, tiles_in_window

COLOR_FILL = {Color.R: "#d62728", Color.B: "#1f77b4", Color.Y: "#e8c547", Color.G: "#2ca02c"}
GREY = "#bbbbbb"
YELLOW = "#e8c547"
VIOLET = "#9467bd"
WHITE = "#ffffff"
PATTERN_FILL = ("#8c564b", "#e377c2", "#17becf", "#bcbd22", "#ff7f0e")
# used only when more than five patterns or crystals show up
EXTRA_FILL = ("#7f7f7f", "#aec7e8", "#ffbb78", "#98df8a", "#c5b0d5", "#c49c94", "#f7b6d2")

VIEWS = ("field", "candidates", "components", "patterns", "automaton-frame")


@dataclass(frozen=True)
class RenderSpec:
    view: str
    window: Window
    cell: int = 12
    legend: bool = True

    def __post_init__(self) -> None:
        if self.view not in VIEWS:
            raise ValueError(f"unknown view {self.view!r}; expected one of {', '.join(VIEWS)}")
        if self.cell < 1:
            raise ValueError("cell size must be positive")


def palette(k: int) -> str:
    fills = PATTERN_FILL + EXTRA_FILL
    return fills[k % len(fills)]


class _Canvas:
    def __init__(self, spec: RenderSpec, legend_rows: int = 0):
        self.spec = spec
        w = spec.window
        ci, cj = w.center
        self.x0 = 2 * (ci - w.radius)
        self.y1 = 2 * (cj + w.radius + 1)
        self.size = 2 * w.side * spec.cell
        self.legend_h = (legend_rows * (spec.cell + 4) + 4) if spec.legend and legend_rows else 0
        height = self.size + self.legend_h
        self.root = ET.Element(
            "svg",
            xmlns="http://www.w3.org/2000/svg",
            width=str(self.size),
            height=str(height),
            viewBox=f"0 0 {self.size} {height}",
        )
        ET.SubElement(self.root, "rect", x="0", y="0", width=str(self.size), height=str(height), fill=WHITE)
        self.tiles = ET.SubElement(self.root, "g", stroke="#333333", attrib={"stroke-width": "0.5"})

    def box(self, t: TileId) -> tuple[int, int, int, int]:
        a, b = squares_of_tile(t)
        c = self.spec.cell
        x = (min(a.x, b.x) - self.x0) * c
        y = (self.y1 - max(a.y, b.y) - 1) * c
        w = (abs(a.x - b.x) + 1) * c
        h = (abs(a.y - b.y) + 1) * c
        return x, y, w, h

    def domino(self, t: TileId, fill: str, parent=None) -> None:
        x, y, w, h = self.box(t)
        ET.SubElement(
            self.tiles if parent is None else parent,
            "rect",
            x=str(x),
            y=str(y),
            width=str(w),
            height=str(h),
            fill=fill,
        )

    def mark(self, t: TileId) -> None:
        x, y, w, h = self.box(t)
        cx, cy, r = x + w / 2, y + h / 2, self.spec.cell / 3
        g = ET.SubElement(self.root, "g", stroke="#000000", attrib={"stroke-width": "1.5"})
        for dx in (-r, r):
            ET.SubElement(g, "line", x1=_num(cx - dx), y1=_num(cy - r), x2=_num(cx + dx), y2=_num(cy + r))

    def legend(self, entries: list[tuple[str, str]]) -> None:
        if not self.legend_h:
            return
        c = self.spec.cell
        g = ET.SubElement(self.root, "g", attrib={"font-family": "monospace", "font-size": str(c)})
        per_row = max(1, self.size // (8 * c))
        for k, (fill, label) in enumerate(entries):
            row, col = divmod(k, per_row)
            x = 4 + col * 8 * c
            y = self.size + 4 + row * (c + 4)
            ET.SubElement(g, "rect", x=str(x), y=str(y), width=str(c), height=str(c), fill=fill, stroke="#333333")
            text = ET.SubElement(g, "text", x=str(x + c + 4), y=str(y + c - 1))
            text.text = label

    def tostring(self) -> str:
        ET.indent(self.root)
        return ET.tostring(self.root, encoding="unicode") + "\n"


def _num(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def render_field(
    colors: Mapping[TileId, Color], spec: RenderSpec, marks: Collection[TileId] = ()
) -> str:
    cv = _Canvas(spec, legend_rows=1)
    for t in tiles_in_window(spec.window):
        c = colors.get(t)
        cv.domino(t, COLOR_FILL[c] if c is not None else WHITE)
    for t in sorted(marks):
        if t in spec.window:
            cv.mark(t)
    cv.legend([(COLOR_FILL[c], c.name) for c in Color])
    return cv.tostring()


def render_candidates(cands: Mapping[TileId, Collection[Color]], spec: RenderSpec) -> str:
    """Each domino split into stripes, one per remaining candidate colour."""
    cv = _Canvas(spec, legend_rows=1)
    for t in tiles_in_window(spec.window):
        cs = sorted(cands.get(t, ()))
        x, y, w, h = cv.box(t)
        if not cs:
            cv.domino(t, WHITE)
            continue
        horizontal = w >= h
        n = len(cs)
        for k, c in enumerate(cs):
            if horizontal:
                sx, sy, sw, sh = x + k * w / n, y, w / n, h
            else:
                sx, sy, sw, sh = x, y + k * h / n, w, h / n
            ET.SubElement(
                cv.tiles, "rect", x=_num(sx), y=_num(sy), width=_num(sw), height=_num(sh),
                fill=COLOR_FILL[c], attrib={"stroke-width": "0"},
            )
        ET.SubElement(cv.tiles, "rect", x=str(x), y=str(y), width=str(w), height=str(h), fill="none")
    cv.legend([(COLOR_FILL[c], c.name) for c in Color])
    return cv.tostring()


def render_labels(
    labels: Mapping[TileId, int],
    spec: RenderSpec,
    marks: Collection[TileId] = (),
    names: Mapping[int, str] | None = None,
) -> str:
    """Dominoes filled by an integer label (pattern or crystal id)."""
    cv = _Canvas(spec, legend_rows=2)
    for t in tiles_in_window(spec.window):
        k = labels.get(t)
        cv.domino(t, palette(k) if k is not None else WHITE)
    for t in sorted(marks):
        if t in spec.window:
            cv.mark(t)
    used = sorted(set(labels.values()))
    cv.legend([(palette(k), (names or {}).get(k, str(k))) for k in used])
    return cv.tostring()


def render_automaton_frame(
    grey: Collection[TileId],
    yellow: Collection[TileId],
    violet: Collection[TileId],
    spec: RenderSpec,
) -> str:
    cv = _Canvas(spec, legend_rows=1)
    grey, yellow, violet = set(grey), set(yellow), set(violet)
    for t in tiles_in_window(spec.window):
        if t in violet:
            fill = VIOLET
        elif t in yellow:
            fill = YELLOW
        elif t in grey:
            fill = GREY
        else:
            fill = WHITE
        cv.domino(t, fill)
    cv.legend([(GREY, "grey"), (YELLOW, "3 grey"), (VIOLET, "4 grey")])
    return cv.tostring()
