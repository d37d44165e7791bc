"""Line-oriented seed files: ``i j slot color`` per line, ``#`` comments."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Mapping

from .coloring import Color
from .lattice import TileId


class SeedFileError(ValueError):
    def __init__(self, message: str, lineno: int | None = None, source: str = "<seed>"):
        self.lineno = lineno
        where = f"{source}:{lineno}: " if lineno is not None else f"{source}: "
        super().__init__(where + message)


def _parse_line(line: str, lineno: int, source: str) -> tuple[TileId, Color]:
    parts = line.split()
    if len(parts) != 4:
        raise SeedFileError(f"expected 'i j slot color', got {line.strip()!r}", lineno, source)
    try:
        i, j, slot = (int(p) for p in parts[:3])
    except ValueError:
        raise SeedFileError(f"non-integer coordinate in {line.strip()!r}", lineno, source) from None
    if slot not in (0, 1):
        raise SeedFileError(f"slot must be 0 or 1, got {slot}", lineno, source)
    try:
        color = Color[parts[3]]
    except KeyError:
        raise SeedFileError(f"unknown colour {parts[3]!r} (use R, B, Y, G)", lineno, source) from None
    return TileId(i, j, slot), color


def parse_seeds(text: str, source: str = "<seed>") -> list[dict[TileId, Color]]:
    """Split on blank lines into blocks; each non-empty block is one seed."""
    seeds: list[dict[TileId, Color]] = []
    current: dict[TileId, Color] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            current = None
            continue
        if line.startswith("#"):
            continue
        tile, color = _parse_line(line, lineno, source)
        if current is None:
            current = {}
            seeds.append(current)
        if tile in current:
            raise SeedFileError(f"duplicate tile {tile}", lineno, source)
        current[tile] = color
    return seeds


def parse_seed(text: str, source: str = "<seed>") -> dict[TileId, Color]:
    """One seed; blank lines are ignored and duplicates are an error."""
    seed: dict[TileId, Color] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tile, color = _parse_line(line, lineno, source)
        if tile in seed:
            raise SeedFileError(f"duplicate tile {tile}", lineno, source)
        seed[tile] = color
    return seed


def load_seed(path: str | Path) -> dict[TileId, Color]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SeedFileError(str(exc), source=str(path)) from None
    return parse_seed(text, str(path))


def format_seed(seed: Mapping[TileId, Color], comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"{t.i} {t.j} {t.slot} {Color(c).name}" for t, c in sorted(seed.items())]
    return "\n".join(lines) + "\n"


def format_seeds(blocks: Iterable[tuple[Mapping[TileId, Color], list[str]]], header=()) -> str:
    parts = ["".join(f"# {h}\n" for h in header)] if header else []
    parts += [format_seed(seed, comments) for seed, comments in blocks]
    return "\n".join(p for p in parts if p)
