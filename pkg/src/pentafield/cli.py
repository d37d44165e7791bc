"""Command-line entry point: ``pentafield <command> [options]``."""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import analysis, automaton, coloring, geometry, render, search
from .io import SeedFileError, format_seed, format_seeds, load_seed
from .lattice import AdjacencyKind, TileId, Window, coordination_sequence

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4


class InputError(Exception):
    pass


def _schedule(text: str) -> tuple[int, ...]:
    try:
        sched = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad schedule {text!r}, expected e.g. 2,4,20") from None
    if any(r < 0 for r in sched) or any(b <= a for a, b in zip(sched, sched[1:])):
        raise argparse.ArgumentTypeError("schedule must be non-negative and strictly increasing")
    return sched


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _kind(text: str) -> AdjacencyKind:
    try:
        return AdjacencyKind(text)
    except ValueError:
        raise argparse.ArgumentTypeError("kind must be 'full' or 'edge'") from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, newline="\n")


def _seed(args) -> dict:
    if args.seed is None:
        raise InputError("--seed is required")
    return load_seed(args.seed)


# -- commands ---------------------------------------------------------------


def cmd_classify(args) -> int:
    seed = _seed(args)
    rep = coloring.classify(seed, args.schedule)
    lines = [
        str(rep.verdict),
        f"seed tiles: {len(seed)}",
        f"schedule: {','.join(map(str, rep.schedule))}",
        f"forced tiles: {len(rep.forced)}",
    ]
    for r, forced in sorted(rep.forced_by_radius.items()):
        lines.append(f"forced within radius {r}: {len(forced)}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_grow(args) -> int:
    seed = _seed(args)
    w = Window(args.radius)
    if args.exact:
        try:
            pc = coloring.field(seed, w)
        except coloring.WindowBarren as exc:
            _emit(f"# barren: {exc}\n", args.out)
            return EXIT_OK
        notes = [f"exact field within radius {args.radius}", f"tiles {len(pc.colors)}"]
    else:
        pc = coloring.propagate(seed, w)
        notes = [
            f"forcing within radius {args.radius}",
            f"rounds {max(pc.rounds.values(), default=0)}",
            f"tiles {len(pc.colors)}",
            f"contradiction {str(pc.contradiction).lower()}",
        ]
    _emit(format_seed(pc.colors, notes), args.out)
    return EXIT_OK


def cmd_automaton(args) -> int:
    seed = _seed(args)
    res = automaton.run(seed, args.ticks, kind=args.kind, keep_frames=args.frames is not None)
    _emit(res.csv(), args.out)
    if args.frames is not None:
        d = Path(args.frames)
        d.mkdir(parents=True, exist_ok=True)
        spec = render.RenderSpec("automaton-frame", res.region.window)
        width = len(str(args.ticks))
        for s, (grey, yellow, violet) in enumerate(res.frames, 1):
            svg = render.render_automaton_frame(
                res.region.tiles_of(_pad(grey)),
                res.region.tiles_of(_pad(yellow)),
                res.region.tiles_of(_pad(violet)),
                spec,
            )
            (d / f"frame_{s:0{width}d}.svg").write_text(svg, newline="\n")
    return EXIT_OK


def _pad(mask):
    # region masks carry a trailing sentinel slot
    return np.append(mask, False)


def cmd_coordseq(args) -> int:
    seq = coordination_sequence(TileId(0, 0, 0), args.kind, args.smax)
    rows = ["s,count"] + [f"{s},{n}" for s, n in enumerate(seq)]
    _emit("\n".join(rows) + "\n", args.out)
    return EXIT_OK


def _full_field(seed, radius: int):
    pc = coloring.propagate(seed, Window(radius + coloring.PROPAGATION_MARGIN))
    if pc.contradiction:
        raise InputError("seed leads to a contradiction under forcing")
    return pc


def cmd_crystals(args) -> int:
    seed = _seed(args)
    pc = _full_field(seed, args.radius)
    w = Window(args.radius)
    partial = not pc.covers(w)
    d = analysis.decompose(pc.colors, w, allow_partial=partial)
    census = analysis.pattern_census(analysis.partition_supertiles(pc.colors, w, allow_partial=partial))
    lines = [f"window radius {args.radius}" + (" (partial field)" if partial else "")]
    lines.append(f"patterns {len(census)}")
    for k, pat in enumerate(d.patterns):
        lines.append(f"pattern {k} {''.join(c.name for c in pat)} count={census[pat]}")
    lines.append(f"components {len(d.components)} crystals {len(d.crystals)}")
    _emit("\n".join(lines) + "\n" + d.report(), args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    budget = search.SearchBudget(args.max_seeds, args.max_seconds)
    res = search.search_perfect_seeds(args.k, Window(args.patch), args.radius, budget)
    header = [
        f"perfect seeds with {args.k} tiles in patch radius {args.patch}, tested to radius {args.radius}",
        f"symmetry classes checked {res.classes_checked}",
    ]
    if res.exhausted_budget:
        header.append("budget exhausted before the patch was covered")
    elif not res.seeds:
        header.append("none found; exhausted patch")
    blocks = [
        (seed, [f"class {n}: {size} seeds equivalent under symmetry and colour renaming"])
        for n, (seed, size) in enumerate(zip(res.seeds, res.class_sizes))
    ]
    _emit(format_seeds(blocks, header), args.out)
    return EXIT_BUDGET if res.exhausted_budget else EXIT_OK


def cmd_render(args) -> int:
    if args.out is None:
        raise InputError("render needs --out")
    seed = _seed(args)
    w = Window(args.radius)
    spec = render.RenderSpec(args.view, w, cell=args.cell)
    if args.view == "field":
        colors = coloring.propagate(seed, w).colors
        svg = render.render_field(colors, spec)
    elif args.view == "candidates":
        try:
            cands = coloring.exact_candidates(seed, w)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        svg = render.render_candidates(cands, spec)
    elif args.view in ("patterns", "components"):
        pc = _full_field(seed, args.radius)
        partial = not pc.covers(w)
        d = analysis.decompose(pc.colors, w, allow_partial=partial)
        labels = {}
        for uv, pid in d.pattern_of.items():
            key = pid if args.view == "patterns" else d.components[d.component_of[uv]].crystal
            for t in analysis.supertile_members(analysis.grid_to_corner(uv, d.parity)):
                labels[t] = key
        marks = seed if args.view == "patterns" else ()
        svg = render.render_labels(labels, spec, marks)
    else:
        if args.ticks is None:
            raise InputError("automaton-frame view needs --ticks")
        res = automaton.run(seed, args.ticks, kind=args.kind, keep_frames=True)
        grey, yellow, violet = res.frames[-1]
        reg = res.region
        svg = render.render_automaton_frame(
            reg.tiles_of(_pad(grey)), reg.tiles_of(_pad(yellow)), reg.tiles_of(_pad(violet)), spec
        )
    Path(args.out).write_text(svg, newline="\n")
    return EXIT_OK


def cmd_geometry(args) -> int:
    p, q = geometry.mount_offsets()
    rep = geometry.four_cell_distances()
    ab, ac, ad, ae = rep.lengths()
    perm = geometry.phase_shift_permutation()
    fr = geometry.free_rotation_bound()
    cycle = geometry.transposition(perm)
    lines = [
        f"mount offsets p={p:.9f} q={q:.9f} expected p={0.5 - math.sqrt(3) / 4:.9f} q=0.25",
        f"four-cell |ab|={ab:.9f} |ac|={ac:.9f} |ad|={ad:.9f} |ae|={ae:.9f} "
        f"expected {math.sqrt(2 - math.sqrt(3)):.9f} and 1",
        f"rectangle at a: {rep.rectangle[1]:.9f} x {rep.rectangle[0]:.9f}",
        "phase shift: " + " ".join(f"{a.name}->{b.name}" for a, b in perm.items())
        + f" cycle ({' '.join(c.name for c in cycle)})",
        f"space diagonal {fr.space_diagonal:.9f} free-rotation edge bound {fr.edge_threshold:.9f} "
        f"rotates freely {str(fr.can_rotate_freely).lower()}",
        f"min same-colour distance {geometry.min_same_color_distance(list(geometry.four_cell_configuration())):.9f}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pentafield", description="Four-colour fields on the basketweave domino tiling.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help, seed=False):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--out", help="output file (default: stdout)")
        if seed:
            p.add_argument("--seed", help="seed file: one 'i j slot color' per line")
        return p

    p = add("classify", cmd_classify, "barren / perfect / fertile verdict", seed=True)
    p.add_argument("--schedule", type=_schedule, default=(2, 4, 20))

    p = add("grow", cmd_grow, "dump the forced colouring of a window", seed=True)
    p.add_argument("--radius", type=_nonneg, default=6)
    p.add_argument("--exact", action="store_true", help="exact field instead of forcing")

    p = add("automaton", cmd_automaton, "grey-growth sequences as CSV", seed=True)
    p.add_argument("--ticks", type=_positive, default=43)
    p.add_argument("--kind", type=_kind, default=AdjacencyKind.FULL)
    p.add_argument("--frames", help="directory for per-tick SVG frames")

    p = add("coordseq", cmd_coordseq, "coordination sequence as CSV")
    p.add_argument("--kind", type=_kind, default=AdjacencyKind.FULL)
    p.add_argument("--smax", type=_nonneg, default=11)

    p = add("crystals", cmd_crystals, "super-tile patterns and crystal decomposition", seed=True)
    p.add_argument("--radius", type=_nonneg, default=20)

    p = add("search", cmd_search, "exhaustive perfect-seed search in a patch")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--patch", type=_nonneg, default=1)
    p.add_argument("--radius", type=_nonneg, default=8, help="perfection test radius")
    p.add_argument("--max-seeds", type=_positive)
    p.add_argument("--max-seconds", type=float)

    p = add("render", cmd_render, "SVG view of a window", seed=True)
    p.add_argument("--view", choices=render.VIEWS, default="field")
    p.add_argument("--radius", type=_nonneg, default=20)
    p.add_argument("--ticks", type=_positive)
    p.add_argument("--kind", type=_kind, default=AdjacencyKind.FULL)
    p.add_argument("--cell", type=_positive, default=12)

    add("geometry", cmd_geometry, "metric checks for the cube-molecule model")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (SeedFileError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except automaton.RegionTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (AssertionError, RuntimeError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
