from collections import Counter

import pytest
from oracles import rect

from pentafield.analysis import (
    CANONICAL_ANCHOR,
    IncompleteColoring,
    corner_to_grid,
    decompose,
    grid_to_corner,
    partition_supertiles,
    pattern_census,
    recolor,
    scan_anchors,
    supertile_members,
)
from pentafield.coloring import PROPAGATION_MARGIN, Color, propagate, validate_seed
from pentafield.lattice import Window, tiles_in_window
from pentafield.seeds import PERFECT_SEED, STRIP_SEED


@pytest.fixture(scope="module")
def perfect_field():
    pc = propagate(PERFECT_SEED, Window(20 + PROPAGATION_MARGIN))
    assert pc.covers(Window(20))
    return pc.restricted(Window(20))


@pytest.fixture(scope="module")
def perfect_decomp(perfect_field):
    return decompose(perfect_field, Window(20))


def test_grid_round_trip():
    for i in range(-6, 7):
        for j in range(-6, 7):
            p = (i + j) % 2
            assert grid_to_corner(corner_to_grid((i, j)), p) == (i, j)


def test_supertiles_partition_the_interior(perfect_field):
    sts = partition_supertiles(perfect_field, Window(2))
    seen = Counter(t for st in sts for t in st.members)
    assert max(seen.values()) == 1
    assert all(t in seen for t in tiles_in_window(Window(1)))
    for st in sts:
        assert sorted(st.pattern) == sorted(Color)
        assert len(set(st.members)) == 4


def test_supertile_members_meet_at_corner():
    for corner in ((0, 1), (3, -2)):
        ms = supertile_members(corner)
        x, y = 2 * corner[0], 2 * corner[1]
        for t in ms:
            x0, y0, x1, y1 = rect(t)
            assert x0 <= x <= x1 and y0 <= y <= y1


def test_partition_requires_full_colouring():
    with pytest.raises(IncompleteColoring):
        partition_supertiles({}, Window(2))
    assert partition_supertiles({}, Window(2), allow_partial=True) == []


def test_five_patterns(perfect_field):
    sts = partition_supertiles(perfect_field, Window(20))
    assert len(pattern_census(sts)) == 5
    ids = recolor(sts)
    assert sorted(set(ids.values())) == [0, 1, 2, 3, 4]


def test_anchor_scan(perfect_field):
    counts = scan_anchors(perfect_field, Window(20))
    assert counts[CANONICAL_ANCHOR] == 5
    assert min(counts.values()) == 5


def test_perfect_decomposition(perfect_decomp):
    d = perfect_decomp
    assert len(d.components) == 7
    assert len(d.crystals) == 5
    dims = Counter(c.dim for c in d.components)
    assert dims == {"2D": 4, "1D": 3}
    two_d = [c for c in d.components if c.dim == "2D"]
    by_crystal = Counter(c.crystal for c in two_d)
    assert sorted(by_crystal.values()) == [2, 2]


def test_perfect_seed_relations(perfect_decomp):
    d = perfect_decomp
    comps = d.components
    rels = d.relations
    kinds = Counter(r.kind for r in rels)
    assert kinds["SeparatedByInterface"] == 1
    assert kinds["GrainBoundary"] == 4

    (sep,) = [r for r in rels if r.kind == "SeparatedByInterface"]
    a, b = comps[sep.first], comps[sep.second]
    assert a.dim == b.dim == "2D" and a.crystal != b.crystal
    assert comps[sep.via].dim == "1D"

    # the other member of each crystal touches the other crystal directly
    partner = {c.crystal: c.id for c in comps if c.dim == "2D" and c.id not in (a.id, b.id)}
    p1, p2 = partner[a.crystal], partner[b.crystal]
    assert [r.kind for r in rels if {r.first, r.second} == {p1, p2}] == ["Adjoined"]

    # each crystal holds one 1D defect bordered on both sides by its members
    for crystal in (a.crystal, b.crystal):
        members = {c.id for c in comps if c.crystal == crystal}
        gbs = [r for r in rels if r.kind == "GrainBoundary" and r.second in members]
        assert len(gbs) == 2 and len({r.first for r in gbs}) == 1
        assert {r.second for r in gbs} == members
        assert comps[gbs[0].first].dim == "1D"


def test_uniform_periodic_colouring():
    d0 = decompose(propagate(PERFECT_SEED, Window(22)).restricted(Window(20)), Window(20))
    big = max((c for c in d0.components if c.dim == "2D"), key=lambda c: c.area)
    pattern = d0.patterns[big.pattern]
    w = Window(8)
    colors = {}
    p = sum(CANONICAL_ANCHOR) % 2
    for i in range(-10, 11):
        for j in range(-10, 11):
            if (i + j) % 2 == p:
                colors.update(zip(supertile_members((i, j)), pattern))
    assert not validate_seed(colors)
    d = decompose({t: c for t, c in colors.items() if t in w}, w)
    assert len(d.patterns) == 1
    assert len(d.components) == 1 and d.components[0].dim == "2D"
    assert d.relations == []


def test_colour_permutation_keeps_structure(perfect_field, perfect_decomp):
    perm = {Color.R: Color.Y, Color.Y: Color.G, Color.G: Color.B, Color.B: Color.R}
    d = decompose({t: perm[c] for t, c in perfect_field.items()}, Window(20))
    assert [(c.dim, c.area, c.crystal) for c in d.components] == [
        (c.dim, c.area, c.crystal) for c in perfect_decomp.components
    ]
    assert [str(r) for r in d.relations] == [str(r) for r in perfect_decomp.relations]


def test_strip_seed_field_has_no_2d_crystal():
    pc = propagate(STRIP_SEED, Window(12 + PROPAGATION_MARGIN))
    w = Window(12)
    d = decompose(pc.restricted(w), w, allow_partial=True)
    assert d.components
    assert all(c.dim in ("1D", "0D") for c in d.components)
    directions = {c.vectors[0] for c in d.components if c.dim == "1D"}
    assert len(directions) == 1
    (du, dv) = directions.pop()
    across = {u * dv - v * du for c in d.components for u, v in c.cells}
    assert max(across) - min(across) <= 3
