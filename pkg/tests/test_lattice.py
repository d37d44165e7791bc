import random

import oracles
import pytest

from pentafield.lattice import (
    AdjacencyKind,
    LatticeSymmetry,
    TileId,
    UnitSquare,
    Window,
    coordination_sequence,
    is_horizontal,
    neighbors,
    point_symmetries,
    squares_of_tile,
    tile_center,
    tile_of_square,
    tiles_in_window,
)

FULL, EDGE = AdjacencyKind.FULL, AdjacencyKind.EDGE


def random_tiles(n, seed=0, spread=50):
    rng = random.Random(seed)
    return [TileId(rng.randint(-spread, spread), rng.randint(-spread, spread), rng.randint(0, 1)) for _ in range(n)]


def test_tile_of_square_examples():
    assert tile_of_square((0, 0)) == TileId(0, 0, 0)
    assert tile_of_square((1, 1)) == TileId(0, 0, 1)
    assert tile_of_square((3, 0)) == TileId(1, 0, 1)
    assert tile_of_square((-1, -1)) == TileId(-1, -1, 1)


def test_squares_of_tile_examples():
    assert set(squares_of_tile(TileId(0, 0, 0))) == {(0, 0), (1, 0)}
    assert set(squares_of_tile(TileId(1, 0, 0))) == {(2, 0), (2, 1)}


def test_square_tile_round_trip_against_rectangles():
    for x in range(-9, 9):
        for y in range(-9, 9):
            t = tile_of_square(UnitSquare(x, y))
            assert UnitSquare(x, y) in squares_of_tile(t)
            x0, y0, x1, y1 = oracles.rect(t)
            assert x0 <= x < x1 and y0 <= y < y1
    for t in tiles_in_window(Window(3)):
        for s in squares_of_tile(t):
            assert tile_of_square(s) == t
        assert is_horizontal(t) == ((t.i + t.j) % 2 == 0)
        x0, y0, x1, y1 = oracles.rect(t)
        assert tile_center(t) == ((x0 + x1) / 2, (y0 + y1) / 2)


@pytest.mark.parametrize("kind,name", [(FULL, "full"), (EDGE, "edge")])
def test_neighbors_match_rasterisation(kind, name):
    for t in tiles_in_window(Window(2, (1, 0))):
        assert sorted(neighbors(t, kind)) == sorted(TileId(*u) for u in oracles.raster_neighbors(t, name))


def test_degrees_on_random_tiles():
    for t in random_tiles(10_000, seed=1, spread=10**6):
        full, edge = neighbors(t, FULL), neighbors(t, EDGE)
        assert len(set(full)) == 7
        assert len(set(edge)) == 5
        assert set(edge) <= set(full)


def test_adjacency_is_symmetric():
    for t in random_tiles(500, seed=2):
        for u in neighbors(t, FULL):
            assert t in neighbors(u, FULL)
        for u in neighbors(t, EDGE):
            assert t in neighbors(u, EDGE)


def test_window_sizes():
    assert len(Window(0)) == 2
    assert len(Window(1)) == 18
    assert len(Window(3)) == 98
    w = Window(2, (3, -1))
    tiles = w.tiles()
    assert len(tiles) == len(w) == len(set(tiles))
    assert all(t in w for t in tiles)
    assert TileId(6, -1, 0) not in w
    with pytest.raises(ValueError):
        Window(-1)


def test_coordination_sequences():
    assert coordination_sequence(TileId(0, 0, 0), FULL, 11) == [1, 7, 15, 24, 32, 40, 48, 56, 64, 72, 80, 88]
    assert coordination_sequence(TileId(0, 0, 0), EDGE, 10) == [1, 5, 11, 16, 21, 27, 32, 37, 43, 48, 53]
    assert coordination_sequence(TileId(0, 0, 0), FULL, 0) == [1]


@pytest.mark.parametrize("kind,name", [(FULL, "full"), (EDGE, "edge")])
def test_coordination_sequence_matches_oracle_and_base(kind, name):
    expected = oracles.bfs_counts((0, 0, 0), name, 9)
    for t in (TileId(0, 0, 0), TileId(0, 0, 1), TileId(1, 0, 0), TileId(1, 0, 1), TileId(-3, 8, 1)):
        assert coordination_sequence(t, kind, 9) == expected


def test_translation():
    g = LatticeSymmetry.translation(1, 1)
    assert g.apply(TileId(0, 0, 0)) == TileId(1, 1, 0)
    assert LatticeSymmetry().apply(TileId(3, -2, 1)) == TileId(3, -2, 1)
    with pytest.raises(ValueError):
        LatticeSymmetry.translation(1, 0)


def test_point_symmetries_are_automorphisms():
    syms = point_symmetries()
    assert len(syms) == 8
    assert sorted(g.op for g in syms) == sorted(
        ["id", "rot90", "rot180", "rot270", "flip_x", "flip_y", "diag", "antidiag"]
    )
    tiles = random_tiles(300, seed=3, spread=20)
    for g in syms:
        for t in tiles:
            u = g.apply(t)
            for kind in (FULL, EDGE):
                assert sorted(g.apply(v) for v in neighbors(t, kind)) == sorted(neighbors(u, kind))


def test_symmetries_are_bijective_on_a_window():
    tiles = tiles_in_window(Window(4))
    for g in point_symmetries():
        assert len({g.apply(t) for t in tiles}) == len(tiles)


def test_odd_shift_is_not_a_symmetry():
    assert not LatticeSymmetry((2, 0), "id").is_valid()
    with pytest.raises(ValueError):
        LatticeSymmetry((2, 0), "id").apply(TileId(0, 0, 0))
