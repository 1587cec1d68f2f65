"""Complete-orientation search: enumeration, certificates, scenes."""

import dataclasses
import json

import pytest

from cyclegame import fixtures
from cyclegame.board import Board, board_to_json
from cyclegame.filled import (
    CertificateError,
    NoCellsError,
    Orientation,
    OrientationError,
    OrientationLimitError,
    ccw_next,
    cw_next,
    enumerate_orientations,
    find_cycle_cell,
    gut,
    is_inside_absorbing,
    is_inside_repelling,
    load_orientation,
    oracle_cycle_cell,
    orientation_to_json,
    sample_orientation,
    trace_cycle,
    validate_certificate,
)
from cyclegame.generators import (
    gen_cycle,
    gen_cycle_chord,
    gen_cycle_flap,
    gen_grid,
    gen_k4,
)


def test_orientation_validate():
    board = gen_cycle(3)
    o = Orientation.validate(board, [(0, 1), (1, 2), (2, 0)])
    assert o[1] == (1, 2)
    assert len(o) == 3
    with pytest.raises(OrientationError):
        Orientation.validate(board, {0: (0, 1), 1: (1, 2)})  # missing edge
    with pytest.raises(OrientationError):
        Orientation.validate(board, [(0, 1), (2, 1), (2, 0)])  # sink at 1...
    with pytest.raises(OrientationError):
        Orientation.validate(board, [(0, 1), (1, 2), (0, 2)])  # sink at 2
    with pytest.raises(OrientationError):
        Orientation.validate(board, [(0, 2), (1, 2), (2, 0)])  # wrong endpoints


@pytest.mark.parametrize(
    "board,count",
    [
        (gen_cycle(3), 2),
        (gen_cycle(4), 2),
        (gen_cycle(7), 2),
        (gen_k4(), 24),
        (gen_grid(2, 2), 78),
        (gen_cycle_chord(6, 3), 6),
        (gen_cycle_flap(5), 6),
    ],
)
def test_enumeration_counts(board, count):
    orientations = list(enumerate_orientations(board))
    assert len(orientations) == count
    # No duplicates, and each revalidates.
    assert len({o.arcs for o in orientations}) == count
    for o in orientations:
        Orientation.validate(board, o)


def test_degree_one_board_has_no_orientation():
    k2 = Board([(0, 0), (1, 0)], [(0, 1)])
    assert list(enumerate_orientations(k2)) == []
    with pytest.raises(OrientationError):
        sample_orientation(k2, seed=0)


def test_enumeration_limit():
    with pytest.raises(OrientationLimitError):
        list(enumerate_orientations(gen_grid(3, 3)))  # 24 edges


def test_every_orientation_has_a_cycle_cell():
    # The central claim, checked constructively and by brute force.
    boards = [gen_k4(), gen_cycle_chord(5, 2), gen_cycle_flap(4)]
    for board in boards:
        for orientation in enumerate_orientations(board):
            oracle = oracle_cycle_cell(board, orientation)
            assert oracle, orientation
            result = find_cycle_cell(board, orientation)
            assert (result.cell, result.direction) in oracle
            assert validate_certificate(board, orientation, result)


def test_certificate_shape():
    board, orientation = fixtures.ring_in_ring()
    result = find_cycle_cell(board, orientation)
    stages = [s.stage for s in result.certificate]
    assert stages[0] == "initial"
    assert all(s == "gut" for s in stages[1:])
    enclosed = [s.enclosed for s in result.certificate]
    assert enclosed == sorted(enclosed, reverse=True)
    assert len(set(enclosed)) == len(enclosed)  # strictly decreasing
    for step in result.certificate:
        assert step.polarity in ("absorbing", "repelling")


def test_tampered_certificate_rejected():
    board, orientation = fixtures.ring_in_ring()
    result = find_cycle_cell(board, orientation)
    wrong_cell = dataclasses.replace(result, cell=0)
    with pytest.raises(CertificateError):
        validate_certificate(board, orientation, wrong_cell)
    flipped = dataclasses.replace(
        result,
        certificate=tuple(
            dataclasses.replace(s, polarity="repelling")
            for s in result.certificate[:1]
        )
        + result.certificate[1:],
    )
    with pytest.raises(CertificateError):
        validate_certificate(board, orientation, flipped)


def test_no_cells_error():
    path = Board([(0, 0), (1, 0), (2, 1)], [(0, 1), (1, 2)])
    with pytest.raises(NoCellsError):
        find_cycle_cell(path, {0: (0, 1), 1: (1, 2)})


def test_cycle_board_direct():
    board = gen_cycle(5)
    result = find_cycle_cell(board, [(i, (i + 1) % 5) for i in range(5)])
    assert result.cell == 0
    assert result.direction == "ccw"


def test_sample_orientation_deterministic_and_valid():
    board = fixtures.fixture_board("grid9")
    first = sample_orientation(board, seed=42)
    again = sample_orientation(board, seed=42)
    assert first.arcs == again.arcs
    different = {sample_orientation(board, seed=s).arcs for s in range(12)}
    assert len(different) > 1
    for s in range(12):
        o = sample_orientation(board, s)
        Orientation.validate(board, o)
        result = find_cycle_cell(board, o)
        assert validate_certificate(board, o, result)


def test_samples_cover_the_enumeration():
    board = gen_k4()
    universe = {o.arcs for o in enumerate_orientations(board)}
    seen = {sample_orientation(board, s).arcs for s in range(200)}
    assert seen <= universe
    assert len(seen) > 12  # the sampler actually spreads


# ----------------------------------------------------------------------
# Walk rules, absorption, gut
# ----------------------------------------------------------------------


def test_next_arc_rules_on_a_ring():
    board = gen_cycle(4)
    o = Orientation.validate(board, [(i, (i + 1) % 4) for i in range(4)])
    # Degree-two vertices have a single outgoing choice either way.
    assert cw_next(board, o, 0, 1) == (1, 2)
    assert ccw_next(board, o, 0, 1) == (1, 2)


def test_trace_cycle_on_spiral():
    board, orientation = fixtures.spiral_octagon()
    ring = trace_cycle(board, orientation, tuple(orientation[0]), rule="cw")
    assert ring.vertices == (0, 7, 6, 5, 4, 3, 2, 1)


def test_trace_cycle_rejects_bad_start():
    board = gen_cycle(3)
    o = Orientation.validate(board, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(ValueError):
        trace_cycle(board, o, (1, 0))


def test_absorb_hex_scene():
    board, arcs = fixtures.absorb_hex()
    ring = [0, 1, 2, 3, 4, 5]
    assert is_inside_absorbing(board, arcs, ring)
    assert not is_inside_repelling(board, arcs, ring)
    # Reversing every stub flips absorption to repulsion.
    flipped = dict(arcs)
    for e in range(6, 14):
        t, h = flipped[e]
        flipped[e] = (h, t)
    assert not is_inside_absorbing(board, flipped, ring)
    assert is_inside_repelling(board, flipped, ring)


def test_ring_in_ring_gut():
    board, orientation = fixtures.ring_in_ring()
    decagon = list(range(10))
    assert is_inside_absorbing(board, orientation, decagon)
    g = gut(board, orientation, decagon)
    assert sorted(g.vertices) == list(range(10, 18))
    assert sorted(g.edges) == list(range(10, 18))
    assert sorted(g.cells) == [8]
    assert not g.empty
    result = find_cycle_cell(board, orientation)
    assert (result.cell, result.direction) == (8, "ccw")
    assert [s.stage for s in result.certificate] == ["initial", "gut"]


def test_twin_triangles_gut():
    board, orientation = fixtures.twin_triangles()
    ring = list(range(6, 15))
    assert is_inside_absorbing(board, orientation, ring)
    g = gut(board, orientation, ring)
    assert sorted(g.vertices) == [0, 1, 2, 3, 4, 5]
    assert sorted(g.edges) == [0, 1, 2, 3, 4, 5, 6]
    assert sorted(g.cells) == [0, 5]  # both triangle cells survive
    assert set(oracle_cycle_cell(board, orientation)) == {(0, "ccw"), (5, "cw")}
    result = find_cycle_cell(board, orientation)
    assert (result.cell, result.direction) in {(0, "ccw"), (5, "cw")}


def test_spiral_octagon_search():
    board, orientation = fixtures.spiral_octagon()
    result = find_cycle_cell(board, orientation)
    assert (result.cell, result.direction) == (1, "cw")
    step = result.certificate[0]
    assert (step.stage, step.polarity, step.enclosed) == ("initial", "absorbing", 1)
    assert step.vertices == (10, 9, 8, 3, 2, 11, 12)
    assert oracle_cycle_cell(board, orientation) == [(1, "cw")]


# ----------------------------------------------------------------------
# Serialization
# ----------------------------------------------------------------------


def test_orientation_round_trip(tmp_path):
    board = gen_cycle_chord(6, 3)
    (tmp_path / "c.board").write_text(board_to_json(board))
    orientation = next(enumerate_orientations(board))
    text = orientation_to_json("c.board", orientation)
    loaded_board, loaded = load_orientation(text, base_dir=tmp_path)
    assert loaded.arcs == orientation.arcs
    assert loaded_board.edges == board.edges
    # Inline board reference.
    text = orientation_to_json(board, orientation)
    loaded_board, loaded = load_orientation(text)
    assert loaded.arcs == orientation.arcs


def test_load_orientation_errors():
    with pytest.raises(OrientationError):
        load_orientation("not json")
    board = gen_cycle(3)
    with pytest.raises(OrientationError):
        load_orientation(
            json.dumps({"board": None, "arcs": []}), board=board
        )
    # Incomplete arc cover.
    with pytest.raises(OrientationError):
        load_orientation(
            json.dumps(
                {"board": None, "arcs": [{"edge": 0, "tail": 0, "head": 1}]}
            ),
            board=board,
        )
