"""Board model: validation, embedding-derived cells, serialization."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclegame import fixtures
from cyclegame.board import (
    Board,
    BoardError,
    board_from_obj,
    board_obj,
    board_to_json,
    parse_board,
)
from cyclegame.generators import gen_cycle, gen_grid, gen_k4

SQUARE_POINTS = [(0, 0), (1, 0), (1, 1), (0, 1)]
SQUARE_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0)]


def test_square_basics():
    b = Board(SQUARE_POINTS, SQUARE_EDGES)
    assert b.n_vertices == 4
    assert b.n_edges == 4
    assert b.n_cells == 1
    cell = b.cells[0]
    assert sorted(cell.vertices) == [0, 1, 2, 3]
    assert sorted(cell.edges) == [0, 1, 2, 3]
    assert cell.area == pytest.approx(1.0)


def test_cell_walk_is_counterclockwise():
    b = Board(SQUARE_POINTS, SQUARE_EDGES)
    cell = b.cells[0]
    k = len(cell.vertices)
    # edges[i] joins vertices[i] to vertices[i+1]
    for i in range(k):
        a, c = cell.vertices[i], cell.vertices[(i + 1) % k]
        assert set(b.endpoints(cell.edges[i])) == {a, c}


def test_accessors():
    b = Board(SQUARE_POINTS, SQUARE_EDGES)
    assert b.endpoints(0) == (0, 1)
    assert b.other_endpoint(0, 0) == 1
    assert b.other_endpoint(0, 1) == 0
    assert b.edge_between(2, 3) == 2
    assert b.edge_between(0, 2) is None
    assert b.degree(0) == 2
    assert sorted(b.vertex_edges(1)) == [0, 1]


def test_euler_relation_across_boards():
    boards = [gen_k4(), gen_cycle(5), gen_grid(2, 3)] + [
        fixtures.fixture_board(name) for name in fixtures.BOARD_NAMES
    ]
    for b in boards:
        assert b.n_cells == b.n_edges - b.n_vertices + 1


def test_edge_cells_incidence():
    b = gen_k4()
    for e in range(b.n_edges):
        for cid in b.edge_cells[e]:
            assert e in b.cells[cid].edges


@pytest.mark.parametrize(
    "points,edges,code",
    [
        ([], [], "degenerate"),
        ([(0, 0), (0, 0)], [(0, 1)], "coincident"),
        ([(0, 0), (1, 0)], [(0, 0)], "loop"),
        ([(0, 0), (1, 0)], [(0, 1), (1, 0)], "parallel-edge"),
        ([(0, 0), (1, 0)], [(0, 2)], "syntax"),
        ([(0, 0), (1, 1), (1, 0), (0, 1)], [(0, 1), (2, 3)], "crossing"),
        (
            [(0, 0), (1, 0), (0, 1), (1, 1)],
            [(0, 1), (2, 3)],
            "disconnected",
        ),
        ([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2), (0, 2)], "angle-tie"),
    ],
)
def test_invalid_boards_rejected(points, edges, code):
    with pytest.raises(BoardError) as exc_info:
        Board(points, edges)
    assert exc_info.value.code == code


def test_tree_board_has_no_cells():
    b = Board([(0, 0), (1, 0), (2, 1)], [(0, 1), (1, 2)])
    assert b.n_cells == 0
    assert b.n_edges == 2


def test_bridge_into_cell_spur_walk():
    # A square with an antenna vertex inside: one cell, spur edge repeats.
    points = SQUARE_POINTS + [(0.5, 0.5)]
    edges = SQUARE_EDGES + [(0, 4)]
    b = Board(points, edges)
    assert b.n_cells == 1
    cell = b.cells[0]
    assert cell.edges.count(4) == 2  # spur walked both ways


def test_round_trip_json():
    for name in fixtures.BOARD_NAMES:
        b = fixtures.fixture_board(name)
        again = parse_board(board_to_json(b))
        assert again.points == b.points
        assert again.edges == b.edges
        assert [c.edges for c in again.cells] == [c.edges for c in b.cells]


def test_board_obj_schema():
    obj = board_obj(gen_cycle(3))
    assert set(obj) == {"vertices", "edges"}
    assert obj["vertices"][0] == {
        "id": 0,
        "x": obj["vertices"][0]["x"],
        "y": obj["vertices"][0]["y"],
    }
    assert obj["edges"][0] == {"id": 0, "u": 0, "v": 1}


def test_parse_board_errors():
    with pytest.raises(BoardError):
        parse_board("not json")
    with pytest.raises(BoardError):
        parse_board(json.dumps({"vertices": []}))
    with pytest.raises(BoardError):
        parse_board(json.dumps({"vertices": [{"id": 0}], "edges": []}))
    doc = {
        "vertices": [
            {"id": 0, "x": 0, "y": 0},
            {"id": 0, "x": 1, "y": 0},
        ],
        "edges": [],
    }
    with pytest.raises(BoardError) as exc_info:
        parse_board(json.dumps(doc))
    assert exc_info.value.code == "duplicate-id"


def test_board_from_obj_against_parse():
    b = gen_grid(2, 2)
    assert board_from_obj(json.loads(board_to_json(b))).edges == b.edges


@given(st.integers(3, 9))
def test_cycle_boards_single_cell(n):
    b = gen_cycle(n)
    assert b.n_cells == 1
    assert len(b.cells[0].edges) == n
    assert b.cells[0].area > 0
