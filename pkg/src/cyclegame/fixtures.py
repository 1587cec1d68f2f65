"""Bundled demonstration boards, game records, and orientation scenes.

Small hand-drawn boards used by the test suite, the CLI, and the game
service catalog.  Each board has a pure constructor here (the canonical
definition) and a generated data file under ``cyclegame/data/`` in the
documented JSON formats; tests assert the two agree.

Boards:

* ``grid9`` — 3x3 lattice with two diagonal braces into the center.
* ``wheel4`` — square with a hub joined to all four corners.
* ``diag_square`` — square with a two-edge diagonal path through a
  center vertex (the center path lies inside both cells).
* ``bar_square`` — square with a horizontal two-vertex bar across the
  middle; the bar edge is its own mirror image with endpoints swapped.
* ``house`` — gabled outline with an interior hub; mirror-symmetric
  with no edge mapped to itself.
* ``house_braced`` — the house plus a brace across the gable, adding a
  self-paired edge with swapped endpoints.
* ``kite`` — two triangles sharing a vertical spine; the spine is its
  own mirror image with fixed endpoints.
* ``steeple`` — tower of a triangle over two stacked quads; its mirror
  pairs cells with themselves but fixes three edges.

Orientation scenes (complete arc assignments for the cycle-cell search):

* ``absorb_hex`` — hexagonal cycle with eight interior dead-end stubs
  all pointing at the cycle: inside-absorbing, though not a complete
  sink/source-free orientation (stub tails are sources).
* ``spiral_octagon`` — clockwise octagon ring with an interior spiral;
  the clockwise selection rule settles on the ring, the
  counterclockwise retrace falls into the spiral and closes a
  seven-vertex cycle that bounds a single cell.
* ``ring_in_ring`` — directed decagon around a directed octagon joined
  by outward spokes; the decagon is inside-absorbing and its gut is
  exactly the octagon subcomplex.
* ``twin_triangles`` — two directed triangles joined by a bar, inside a
  directed ring with outward spokes; the ring's gut is the connected
  triangles-plus-bar complex including both triangle cells.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .board import Board, parse_board
from .filled import Orientation
from .rules import Move, load_record

__all__ = [
    "BOARD_NAMES",
    "RECORDS",
    "absorb_hex",
    "data_dir",
    "fixture_board",
    "fixture_record",
    "load_fixture_board",
    "load_fixture_record",
    "make_bar_square",
    "make_diag_square",
    "make_grid9",
    "make_house",
    "make_house_braced",
    "make_kite",
    "make_steeple",
    "make_wheel4",
    "record_moves",
    "ring_in_ring",
    "spiral_octagon",
    "twin_triangles",
]


# ----------------------------------------------------------------------
# Board constructors
# ----------------------------------------------------------------------


def make_grid9() -> Board:
    """3x3 lattice (vertices 0..8 row-major from the top-left) with
    diagonal braces from the center to the top-right and bottom-left."""
    points = [
        (-1.0, 1.0), (0.0, 1.0), (1.0, 1.0),
        (-1.0, 0.0), (0.0, 0.0), (1.0, 0.0),
        (-1.0, -1.0), (0.0, -1.0), (1.0, -1.0),
    ]
    edges = [
        (0, 1), (0, 3), (1, 2), (1, 4), (2, 4), (2, 5), (3, 4),
        (3, 6), (4, 5), (4, 6), (4, 7), (5, 8), (6, 7), (7, 8),
    ]
    return Board(points, edges)


def make_wheel4() -> Board:
    """Square 0-1-2-3 with hub 4 joined to every corner (four cells)."""
    points = [(-1.0, 1.0), (1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (0.0, 0.0)]
    edges = [(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]
    return Board(points, edges)


def make_diag_square() -> Board:
    """Square 0-1-2-3 split by the path 0-4-2 through the center."""
    points = [(-1.0, 1.0), (1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (0.0, 0.0)]
    edges = [(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (2, 4)]
    return Board(points, edges)


def make_bar_square() -> Board:
    """Square 0-1-2-3 with a horizontal bar 4-5 across the middle.

    The 180-degree rotation swaps 0<->2, 1<->3, 4<->5; the bar edge is
    the only edge paired with itself, and its endpoints are swapped.
    """
    points = [
        (-1.0, 1.0), (1.0, 1.0), (1.0, -1.0), (-1.0, -1.0),
        (-0.3, 0.0), (0.3, 0.0),
    ]
    edges = [
        (0, 1), (0, 3), (0, 4), (1, 2), (1, 5),
        (2, 3), (2, 5), (3, 4), (4, 5),
    ]
    return Board(points, edges)


def make_house() -> Board:
    """Gabled outline 0 (apex), 1, 2, 3, 4 with interior hub 5.

    Reflection across the vertical axis fixes 0 and 5, swaps 1<->4 and
    2<->3, and maps no edge to itself.
    """
    points = [
        (0.0, 2.0), (1.0, 1.0), (1.0, -1.0), (-1.0, -1.0),
        (-1.0, 1.0), (0.0, 0.0),
    ]
    edges = [
        (0, 1), (0, 4), (1, 2), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5),
    ]
    return Board(points, edges)


def make_house_braced() -> Board:
    """The house plus a brace 1-4 across the gable (self-paired with
    swapped endpoints under the reflection)."""
    points = [
        (0.0, 2.0), (1.0, 1.0), (1.0, -1.0), (-1.0, -1.0),
        (-1.0, 1.0), (0.0, 0.0),
    ]
    edges = [
        (0, 1), (0, 4), (1, 2), (1, 4), (1, 5),
        (2, 5), (3, 4), (3, 5), (4, 5),
    ]
    return Board(points, edges)


def make_kite() -> Board:
    """Two triangles sharing the vertical spine 0-3.

    Reflection across the spine swaps 1<->2 and fixes the spine edge
    with FIXED endpoints (0 and 3 are both fixed points).
    """
    points = [(0.0, 2.0), (1.0, 1.0), (-1.0, 1.0), (0.0, 0.0)]
    edges = [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]
    return Board(points, edges)


def make_steeple() -> Board:
    """Triangle 0-1-2 over two stacked quads (1-2-5-6 and 3-4-6-5).

    Reflection across the vertical axis fixes vertex 0, swaps 1<->2,
    3<->4, 5<->6, maps every cell to itself, and fixes three edges —
    too many for the pairing strategy to apply.
    """
    points = [
        (0.0, 2.0), (1.0, 1.0), (-1.0, 1.0),
        (-1.0, -0.34), (1.0, -0.34), (-1.0, 0.32), (1.0, 0.32),
    ]
    edges = [
        (0, 1), (0, 2), (1, 2), (1, 6), (2, 5),
        (3, 4), (3, 5), (4, 6), (5, 6),
    ]
    return Board(points, edges)


_BOARD_MAKERS = {
    "grid9": make_grid9,
    "wheel4": make_wheel4,
    "diag_square": make_diag_square,
    "bar_square": make_bar_square,
    "house": make_house,
    "house_braced": make_house_braced,
    "kite": make_kite,
    "steeple": make_steeple,
}

BOARD_NAMES = tuple(sorted(_BOARD_MAKERS))


# ----------------------------------------------------------------------
# Game records (move sequences as (tail, head) vertex pairs)
# ----------------------------------------------------------------------

RECORDS: dict[str, tuple[str, tuple[tuple[int, int], ...]]] = {
    # Static taxonomy position: leaves one unmarkable edge (2-5), a
    # saturated vertex (0), two almost-sinks (2 and 5) and an
    # almost-source (8).
    "taxonomy": ("grid9", ((0, 1), (3, 0), (1, 2), (4, 2), (6, 3), (4, 5), (8, 5))),
    # Four moves around the top-left lattice cell; the fourth completes
    # a clockwise cycle cell, so the second player wins.
    "square_cycle": ("grid9", ((0, 1), (1, 4), (4, 3), (3, 0))),
    # Second player answers through the 180-degree rotation; the game
    # drains with both remaining rim edges unmarkable after six moves.
    "wheel4": ("wheel4", ((0, 1), (3, 2), (0, 4), (4, 2), (4, 1), (3, 4))),
    # The rotation pairs the two center-path edges with each other
    # inside both cells, so answering through it fails: the first
    # player completes a cycle on move five.
    "diag_square": ("diag_square", ((1, 0), (2, 3), (0, 4), (4, 2), (2, 1))),
    # First player opens on the self-paired bar edge, answers through
    # the rotation, and takes the cycle the opponent must offer.
    "bar_square": ("bar_square", ((4, 5), (4, 3), (1, 5), (0, 4), (3, 0))),
    # Second player answers through the reflection and completes the
    # left triangle when the opener walks into it.
    "house": ("house", ((0, 1), (4, 0), (1, 2), (3, 4), (4, 5), (5, 3))),
    # Opening on a self-paired edge with FIXED endpoints loses: the
    # reflection strategy runs out of safe answers by move four.
    "kite": ("kite", ((0, 3), (1, 3), (3, 2), (2, 0))),
    # Opening on the self-paired brace (swapped endpoints) wins in
    # three: the answer to the reply already closes the gable triangle.
    "house_braced": ("house_braced", ((1, 4), (4, 0), (0, 1))),
}


def record_moves(board: Board, pairs: "tuple[tuple[int, int], ...]") -> list[Move]:
    """Convert (tail, head) vertex pairs into Move objects."""
    moves = []
    for tail, head in pairs:
        edge = board.edge_between(tail, head)
        if edge is None:
            raise ValueError(f"no edge between {tail} and {head}")
        moves.append(Move(edge=edge, tail=tail, head=head))
    return moves


def fixture_board(name: str) -> Board:
    """Construct a bundled board by name (canonical in-code definition)."""
    try:
        return _BOARD_MAKERS[name]()
    except KeyError:
        raise KeyError(f"unknown fixture board {name!r}") from None


def fixture_record(name: str) -> tuple[Board, list[Move]]:
    """Construct a bundled record by name (canonical in-code definition)."""
    try:
        board_name, pairs = RECORDS[name]
    except KeyError:
        raise KeyError(f"unknown fixture record {name!r}") from None
    board = fixture_board(board_name)
    return board, record_moves(board, pairs)


# ----------------------------------------------------------------------
# Data files
# ----------------------------------------------------------------------


def data_dir() -> Path:
    """Directory holding the generated fixture data files."""
    return Path(str(resources.files("cyclegame") / "data"))


def load_fixture_board(name: str) -> Board:
    """Load a bundled .board file."""
    path = data_dir() / f"{name}.board"
    return parse_board(path.read_text(encoding="utf-8"))


def load_fixture_record(name: str) -> tuple[Board, list[Move]]:
    """Load a bundled .record file (board reference resolved in-place)."""
    path = data_dir() / f"{name}.record"
    return load_record(path.read_text(encoding="utf-8"), base_dir=data_dir())


# ----------------------------------------------------------------------
# Orientation scenes
# ----------------------------------------------------------------------


def absorb_hex() -> tuple[Board, dict[int, tuple[int, int]]]:
    """Hexagonal cycle with eight interior stubs pointing at it.

    Returns the board and a raw arc mapping (not a valid complete
    orientation: each stub's interior endpoint is a source).  The
    hexagon cycle 0-1-2-3-4-5 is inside-absorbing.
    """
    points = [
        (0.0, 0.0), (1.3, 0.0), (1.9, 1.2), (0.8, 2.2), (-0.6, 1.6),
        (-0.6, 0.7),
        (0.8, 1.4), (1.0, 1.4), (1.0, 1.0), (0.9, 0.8), (0.5, 0.8),
        (0.3, 1.0), (0.3, 0.7), (0.2, 1.3),
    ]
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5),
        (3, 6), (2, 7), (2, 8), (1, 9), (0, 10), (5, 11), (5, 12), (4, 13),
    ]
    board = Board(points, edges)
    arcs = {
        0: (0, 1), 1: (1, 2), 2: (2, 3), 3: (3, 4), 4: (4, 5), 5: (5, 0),
        6: (6, 3), 7: (7, 2), 8: (8, 2), 9: (9, 1), 10: (10, 0),
        11: (11, 5), 12: (12, 5), 13: (13, 4),
    }
    return board, arcs


def spiral_octagon() -> tuple[Board, Orientation]:
    """Clockwise octagon ring feeding an interior spiral.

    Vertices 0..7 form the octagon (directed 0->7->6->...->1->0 — i.e.
    clockwise); 8..13 form a spiral with arcs 8->3, 9->8, 10->9, 2->11,
    11->12, 12->10, 13->10, 7->13.  Edge 0 is the octagon edge 0-7
    stored with tail 0, the deterministic starting arc of the
    cycle-cell search.
    """
    points = [
        (0.0, -0.2), (1.1, -0.2), (1.9, 0.5), (1.9, 1.6), (1.1, 2.2),
        (0.0, 2.2), (-0.8, 1.6), (-0.8, 0.5),
        (1.4, 1.4), (0.8, 1.7), (0.4, 1.1), (1.4, 0.8), (0.8, 0.5),
        (-0.3, 1.2),
    ]
    edges = [
        (0, 7), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7),
        (8, 3), (9, 8), (10, 9), (2, 11), (11, 12), (12, 10), (13, 10),
        (7, 13),
    ]
    board = Board(points, edges)
    arcs = [
        (0, 7), (1, 0), (2, 1), (3, 2), (4, 3), (5, 4), (6, 5), (7, 6),
        (8, 3), (9, 8), (10, 9), (2, 11), (11, 12), (12, 10), (13, 10),
        (7, 13),
    ]
    return board, Orientation.validate(board, arcs)


def ring_in_ring() -> tuple[Board, Orientation]:
    """Directed decagon (vertices 0..9) around a directed octagon
    (10..17) joined by eight outward spokes.

    Both rings run counterclockwise; each spoke points from its octagon
    vertex to a decagon vertex, so the decagon cycle is
    inside-absorbing and its gut is exactly the octagon subcomplex.
    """
    import math

    points = []
    for i in range(10):
        a = math.pi / 2 + 2 * math.pi * i / 10
        points.append((2 * math.cos(a), 2 * math.sin(a)))
    for i in range(8):
        a = math.pi / 2 + 2 * math.pi * i / 8
        points.append((math.cos(a), math.sin(a)))
    spoke_targets = [0, 1, 2, 4, 5, 6, 7, 9]
    edges = [(i, (i + 1) % 10) for i in range(10)]
    edges += [(10 + i, 10 + (i + 1) % 8) for i in range(8)]
    edges += [(10 + i, spoke_targets[i]) for i in range(8)]
    board = Board(points, edges)
    arcs = [(u, v) for u, v in edges]
    return board, Orientation.validate(board, arcs)


def twin_triangles() -> tuple[Board, Orientation]:
    """Two directed triangles joined by a bar inside a directed ring.

    Triangle 0-2-3 runs 0->2->3->0, triangle 1-4-5 runs 1->4->5->1, the
    bar points 1->0, and nine outward spokes feed a counterclockwise
    ring 6..14.  The ring's gut is the connected triangles-plus-bar
    complex, including both triangle cells.
    """
    import math

    inner = [
        (-0.5, 0.0), (0.5, 0.0),            # 0 = left hub, 1 = right hub
        (-1.5, 0.6), (-1.5, -0.6),          # 2, 3 = left triangle rim
        (1.5, 0.6), (1.5, -0.6),            # 4, 5 = right triangle rim
    ]
    ring_angles = [100, 158, 195, 215, 260, 300, 335, 25, 60]
    ring = [
        (3 * math.cos(math.radians(a)), 3 * math.sin(math.radians(a)))
        for a in ring_angles
    ]
    points = inner + ring
    edges = [
        (0, 2), (2, 3), (0, 3),             # left triangle
        (1, 4), (4, 5), (1, 5),             # right triangle
        (0, 1),                             # bar
    ]
    # Spokes: ring vertex ids 6..14 at the angles above, fed by the
    # nearest inner vertex.
    spoke_sources = [0, 2, 3, 3, 0, 1, 5, 4, 1]
    edges += [(spoke_sources[i], 6 + i) for i in range(9)]
    edges += [(6 + i, 6 + (i + 1) % 9) for i in range(9)]
    board = Board(points, edges)
    arcs = [
        (0, 2), (2, 3), (3, 0),
        (1, 4), (4, 5), (5, 1),
        (1, 0),
    ]
    arcs += [(spoke_sources[i], 6 + i) for i in range(9)]
    arcs += [(6 + i, 6 + (i + 1) % 9) for i in range(9)]
    return board, Orientation.validate(board, arcs)
