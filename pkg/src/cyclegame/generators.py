"""Constructors for the named board families, with canonical coordinates.

Families:

* ``gen_cycle(n)``: a single n-gon cell (regular polygon, circumradius 1).
* ``gen_k4()``: complete graph on four vertices, one central.
* ``gen_cycle_chord(n, split)``: an n-cycle plus one internal chord that
  splits it into cells of boundary sizes split+1 and n-split+1.
* ``gen_cycle_flap(n)``: an n-cycle plus one internal vertex joined to
  two adjacent cycle vertices (a triangle cell inside the big cell).
* ``gen_grid(rows, cols)``: unit grid with rows x cols square cells.
* ``gen_two_cell(a, b)``: two cells with boundary sizes a and b glued
  along a shared path of two edges.
"""

from __future__ import annotations

import math

from .board import Board

__all__ = [
    "FAMILIES",
    "gen_cycle",
    "gen_cycle_chord",
    "gen_cycle_flap",
    "gen_grid",
    "gen_k4",
    "gen_two_cell",
]


def _polygon(n: int, radius: float = 1.0, phase: float = math.pi / 2) -> list[tuple[float, float]]:
    """n points counterclockwise on a circle, starting at angle phase."""
    return [
        (
            radius * math.cos(phase + 2 * math.pi * i / n),
            radius * math.sin(phase + 2 * math.pi * i / n),
        )
        for i in range(n)
    ]


def gen_cycle(n: int) -> Board:
    """Cycle board C_n: one cell bounded by n edges.

    Raises:
        ValueError: n < 3.
    """
    if n < 3:
        raise ValueError(f"cycle board needs n >= 3, got {n}")
    points = _polygon(n)
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Board(points, edges)


def gen_k4() -> Board:
    """Complete graph on 4 vertices: central vertex 0, triangle 1-2-3."""
    points = [(0.0, 0.0), (0.0, 1.0), (1.0, -0.7), (-1.0, -0.7)]
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return Board(points, edges)


def gen_cycle_chord(n: int, split: int) -> Board:
    """Cycle C_n plus a chord from vertex 0 to vertex ``split``.

    The chord splits the cell into boundary sizes split+1 and n-split+1.

    Raises:
        ValueError: n < 4 or split outside [2, n-2].
    """
    if n < 4:
        raise ValueError(f"chord board needs n >= 4, got {n}")
    if not 2 <= split <= n - 2:
        raise ValueError(f"chord split must be in [2, {n - 2}], got {split}")
    points = _polygon(n)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.append((0, split))
    return Board(points, edges)


def gen_cycle_flap(n: int) -> Board:
    """Cycle C_n plus an internal vertex joined to vertices 0 and 1.

    Cells: a triangle (vertices 0, 1, n) and a big cell of boundary
    size n+1.

    Raises:
        ValueError: n < 3.
    """
    if n < 3:
        raise ValueError(f"flap board needs n >= 3, got {n}")
    points = _polygon(n)
    # Place the flap vertex inside, near the midpoint of edge (0, 1).
    mx = (points[0][0] + points[1][0]) / 2
    my = (points[0][1] + points[1][1]) / 2
    points.append((mx * 0.55, my * 0.55))
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.append((0, n))
    edges.append((1, n))
    return Board(points, edges)


def gen_grid(rows: int, cols: int) -> Board:
    """Unit grid with rows x cols square cells.

    Vertices are numbered row-major on the (rows+1) x (cols+1) lattice;
    horizontal edges come before vertical edges within each vertex's
    row-major scan.

    Raises:
        ValueError: rows or cols < 1.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"grid needs rows, cols >= 1, got {rows}x{cols}")
    points = [
        (float(c), float(rows - r)) for r in range(rows + 1) for c in range(cols + 1)
    ]

    def vid(r: int, c: int) -> int:
        return r * (cols + 1) + c

    edges: list[tuple[int, int]] = []
    for r in range(rows + 1):
        for c in range(cols + 1):
            if c < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Board(points, edges)


def gen_two_cell(a: int, b: int) -> Board:
    """Two cells of boundary sizes a and b sharing a path of two edges.

    The shared path is vertical through vertices 0 (top), 1 (middle),
    2 (bottom); the a-cell closes it to the left, the b-cell to the
    right.  Totals: a+b-3 vertices, a+b-2 edges, 2 cells.

    Raises:
        ValueError: a or b < 4.
    """
    if a < 4 or b < 4:
        raise ValueError(f"two-cell board needs a, b >= 4, got {a}, {b}")
    points: list[tuple[float, float]] = [(0.0, 1.0), (0.0, 0.0), (0.0, -1.0)]
    edges: list[tuple[int, int]] = [(0, 1), (1, 2)]
    # Left arc: a - 3 intermediate vertices joining 2 -> ... -> 0.
    left = [
        (-1.6 * math.cos(-math.pi / 2 + math.pi * i / (a - 2)),
         math.sin(-math.pi / 2 + math.pi * i / (a - 2)))
        for i in range(1, a - 2)
    ]
    right = [
        (1.6 * math.cos(-math.pi / 2 + math.pi * i / (b - 2)),
         math.sin(-math.pi / 2 + math.pi * i / (b - 2)))
        for i in range(1, b - 2)
    ]
    prev = 2
    for pt in left:
        points.append(pt)
        edges.append((prev, len(points) - 1))
        prev = len(points) - 1
    edges.append((prev, 0))
    prev = 2
    for pt in right:
        points.append(pt)
        edges.append((prev, len(points) - 1))
        prev = len(points) - 1
    edges.append((prev, 0))
    return Board(points, edges)


FAMILIES: dict[str, tuple] = {
    "k4": (gen_k4, ()),
    "cycle": (gen_cycle, ("n",)),
    "chord": (gen_cycle_chord, ("n", "split")),
    "flap": (gen_cycle_flap, ("n",)),
    "grid": (gen_grid, ("rows", "cols")),
    "two-cell": (gen_two_cell, ("a", "b")),
}
