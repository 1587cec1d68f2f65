"""Board families: sizes, shapes, and parameter validation."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclegame.generators import (
    gen_cycle,
    gen_cycle_chord,
    gen_cycle_flap,
    gen_grid,
    gen_k4,
    gen_two_cell,
)
from cyclegame.strategies import detect_chord, detect_flap


def test_k4_shape():
    b = gen_k4()
    assert (b.n_vertices, b.n_edges, b.n_cells) == (4, 6, 3)
    degrees = sorted(b.degree(v) for v in range(4))
    assert degrees == [3, 3, 3, 3]


@given(st.integers(3, 12))
def test_cycle_shape(n):
    b = gen_cycle(n)
    assert (b.n_vertices, b.n_edges, b.n_cells) == (n, n, 1)
    assert all(b.degree(v) == 2 for v in range(n))


@given(st.integers(4, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 2))))
def test_chord_shape(params):
    n, split = params
    b = gen_cycle_chord(n, split)
    assert (b.n_vertices, b.n_edges, b.n_cells) == (n, n + 1, 2)
    summary = detect_chord(b)
    assert summary is not None
    assert summary.ring_size == n
    assert summary.chord_edge == n  # chord appended after ring edges
    # The chord splits the ring into arcs of sizes split and n - split.
    arc_sizes = sorted(len(c.edges) - 1 for c in b.cells)
    assert arc_sizes == sorted((split, n - split))


@given(st.integers(3, 10))
def test_flap_shape(n):
    b = gen_cycle_flap(n)
    assert (b.n_vertices, b.n_edges, b.n_cells) == (n + 1, n + 2, 2)
    summary = detect_flap(b)
    assert summary is not None
    assert summary.ring_size == n
    assert b.degree(summary.apex) == 2
    triangle = b.cells[summary.triangle_cell]
    assert len(triangle.edges) == 3


def test_grid_shape():
    b = gen_grid(2, 2)
    assert (b.n_vertices, b.n_edges, b.n_cells) == (9, 12, 4)
    b = gen_grid(1, 3)
    assert (b.n_vertices, b.n_edges, b.n_cells) == (8, 10, 3)


@given(st.integers(4, 9), st.integers(4, 9))
def test_two_cell_shape(a, b_size):
    # Two cells sharing a two-edge path.
    b = gen_two_cell(a, b_size)
    assert b.n_cells == 2
    assert b.n_edges == a + b_size - 2
    assert b.n_vertices == a + b_size - 3
    sizes = sorted(len(c.edges) for c in b.cells)
    assert sizes == sorted((a, b_size))


def test_parameter_validation():
    with pytest.raises(ValueError):
        gen_cycle(2)
    with pytest.raises(ValueError):
        gen_cycle_chord(4, 1)
    with pytest.raises(ValueError):
        gen_cycle_chord(4, 4)
    with pytest.raises(ValueError):
        gen_cycle_flap(2)
    with pytest.raises(ValueError):
        gen_grid(0, 2)
    with pytest.raises(ValueError):
        gen_two_cell(3, 4)


def test_families_not_misdetected():
    assert detect_chord(gen_k4()) is None
    assert detect_chord(gen_cycle_flap(5)) is None
    assert detect_flap(gen_k4()) is None
    assert detect_flap(gen_cycle_chord(6, 3)) is None
    assert detect_flap(gen_two_cell(4, 4)) is None
