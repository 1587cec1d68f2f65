"""cyclegame: engine for an arrow-marking cycle-completion game on planar boards."""

from .board import Board, BoardError, Cell, board_to_json, parse_board
from .rules import (
    GameState,
    IllegalMoveError,
    Move,
    apply_move,
    classify_edge,
    classify_vertex,
    cycle_cells,
    legal_moves,
    winner_if_terminal,
)
from .solver import SolveResult, enumerate_playouts, solve, verify_strategy

__version__ = "0.1.0"

__all__ = [
    "Board",
    "BoardError",
    "Cell",
    "GameState",
    "IllegalMoveError",
    "Move",
    "SolveResult",
    "apply_move",
    "board_to_json",
    "classify_edge",
    "classify_vertex",
    "cycle_cells",
    "enumerate_playouts",
    "legal_moves",
    "parse_board",
    "solve",
    "verify_strategy",
    "__version__",
]
