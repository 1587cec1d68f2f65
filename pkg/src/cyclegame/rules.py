"""Game-state machine: legality, cycle-cell detection, and move taxonomy.

The game: two players alternately mark an unmarked edge of a planar board
with an arrow.  No vertex may ever become a sink (all incident edges
marked inward) or a source (all outward).  A player who completes a cycle
cell — a bounded cell whose boundary edges are all marked and cycle
coherently one way around it — wins immediately; otherwise the player who
makes the last possible move wins.  The degenerate game with no possible
first move is won by Player 2 (a player unable to move loses).

Taxonomy (all derivable from a position):

* markable / unmarkable edge: an unmarked edge with at least one / no
  legal direction; unmarkability is permanent.
* death move: a legal move after which the opponent can immediately
  complete a cycle cell.
* currently unplayable edge: an unmarked edge with at least one legal
  direction, all of whose legal directions are death moves.
* almost-sink / almost-source vertex: exactly one incident edge unmarked
  and every other incident edge marked inward / outward.

Game record format (UTF-8 JSON)::

    {"board": "path/to/file.board" | {inline board document},
     "moves": [{"edge": 0, "tail": 1, "head": 2}, ...]}

Replay validates every move.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

from .board import Board, BoardError, board_from_obj, board_obj, parse_board

__all__ = [
    "EdgeStatus",
    "GameState",
    "IllegalMoveError",
    "Move",
    "RecordError",
    "apply_move",
    "classify_edge",
    "classify_vertex",
    "cycle_cells",
    "is_cycle_completing",
    "is_death_move",
    "legal_directions",
    "legal_moves",
    "load_record",
    "record_to_json",
    "replay",
    "scan_cycle_cells",
    "winner_if_terminal",
]

Marking = "tuple[int, int] | None"


class Move(NamedTuple):
    """An arrow: edge id plus the chosen (tail, head) endpoint order."""

    edge: int
    tail: int
    head: int


class IllegalMoveError(ValueError):
    """A move rejected by the rules.

    Attributes:
        rule: the violated rule — one of ``game over``, ``unknown edge``,
            ``bad endpoints``, ``edge marked``, ``sink``, ``source``.
    """

    def __init__(self, rule: str, message: str) -> None:
        super().__init__(message)
        self.rule = rule


class RecordError(ValueError):
    """Malformed or inconsistent game-record document."""


class GameState:
    """Mutable game position: a board plus per-edge markings and history.

    Apply/undo form an exact pair, so search code can explore destructively
    and restore the parent position.  ``apply_move`` offers the
    copy-on-apply alternative.  A single instance must not be mutated
    concurrently.
    """

    __slots__ = ("board", "markings", "history")

    def __init__(self, board: Board) -> None:
        self.board = board
        self.markings: list[tuple[int, int] | None] = [None] * board.n_edges
        self.history: list[Move] = []

    @classmethod
    def from_moves(cls, board: Board, moves: list[Move]) -> "GameState":
        state = cls(board)
        for m in moves:
            state.apply(m)
        return state

    @classmethod
    def from_markings(
        cls, board: Board, markings: dict[int, tuple[int, int]]
    ) -> "GameState":
        """Adopt raw markings without replay (history left empty).

        Raises:
            IllegalMoveError: the markings contain a sink or a source.
        """
        state = cls(board)
        for e, (t, h) in markings.items():
            if frozenset((t, h)) != frozenset(board.endpoints(e)):
                raise IllegalMoveError(
                    "bad endpoints", f"({t}, {h}) does not match edge {e}"
                )
            state.markings[e] = (t, h)
        for v in range(board.n_vertices):
            incident = board.vertex_edges(v)
            if incident and all(state.markings[e] is not None for e in incident):
                if all(state.markings[e][1] == v for e in incident):
                    raise IllegalMoveError("sink", f"vertex {v} is a sink")
                if all(state.markings[e][0] == v for e in incident):
                    raise IllegalMoveError("source", f"vertex {v} is a source")
        return state

    @property
    def to_move(self) -> int:
        """Player to move: 1 on even history length, else 2."""
        return 1 if len(self.history) % 2 == 0 else 2

    @property
    def last_move(self) -> Move | None:
        return self.history[-1] if self.history else None

    @property
    def marked_count(self) -> int:
        return len(self.history)

    def copy(self) -> "GameState":
        dup = GameState(self.board)
        dup.markings = list(self.markings)
        dup.history = list(self.history)
        return dup

    def direction_legal(self, edge: int, tail: int, head: int) -> bool:
        """True iff marking edge as tail -> head violates no rule.

        Only checks the sink/source rule and markedness; assumes the
        (tail, head) pair matches the edge.
        """
        if self.markings[edge] is not None:
            return False
        # tail gains an out-arc: tail may become a source.
        incident_t = self.board.vertex_edges(tail)
        if all(
            e == edge or (self.markings[e] is not None and self.markings[e][0] == tail)
            for e in incident_t
        ):
            return False
        # head gains an in-arc: head may become a sink.
        incident_h = self.board.vertex_edges(head)
        if all(
            e == edge or (self.markings[e] is not None and self.markings[e][1] == head)
            for e in incident_h
        ):
            return False
        return True

    def apply(self, move: Move, *, check: bool = True) -> None:
        """Make a move in place.

        Raises:
            IllegalMoveError: with the violated rule named, when check is on.
        """
        edge, tail, head = move
        if check:
            if winner_if_terminal(self) is not None:
                raise IllegalMoveError("game over", "the game is already over")
            if not (0 <= edge < self.board.n_edges):
                raise IllegalMoveError("unknown edge", f"no edge {edge}")
            if frozenset((tail, head)) != frozenset(self.board.endpoints(edge)):
                raise IllegalMoveError(
                    "bad endpoints",
                    f"({tail}, {head}) does not match edge {edge} endpoints "
                    f"{self.board.endpoints(edge)}",
                )
            if self.markings[edge] is not None:
                raise IllegalMoveError("edge marked", f"edge {edge} is already marked")
            incident_t = self.board.vertex_edges(tail)
            if all(
                e == edge
                or (self.markings[e] is not None and self.markings[e][0] == tail)
                for e in incident_t
            ):
                raise IllegalMoveError(
                    "source", f"marking {tail} -> {head} would make vertex {tail} a source"
                )
            incident_h = self.board.vertex_edges(head)
            if all(
                e == edge
                or (self.markings[e] is not None and self.markings[e][1] == head)
                for e in incident_h
            ):
                raise IllegalMoveError(
                    "sink", f"marking {tail} -> {head} would make vertex {head} a sink"
                )
        self.markings[edge] = (tail, head)
        self.history.append(Move(edge, tail, head))

    def undo(self) -> Move:
        """Retract the most recent move and return it."""
        move = self.history.pop()
        self.markings[move.edge] = None
        return move

    def key(self) -> int:
        """Canonical position key: 2 bits per edge.

        0 = unmarked, 1 = tail is the lower-numbered endpoint, 2 = tail is
        the higher-numbered endpoint.  The player to move is derivable
        from the marked-edge count and is deliberately excluded.
        """
        k = 0
        for e, mark in enumerate(self.markings):
            if mark is None:
                continue
            u, v = self.board.endpoints(e)
            code = 1 if mark[0] == min(u, v) else 2
            k |= code << (2 * e)
        return k

    def __repr__(self) -> str:
        return (
            f"GameState(marked={self.marked_count}/{self.board.n_edges}, "
            f"to_move={self.to_move})"
        )


# ----------------------------------------------------------------------
# Core rule queries
# ----------------------------------------------------------------------


def legal_directions(state: GameState, edge: int) -> list[tuple[int, int]]:
    """Legal (tail, head) orders for an edge, sorted by tail id."""
    u, v = state.board.endpoints(edge)
    out = []
    for tail, head in sorted(((u, v), (v, u))):
        if state.direction_legal(edge, tail, head):
            out.append((tail, head))
    return out


def legal_moves(state: GameState) -> list[Move]:
    """All legal moves, sorted by (edge id, tail id) for determinism."""
    moves: list[Move] = []
    for e in range(state.board.n_edges):
        for tail, head in legal_directions(state, e):
            moves.append(Move(e, tail, head))
    return moves


def has_legal_move(state: GameState) -> bool:
    for e in range(state.board.n_edges):
        if state.markings[e] is None and legal_directions(state, e):
            return True
    return False


def apply_move(state: GameState, move: Move) -> GameState:
    """Copy-on-apply: return a new state with the move made.

    Raises:
        IllegalMoveError: with the violated rule named.
    """
    new = state.copy()
    new.apply(move)
    return new


def scan_cycle_cells(
    board: Board, markings: "list[tuple[int, int] | None] | dict[int, tuple[int, int]]"
) -> list[tuple[int, str]]:
    """Cycle cells of a raw marking (no legality assumed).

    A cell is a cycle cell when every boundary edge is marked and the
    arrows cycle coherently around it.  Cells whose boundary walk repeats
    an edge (a bridge dangling inside) can never qualify.

    Returns:
        (cell id, direction) pairs; direction is "ccw" when the arrows
        follow the stored counterclockwise boundary walk, else "cw".
    """
    if isinstance(markings, dict):
        marks: list[tuple[int, int] | None] = [None] * board.n_edges
        for e, arc in markings.items():
            marks[e] = arc
    else:
        marks = list(markings)
    found: list[tuple[int, str]] = []
    for cell in board.cells:
        direction: int | None = None
        ok = True
        k = len(cell.vertices)
        for i in range(k):
            a = cell.vertices[i]
            b = cell.vertices[(i + 1) % k]
            mark = marks[cell.edges[i]]
            if mark is None:
                ok = False
                break
            if mark == (a, b):
                step = 1
            elif mark == (b, a):
                step = -1
            else:  # pragma: no cover - inconsistent marking
                ok = False
                break
            if direction is None:
                direction = step
            elif direction != step:
                ok = False
                break
        if ok and direction is not None:
            found.append((cell.id, "ccw" if direction == 1 else "cw"))
    return found


def cycle_cells(state: GameState) -> list[tuple[int, str]]:
    """Cycle cells of a position: see scan_cycle_cells."""
    return scan_cycle_cells(state.board, state.markings)


def winner_if_terminal(state: GameState) -> int | None:
    """Winner of a finished game, or None while play continues.

    A completed cycle cell awards the game to the player who made the
    last move; with no cycle and no legal move remaining, the last mover
    wins (Player 2 when no move was ever possible).
    """
    if cycle_cells(state):
        return 1 if len(state.history) % 2 == 1 else 2
    if not has_legal_move(state):
        return 1 if len(state.history) % 2 == 1 else 2
    return None


def is_cycle_completing(state: GameState, move: Move) -> bool:
    """True iff the move immediately completes a cycle cell."""
    board = state.board
    for cell_id in board.edge_cells[move.edge]:
        cell = board.cells[cell_id]
        direction: int | None = None
        ok = True
        k = len(cell.vertices)
        for i in range(k):
            a = cell.vertices[i]
            b = cell.vertices[(i + 1) % k]
            e = cell.edges[i]
            mark = (move.tail, move.head) if e == move.edge else state.markings[e]
            if mark is None:
                ok = False
                break
            if mark == (a, b):
                step = 1
            elif mark == (b, a):
                step = -1
            else:
                ok = False
                break
            if direction is None:
                direction = step
            elif direction != step:
                ok = False
                break
        if ok and direction is not None:
            return True
    return False


def is_death_move(state: GameState, move: Move) -> bool:
    """True iff after this move the opponent can complete a cycle cell.

    The move itself must be legal and not immediately winning (a winning
    move is never a death move — the game ends first).
    """
    if is_cycle_completing(state, move):
        return False
    state.apply(move, check=False)
    try:
        for e in range(state.board.n_edges):
            if state.markings[e] is None:
                for tail, head in legal_directions(state, e):
                    if is_cycle_completing(state, Move(e, tail, head)):
                        return True
        return False
    finally:
        state.undo()


# ----------------------------------------------------------------------
# Taxonomy
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeStatus:
    """Classification of one edge in a position.

    Attributes:
        edge: edge id.
        status: "marked", "markable", or "unmarkable".
        directions: legal (tail, head) orders (empty unless markable).
        death_directions: the subset of directions that are death moves.
        currently_unplayable: markable, but every legal direction is a
            death move.
    """

    edge: int
    status: str
    directions: tuple[tuple[int, int], ...]
    death_directions: tuple[tuple[int, int], ...]
    currently_unplayable: bool


def classify_edge(state: GameState, edge: int) -> EdgeStatus:
    """Full per-edge taxonomy (one-ply lookahead for death moves)."""
    if state.markings[edge] is not None:
        return EdgeStatus(edge, "marked", (), (), False)
    directions = tuple(legal_directions(state, edge))
    if not directions:
        return EdgeStatus(edge, "unmarkable", (), (), False)
    deaths = tuple(
        (t, h) for t, h in directions if is_death_move(state, Move(edge, t, h))
    )
    unplayable = len(deaths) == len(directions)
    return EdgeStatus(edge, "markable", directions, deaths, unplayable)


def classify_vertex(state: GameState, vertex: int) -> str:
    """Vertex status: neutral, almost-sink, almost-source, or saturated."""
    incident = state.board.vertex_edges(vertex)
    unmarked = [e for e in incident if state.markings[e] is None]
    marked = [e for e in incident if state.markings[e] is not None]
    if incident and not unmarked:
        return "saturated"
    if len(unmarked) == 1 and marked:
        if all(state.markings[e][1] == vertex for e in marked):
            return "almost-sink"
        if all(state.markings[e][0] == vertex for e in marked):
            return "almost-source"
    return "neutral"


# ----------------------------------------------------------------------
# Records
# ----------------------------------------------------------------------


def replay(board: Board, moves: "list[Move] | list[tuple[int, int, int]]") -> GameState:
    """Replay a move list from the empty position, validating every move."""
    state = GameState(board)
    for m in moves:
        state.apply(Move(*m))
    return state


def load_record(
    text: str,
    base_dir: "Path | str | None" = None,
    board: Board | None = None,
) -> tuple[Board, list[Move]]:
    """Parse a game record; resolve its board by reference or inline.

    Args:
        text: record document.
        base_dir: directory for resolving a board file reference.
        board: overrides the record's own board when given.

    Raises:
        RecordError: malformed document or unresolvable board.
        BoardError: the referenced/inline board is invalid.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RecordError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "moves" not in doc:
        raise RecordError("record document needs a 'moves' array")
    if not isinstance(doc["moves"], list):
        raise RecordError("'moves' must be an array")
    if board is None:
        ref = doc.get("board")
        if isinstance(ref, str):
            path = Path(ref)
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            try:
                board = parse_board(path.read_text(encoding="utf-8"))
            except OSError as exc:
                raise RecordError(f"cannot read board file {path}: {exc}") from exc
        elif isinstance(ref, dict):
            board = board_from_obj(ref)
        else:
            raise RecordError("record has no usable 'board' reference")
    moves: list[Move] = []
    for row in doc["moves"]:
        if not isinstance(row, dict) or not {"edge", "tail", "head"} <= set(row):
            raise RecordError(f"bad move row: {row!r}")
        if not all(
            isinstance(row[k], int) and not isinstance(row[k], bool)
            for k in ("edge", "tail", "head")
        ):
            raise RecordError(f"move fields must be integers: {row!r}")
        moves.append(Move(row["edge"], row["tail"], row["head"]))
    return board, moves


def record_obj(board_ref: "str | Board", moves: list[Move]) -> dict:
    """Record document object; board by path reference or inline."""
    board_field: object
    if isinstance(board_ref, Board):
        board_field = board_obj(board_ref)
    else:
        board_field = board_ref
    return {
        "board": board_field,
        "moves": [{"edge": m.edge, "tail": m.tail, "head": m.head} for m in moves],
    }


def record_to_json(board_ref: "str | Board", moves: list[Move]) -> str:
    return json.dumps(record_obj(board_ref, moves), separators=(",", ":")) + "\n"
