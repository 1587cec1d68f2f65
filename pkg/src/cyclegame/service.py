"""HTTP game service: boards catalog, sessions, moves, engine replies.

Endpoints:
    GET    /boards             catalog of built-in and user-supplied boards
    GET    /boards/{id}        full board document (geometry and cells)
    POST   /games              create a session (engine may open immediately)
    GET    /games/{id}         full position report
    POST   /games/{id}/moves   apply a human move, then the engine reply
    DELETE /games/{id}         end a session

Errors: 404 unknown board/game ids; 409 for rejected moves, with a body
naming the violated rule (``sink``, ``source``, ``edge marked``,
``game over``, ``not your turn``); 422 malformed or unsupported request
bodies.

Sessions live in memory.  Each session's mutations are serialized by a
lock.  With ``snapshot_dir`` set, every mutation rewrites a game-record
file for the session, in the same format the CLI reads and writes.
"""

from __future__ import annotations

import threading
import time
import uuid
from pathlib import Path

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .board import Board, BoardError, board_obj, parse_board
from .generators import (
    gen_cycle,
    gen_cycle_chord,
    gen_cycle_flap,
    gen_grid,
    gen_k4,
    gen_two_cell,
)
from .rules import (
    GameState,
    IllegalMoveError,
    Move,
    classify_edge,
    classify_vertex,
    cycle_cells,
    record_to_json,
    winner_if_terminal,
)
from .strategies import FamilyError, Policy, StrategyError, get_policy
from . import fixtures

OPTIMAL_EDGE_LIMIT = 16


class ApiError(Exception):
    """Service failure carrying an HTTP status and optional rule name."""

    def __init__(self, status: int, message: str, rule: str | None = None):
        super().__init__(message)
        self.status = status
        self.rule = rule


class Session:
    """One live game: state, engine seat, policy, and a mutation lock."""

    def __init__(
        self, game_id: str, board_id: str, board: Board, engine_player: int,
        policy: Policy | None, policy_name: str | None,
    ):
        self.id = game_id
        self.board_id = board_id
        self.board = board
        self.engine_player = engine_player
        self.policy = policy
        self.policy_name = policy_name
        self.state = GameState(board)
        self.moves: list[Move] = []
        self.created = time.time()
        self.lock = threading.Lock()


class NewGameBody(BaseModel):
    board_id: str
    engine_player: int = Field(ge=0, le=2)
    policy: str = "optimal"


class MoveBody(BaseModel):
    edge: int
    tail: int
    head: int


def _build_catalog(boards_dir: str | Path | None) -> dict[str, dict]:
    """Immutable board catalog: generated families, fixtures, user files."""
    catalog: dict[str, dict] = {}

    def add(board_id: str, name: str, source: str, board: Board) -> None:
        catalog[board_id] = {
            "id": board_id,
            "name": name,
            "source": source,
            "vertices": board.n_vertices,
            "edges": board.n_edges,
            "cells": board.n_cells,
            "board": board,
        }

    add("k4", "complete graph K4", "generated", gen_k4())
    for n in range(3, 9):
        add(f"cycle-{n}", f"cycle of length {n}", "generated", gen_cycle(n))
    for n, split in ((5, 2), (6, 3), (8, 3)):
        add(
            f"chord-{n}-{split}",
            f"{n}-cycle with a chord at {split}",
            "generated",
            gen_cycle_chord(n, split),
        )
    for n in (4, 5):
        add(f"flap-{n}", f"{n}-cycle with a flap", "generated", gen_cycle_flap(n))
    add("grid-2-2", "2x2 grid", "generated", gen_grid(2, 2))
    add("two-cell-4-4", "two cells sharing a path", "generated", gen_two_cell(4, 4))
    for name in fixtures.BOARD_NAMES:
        add(name, name.replace("_", " "), "fixture", fixtures.fixture_board(name))
    if boards_dir is not None:
        for path in sorted(Path(boards_dir).glob("*.board")):
            try:
                board = parse_board(path.read_text(encoding="utf-8"))
            except (OSError, BoardError):
                continue
            board_id = path.stem
            if board_id in catalog:
                board_id = f"file-{board_id}"
            add(board_id, path.stem, "file", board)
    return catalog


def _move_obj(move: Move, player: int | None = None) -> dict:
    obj = {"edge": move.edge, "tail": move.tail, "head": move.head}
    if player is not None:
        obj["player"] = player
    return obj


def _game_obj(session: Session) -> dict:
    """Full position report: geometry, markings, taxonomy, outcome."""
    state = session.state
    board = session.board
    winner = winner_if_terminal(state)
    edges = [classify_edge(state, e) for e in range(board.n_edges)]
    legal = [
        {"edge": s.edge, "tail": t, "head": h, "death": (t, h) in s.death_directions}
        for s in edges
        for (t, h) in s.directions
    ]
    return {
        "id": session.id,
        "board_id": session.board_id,
        "board": board_obj(board),
        "cells": [
            {"id": c.id, "vertices": list(c.vertices), "edges": list(c.edges)}
            for c in board.cells
        ],
        "engine_player": session.engine_player,
        "policy": session.policy_name,
        "to_move": state.to_move,
        "winner": winner,
        "cycle_cells": [
            {"cell": cid, "direction": direction}
            for cid, direction in cycle_cells(state)
        ],
        "markings": [
            None if m is None else {"tail": m[0], "head": m[1]}
            for m in state.markings
        ],
        "moves": [
            _move_obj(m, 1 + i % 2) for i, m in enumerate(session.moves)
        ],
        "legal_moves": legal,
        "edges": [
            {
                "edge": s.edge,
                "status": s.status,
                "directions": [list(d) for d in s.directions],
                "death_directions": [list(d) for d in s.death_directions],
                "currently_unplayable": s.currently_unplayable,
            }
            for s in edges
        ],
        "vertices": [
            {"vertex": v, "status": classify_vertex(state, v)}
            for v in range(board.n_vertices)
        ],
        "unmarkable": [s.edge for s in edges if s.status == "unmarkable"],
    }


def create_app(
    boards_dir: str | Path | None = None,
    snapshot_dir: str | Path | None = None,
) -> FastAPI:
    """Build the service application.

    Args:
        boards_dir: optional directory of extra ``.board`` files to offer.
        snapshot_dir: when set, every mutation rewrites
            ``{snapshot_dir}/{game_id}.record`` (board inline).
    """
    app = FastAPI(title="cyclegame service")
    catalog = _build_catalog(boards_dir)
    sessions: dict[str, Session] = {}
    sessions_lock = threading.Lock()
    snapshot_path = Path(snapshot_dir) if snapshot_dir is not None else None
    if snapshot_path is not None:
        snapshot_path.mkdir(parents=True, exist_ok=True)

    @app.exception_handler(ApiError)
    async def api_error_handler(_request, exc: ApiError):
        body = {"detail": str(exc)}
        if exc.rule is not None:
            body["rule"] = exc.rule
        return JSONResponse(status_code=exc.status, content=body)

    def get_session(game_id: str) -> Session:
        session = sessions.get(game_id)
        if session is None:
            raise ApiError(404, f"no game {game_id}")
        return session

    def snapshot(session: Session) -> None:
        if snapshot_path is None:
            return
        (snapshot_path / f"{session.id}.record").write_text(
            record_to_json(session.board, session.moves), encoding="utf-8"
        )

    def engine_reply(session: Session) -> Move | None:
        state = session.state
        if session.engine_player == 0 or session.policy is None:
            return None
        if winner_if_terminal(state) is not None:
            return None
        if state.to_move != session.engine_player:
            return None
        move = session.policy(state)
        state.apply(move, check=True)
        session.moves.append(move)
        return move

    @app.get("/boards")
    def list_boards():
        return {
            "boards": [
                {k: v for k, v in entry.items() if k != "board"}
                for entry in catalog.values()
            ]
        }

    @app.get("/boards/{board_id}")
    def get_board(board_id: str):
        entry = catalog.get(board_id)
        if entry is None:
            raise ApiError(404, f"no board {board_id}")
        board: Board = entry["board"]
        obj = {k: v for k, v in entry.items() if k != "board"}
        obj["board"] = board_obj(board)
        obj["cells"] = [
            {"id": c.id, "vertices": list(c.vertices), "edges": list(c.edges)}
            for c in board.cells
        ]
        return obj

    @app.post("/games", status_code=201)
    def new_game(body: NewGameBody):
        entry = catalog.get(body.board_id)
        if entry is None:
            raise ApiError(404, f"no board {body.board_id}")
        board: Board = entry["board"]
        policy = None
        policy_name = None
        if body.engine_player != 0:
            if body.policy == "optimal" and board.n_edges > OPTIMAL_EDGE_LIMIT:
                raise ApiError(
                    422,
                    f"policy 'optimal' supports at most {OPTIMAL_EDGE_LIMIT} "
                    f"edges; board has {board.n_edges} — choose another policy",
                )
            try:
                policy = get_policy(body.policy, board)
            except (ValueError, FamilyError) as exc:
                raise ApiError(422, f"policy {body.policy!r}: {exc}") from exc
            policy_name = body.policy
        game_id = uuid.uuid4().hex[:16]
        session = Session(
            game_id, body.board_id, board, body.engine_player, policy, policy_name
        )
        with session.lock:
            try:
                opening = engine_reply(session)
            except StrategyError as exc:
                raise ApiError(422, f"policy {body.policy!r}: {exc}") from exc
            with sessions_lock:
                sessions[game_id] = session
            snapshot(session)
            obj = _game_obj(session)
        obj["engine_move"] = None if opening is None else _move_obj(opening)
        return obj

    @app.get("/games/{game_id}")
    def get_game(game_id: str):
        session = get_session(game_id)
        with session.lock:
            return _game_obj(session)

    @app.post("/games/{game_id}/moves")
    def post_move(game_id: str, body: MoveBody):
        session = get_session(game_id)
        with session.lock:
            state = session.state
            if winner_if_terminal(state) is not None:
                raise ApiError(409, "the game is already over", rule="game over")
            if state.to_move == session.engine_player:
                raise ApiError(
                    409,
                    f"player {state.to_move} is engine-driven",
                    rule="not your turn",
                )
            move = Move(body.edge, body.tail, body.head)
            try:
                state.apply(move, check=True)
            except IllegalMoveError as exc:
                raise ApiError(409, str(exc), rule=exc.rule) from exc
            session.moves.append(move)
            reply = engine_reply(session)
            snapshot(session)
            obj = _game_obj(session)
        obj["human_move"] = _move_obj(move)
        obj["engine_move"] = None if reply is None else _move_obj(reply)
        return obj

    @app.delete("/games/{game_id}", status_code=204)
    def delete_game(game_id: str):
        get_session(game_id)
        with sessions_lock:
            sessions.pop(game_id, None)

    return app
