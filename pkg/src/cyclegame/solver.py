"""Exhaustive game-theoretic solver and strategy-verification harness.

Three independent instruments over the same rules:

* ``solve``: win/loss minimax over the full game tree with a
  transposition table keyed by the compact 2-bit-per-edge position key
  (the player to move is derivable from marked-edge parity).
* ``verify_strategy``: adversarial check of a deterministic policy — the
  policy's player follows it, the opponent tries every legal reply; PASS
  means the player wins every leaf.
* ``enumerate_playouts``: exact counts over the unpruned game tree
  (terminals, per-winner totals, longest playout).

All three run at desk scale; boards are capped by an edge limit
(default 16) to bound the key space.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Protocol

from .board import Board
from .rules import (
    GameState,
    IllegalMoveError,
    Move,
    is_cycle_completing,
    legal_moves,
    winner_if_terminal,
)

__all__ = [
    "EdgeLimitError",
    "PlayoutStats",
    "PolicyProtocol",
    "PolicyIllegalMoveError",
    "SolveResult",
    "VerificationReport",
    "enumerate_playouts",
    "solve",
    "verify_strategy",
]

DEFAULT_MAX_EDGES = 16


class EdgeLimitError(ValueError):
    """Board exceeds the configured edge limit for exhaustive work."""


class PolicyIllegalMoveError(RuntimeError):
    """A policy under verification returned an illegal move.

    Attributes:
        history: moves leading to the offending state.
        move: the illegal move the policy returned.
    """

    def __init__(self, message: str, history: list[Move], move: Move) -> None:
        super().__init__(message)
        self.history = history
        self.move = move


class PolicyProtocol(Protocol):
    """Deterministic move chooser.

    For verification the policy must be a function of the current marking
    and the opponent's last move only (all bundled strategies are); a
    policy that reads deeper history may only be used for live play.
    """

    name: str

    def __call__(self, state: GameState) -> Move: ...


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exhaustive solve.

    Attributes:
        winner: 1 or 2 — the player winning under optimal play.
        best_move: a winning move when the mover wins, otherwise the
            first legal move (None at terminal positions).
        nodes_visited: states expanded by the search.
        table_hits: transposition-table lookups that short-circuited.
        elapsed: wall-clock seconds.
    """

    winner: int
    best_move: Move | None
    nodes_visited: int
    table_hits: int
    elapsed: float


@dataclass(frozen=True)
class VerificationReport:
    """Result of exhaustively playing a policy against all opposition.

    Attributes:
        passed: True iff the policy's player won every leaf.
        as_player: the player the policy controlled.
        counterexample: full losing move sequence when failed.
        leaves: terminal positions reached.
        nodes: positions visited.
    """

    passed: bool
    as_player: int
    counterexample: list[Move] | None
    leaves: int
    nodes: int


@dataclass(frozen=True)
class PlayoutStats:
    """Exact full-game-tree statistics.

    Attributes:
        playouts: number of complete games (terminal leaves).
        wins: per-player terminal counts {1: ..., 2: ...}.
        max_depth: length of the longest playout in moves.
    """

    playouts: int
    wins: dict[int, int]
    max_depth: int


def _check_edge_limit(board: Board, max_edges: int | None) -> None:
    limit = DEFAULT_MAX_EDGES if max_edges is None else max_edges
    if board.n_edges > limit:
        raise EdgeLimitError(
            f"board has {board.n_edges} edges, exceeding the limit of {limit}"
        )


def _ordered_moves(state: GameState) -> list[Move]:
    """Canonical search order: immediate wins first, then (edge, tail)."""
    moves = legal_moves(state)
    winning = [m for m in moves if is_cycle_completing(state, m)]
    if not winning:
        return moves
    rest = [m for m in moves if m not in winning]
    return winning + rest


def solve(
    target: "Board | GameState",
    *,
    max_edges: int | None = None,
    use_table: bool = True,
    threads: int = 1,
) -> SolveResult:
    """Solve a position exactly.

    Args:
        target: a board (solved from the empty position) or a mid-game
            state.
        max_edges: board-size guard (default 16).
        use_table: disable to force tableless recursion (identical winner).
        threads: parallelize across top-level moves; results are
            bit-identical to single-threaded execution.

    Raises:
        EdgeLimitError: board exceeds the edge limit.
    """
    state = GameState(target) if isinstance(target, Board) else target.copy()
    _check_edge_limit(state.board, max_edges)
    start = time.perf_counter()
    stats = [0, 0]  # nodes, table hits

    term = winner_if_terminal(state)
    if term is not None:
        return SolveResult(term, None, 0, 0, time.perf_counter() - start)

    mover = state.to_move
    moves = _ordered_moves(state)
    if threads > 1:
        results: list[int] = []
        locals_stats: list[tuple[int, int]] = []

        def solve_child(move: Move) -> tuple[int, int, int]:
            child = state.copy()
            child.apply(move, check=False)
            child_stats = [0, 0]
            memo: dict[int, int] | None = {} if use_table else None
            w = _minimax(child, memo, child_stats)
            return w, child_stats[0], child_stats[1]

        with ThreadPoolExecutor(max_workers=threads) as pool:
            for w, n, h in pool.map(solve_child, moves):
                results.append(w)
                locals_stats.append((n, h))
        stats[0] = 1 + sum(n for n, _ in locals_stats)
        stats[1] = sum(h for _, h in locals_stats)
        winner = mover if mover in results else (2 if mover == 1 else 1)
        best = moves[results.index(mover)] if mover in results else moves[0]
        return SolveResult(winner, best, stats[0], stats[1], time.perf_counter() - start)

    memo: dict[int, int] | None = {} if use_table else None
    best: Move | None = None
    winner = 2 if mover == 1 else 1
    stats[0] += 1
    for move in moves:
        state.apply(move, check=False)
        w = _minimax(state, memo, stats)
        state.undo()
        if w == mover:
            winner = mover
            best = move
            break
    if best is None:
        best = moves[0]
    return SolveResult(winner, best, stats[0], stats[1], time.perf_counter() - start)


def _minimax(state: GameState, memo: dict[int, int] | None, stats: list[int]) -> int:
    term = winner_if_terminal(state)
    if term is not None:
        return term
    key = state.key() if memo is not None else 0
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            stats[1] += 1
            return hit
    stats[0] += 1
    mover = state.to_move
    other = 2 if mover == 1 else 1
    result = other
    for move in _ordered_moves(state):
        state.apply(move, check=False)
        w = _minimax(state, memo, stats)
        state.undo()
        if w == mover:
            result = mover
            break
    if memo is not None:
        memo[key] = result
    return result


def verify_strategy(
    board: Board,
    policy: "PolicyProtocol | Callable[[GameState], Move]",
    as_player: int,
    *,
    max_edges: int | None = None,
) -> VerificationReport:
    """Exhaustively test a policy against every opponent line.

    The policy's player plays exactly the policy's move; the opponent
    branches over all legal replies.  Positions are memoized — opponent
    nodes by marking, policy nodes by (marking, last move) — which is
    sound for policies that depend only on those inputs.

    Raises:
        PolicyIllegalMoveError: the policy returned an illegal move.
    """
    _check_edge_limit(board, max_edges)
    state = GameState(board)
    stats = {"leaves": 0, "nodes": 0}
    counterexample: list[list[Move] | None] = [None]
    proven: set[tuple] = set()

    def explore(state: GameState) -> bool:
        stats["nodes"] += 1
        term = winner_if_terminal(state)
        if term is not None:
            stats["leaves"] += 1
            if term != as_player:
                counterexample[0] = list(state.history)
                return False
            return True
        if state.to_move == as_player:
            memo_key = (state.key(), state.last_move)
            if memo_key in proven:
                return True
            move = policy(state)
            try:
                state.apply(move)
            except IllegalMoveError as exc:
                raise PolicyIllegalMoveError(
                    f"policy returned illegal move {move}: {exc}",
                    list(state.history),
                    move,
                ) from exc
            ok = explore(state)
            state.undo()
            if ok:
                proven.add(memo_key)
            return ok
        memo_key = (state.key(),)
        if memo_key in proven:
            return True
        for move in legal_moves(state):
            state.apply(move, check=False)
            ok = explore(state)
            state.undo()
            if not ok:
                return False
        proven.add(memo_key)
        return True

    passed = explore(state)
    return VerificationReport(
        passed=passed,
        as_player=as_player,
        counterexample=counterexample[0],
        leaves=stats["leaves"],
        nodes=stats["nodes"],
    )


def enumerate_playouts(
    board: Board, *, max_edges: int | None = None
) -> PlayoutStats:
    """Exact statistics over the full unpruned game tree.

    Counts every complete game (every maximal legal move sequence) from
    the empty position.  Memoized on the marking: terminality and the
    leaf winner depend only on the marking and its parity, never on the
    path taken to reach it.
    """
    _check_edge_limit(board, max_edges)
    state = GameState(board)
    memo: dict[int, tuple[int, int, int, int]] = {}

    def count(state: GameState) -> tuple[int, int, int, int]:
        """Returns (playouts, wins1, wins2, deepest remaining depth)."""
        key = state.key()
        hit = memo.get(key)
        if hit is not None:
            return hit
        term = winner_if_terminal(state)
        if term is not None:
            result = (1, 1 if term == 1 else 0, 1 if term == 2 else 0, 0)
            memo[key] = result
            return result
        total = w1 = w2 = depth = 0
        for move in legal_moves(state):
            state.apply(move, check=False)
            t, a, b, d = count(state)
            state.undo()
            total += t
            w1 += a
            w2 += b
            depth = max(depth, d + 1)
        result = (total, w1, w2, depth)
        memo[key] = result
        return result

    playouts, w1, w2, depth = count(state)
    return PlayoutStats(playouts=playouts, wins={1: w1, 2: w2}, max_depth=depth)
