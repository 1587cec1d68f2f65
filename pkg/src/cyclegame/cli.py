"""Command-line interface for the arrow-marking game toolkit.

Commands:
    gen              build a board from a named family and write/print it
    solve            exact game value (and a best move) of a board/position
    verify-theorems  re-check every closed-form result against the solver
    filled find      locate a cycle cell of a complete orientation
    filled enumerate list all sink/source-free orientations of a board
    filled sample    draw one orientation uniformly at random
    classify         per-edge and per-vertex taxonomy of a position
    play             run two policies against each other, emit the record
    serve            start the HTTP game service

All commands print one JSON document to stdout (``--pretty`` for
indentation); human-oriented diagnostics go to stderr.  Exit codes:
0 success, 1 usage error, 2 invalid input, 3 size limit exceeded,
4 verification failure.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .board import Board, BoardError, board_obj, board_to_json, parse_board
from .filled import (
    CertificateError,
    FilledSearchResult,
    NoCellsError,
    Orientation,
    OrientationError,
    OrientationLimitError,
    enumerate_orientations,
    find_cycle_cell,
    load_orientation,
    sample_orientation,
    validate_certificate,
)
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
    RecordError,
    classify_edge,
    classify_vertex,
    load_record,
    record_to_json,
    replay,
    winner_if_terminal,
)
from .solver import EdgeLimitError, enumerate_playouts, solve, verify_strategy
from .strategies import (
    FamilyError,
    StrategyError,
    find_involutions,
    get_policy,
    mirror_reverse_policy,
)
from . import fixtures

EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_LIMIT = 3
EXIT_VERIFY = 4


class CliError(Exception):
    """Command failure carrying its process exit code."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# ----------------------------------------------------------------------
# Shared helpers
# ----------------------------------------------------------------------


def _emit(obj: object, pretty: bool) -> None:
    if pretty:
        click.echo(json.dumps(obj, indent=2))
    else:
        click.echo(json.dumps(obj, separators=(",", ":")))


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_INVALID, f"cannot read {path}: {exc}") from exc


def _board_from_file(path: str) -> Board:
    try:
        return parse_board(_read_text(path))
    except BoardError as exc:
        raise CliError(EXIT_INVALID, f"{path}: {exc}") from exc


def _record_from_file(path: str, board: Board | None = None):
    try:
        return load_record(_read_text(path), base_dir=Path(path).parent, board=board)
    except (RecordError, BoardError) as exc:
        raise CliError(EXIT_INVALID, f"{path}: {exc}") from exc


def _orientation_from_file(path: str, board: Board) -> Orientation:
    try:
        _, orientation = load_orientation(
            _read_text(path), base_dir=Path(path).parent, board=board
        )
        return orientation
    except OrientationError as exc:
        raise CliError(EXIT_INVALID, f"{path}: {exc}") from exc


def _replay_record(board: Board, moves: list[Move]) -> GameState:
    try:
        return replay(board, moves)
    except IllegalMoveError as exc:
        raise CliError(EXIT_INVALID, f"record is not playable: {exc}") from exc


def _move_obj(move: Move | None) -> dict | None:
    if move is None:
        return None
    return {"edge": move.edge, "tail": move.tail, "head": move.head}


def _arcs_obj(orientation: Orientation) -> list[dict]:
    return [
        {"edge": e, "tail": t, "head": h}
        for e, (t, h) in enumerate(orientation.arcs)
    ]


def _certificate_obj(result: FilledSearchResult) -> dict:
    return {
        "cell": result.cell,
        "direction": result.direction,
        "certificate": [
            {
                "stage": step.stage,
                "polarity": step.polarity,
                "vertices": list(step.vertices),
                "enclosed": step.enclosed,
            }
            for step in result.certificate
        ],
    }


# ----------------------------------------------------------------------
# Command group
# ----------------------------------------------------------------------


@click.group()
def cli() -> None:
    """Arrow-marking game toolkit."""


_FAMILIES = {
    "k4": (0, gen_k4, "k4"),
    "cycle": (1, gen_cycle, "cycle N"),
    "chord": (2, gen_cycle_chord, "chord N SPLIT"),
    "flap": (1, gen_cycle_flap, "flap N"),
    "grid": (2, gen_grid, "grid ROWS COLS"),
    "two-cell": (2, gen_two_cell, "two-cell A B"),
}


@cli.command("gen")
@click.argument("family")
@click.argument("params", nargs=-1, type=int)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.option("--pretty", is_flag=True)
def gen_cmd(family: str, params: tuple[int, ...], output: str | None, pretty: bool):
    """Generate a board: k4 | cycle N | chord N SPLIT | flap N | grid R C | two-cell A B."""
    if family not in _FAMILIES:
        raise CliError(
            EXIT_USAGE,
            f"unknown family {family!r}; choose from {', '.join(sorted(_FAMILIES))}",
        )
    arity, maker, usage = _FAMILIES[family]
    if len(params) != arity:
        raise CliError(EXIT_USAGE, f"family {family!r} expects: gen {usage}")
    try:
        board = maker(*params)
    except ValueError as exc:
        raise CliError(EXIT_INVALID, str(exc)) from exc
    if output is None:
        _emit(board_obj(board), pretty)
        return
    Path(output).write_text(board_to_json(board), encoding="utf-8")
    _emit(
        {
            "family": family,
            "params": list(params),
            "vertices": board.n_vertices,
            "edges": board.n_edges,
            "cells": board.n_cells,
            "output": output,
        },
        pretty,
    )


@cli.command("solve")
@click.argument("board_file", type=click.Path(exists=False))
@click.option("--from", "record_file", type=click.Path(exists=False), default=None)
@click.option("--max-edges", type=int, default=None)
@click.option("--threads", type=int, default=1)
@click.option("--pretty", is_flag=True)
def solve_cmd(board_file, record_file, max_edges, threads, pretty):
    """Exact winner and a best move for a board (or a position in a record)."""
    board = _board_from_file(board_file)
    target: Board | GameState = board
    moves_played = 0
    if record_file is not None:
        _, moves = _record_from_file(record_file, board=board)
        target = _replay_record(board, moves)
        moves_played = len(moves)
    try:
        result = solve(target, max_edges=max_edges, threads=threads)
    except EdgeLimitError as exc:
        raise CliError(EXIT_LIMIT, str(exc)) from exc
    _emit(
        {
            "board": board_file,
            "moves_played": moves_played,
            "to_move": target.to_move if isinstance(target, GameState) else 1,
            "winner": result.winner,
            "best_move": _move_obj(result.best_move),
            "nodes_visited": result.nodes_visited,
            "table_hits": result.table_hits,
            "elapsed": round(result.elapsed, 6),
        },
        pretty,
    )


# ----------------------------------------------------------------------
# verify-theorems
# ----------------------------------------------------------------------


def _check_family(board: Board, expected: int, policy_name: str, threads: int) -> str:
    """Solver winner + full strategy verification for one board; detail string."""
    result = solve(board, threads=threads)
    if result.winner != expected:
        raise CliError(
            EXIT_VERIFY,
            f"solver disagrees: expected {expected}, got {result.winner}",
        )
    policy = get_policy(policy_name, board)
    report = verify_strategy(board, policy, expected)
    if not report.passed:
        raise CliError(
            EXIT_VERIFY, f"strategy refuted at {report.counterexample}"
        )
    return f"winner={expected} strategy={policy_name} leaves={report.leaves}"


def _theorem_checks(max_n: int, threads: int):
    """Yield (name, thunk) pairs; each thunk returns a detail string or raises."""

    def k4():
        result = solve(gen_k4(), threads=threads)
        if result.winner != 2:
            raise CliError(EXIT_VERIFY, f"expected winner 2, got {result.winner}")
        return f"winner=2 nodes={result.nodes_visited}"

    yield "k4-second-player", k4

    for n in range(3, max_n + 1):
        def cycle(n=n):
            expected = 1 if n % 2 == 1 else 2
            return _check_family(gen_cycle(n), expected, "parity", threads)

        yield f"cycle-{n}", cycle

    for n in range(4, max_n + 1):
        for split in range(2, n - 1):
            def chord(n=n, split=split):
                expected = 1 if n % 2 == 0 else 2
                return _check_family(
                    gen_cycle_chord(n, split), expected, "chord", threads
                )

            yield f"chord-{n}-{split}", chord

    for n in range(3, max_n + 1):
        def flap(n=n):
            expected = 1 if n % 2 == 1 else 2
            return _check_family(gen_cycle_flap(n), expected, "flap", threads)

        yield f"flap-{n}", flap

    for fixture_name in ("bar_square", "house_braced", "wheel4"):
        def mirror(fixture_name=fixture_name):
            board = fixtures.fixture_board(fixture_name)
            involution = next(
                inv for inv in find_involutions(board) if inv.qualifies
            )
            player = involution.qualifying_player
            result = solve(board, threads=threads)
            if result.winner != player:
                raise CliError(
                    EXIT_VERIFY,
                    f"solver winner {result.winner} != qualifying player {player}",
                )
            report = verify_strategy(board, mirror_reverse_policy(involution), player)
            if not report.passed:
                raise CliError(
                    EXIT_VERIFY, f"mirror play refuted at {report.counterexample}"
                )
            return f"winner={player} strategy=mirror leaves={report.leaves}"

        yield f"mirror-{fixture_name}", mirror

    def census_triangle():
        stats = enumerate_playouts(gen_cycle(3))
        if (stats.playouts, stats.wins[1], stats.wins[2]) != (12, 12, 0):
            raise CliError(EXIT_VERIFY, f"unexpected census: {stats}")
        return "playouts=12 p1=12 p2=0"

    yield "census-triangle", census_triangle

    def census_chord():
        stats = enumerate_playouts(gen_cycle_chord(4, 2))
        if (stats.playouts, stats.wins[1], stats.wins[2]) != (672, 384, 288):
            raise CliError(EXIT_VERIFY, f"unexpected census: {stats}")
        return "playouts=672 p1=384 p2=288"

    yield "census-chord-4-2", census_chord


@cli.command("verify-theorems")
@click.option("--max-n", type=int, default=7, show_default=True)
@click.option("--threads", type=int, default=1)
@click.option("--pretty", is_flag=True)
def verify_theorems_cmd(max_n, threads, pretty):
    """Re-derive every closed-form game value and strategy with the solver."""
    if max_n < 3:
        raise CliError(EXIT_USAGE, "--max-n must be at least 3")
    rows = []
    failed = 0
    for name, thunk in _theorem_checks(max_n, threads):
        try:
            detail = thunk()
            passed = True
        except CliError as exc:
            detail = str(exc)
            passed = False
            failed += 1
        rows.append({"name": name, "passed": passed, "detail": detail})
        status = "PASS" if passed else "FAIL"
        click.echo(f"{status:4}  {name:20}  {detail}", err=True)
    _emit({"checks": rows, "passed": failed == 0, "failed": failed}, pretty)
    if failed:
        raise CliError(EXIT_VERIFY, f"{failed} of {len(rows)} checks failed")


# ----------------------------------------------------------------------
# filled
# ----------------------------------------------------------------------


@cli.group("filled")
def filled_group() -> None:
    """Cycle-cell search in complete sink/source-free orientations."""


@filled_group.command("find")
@click.argument("board_file")
@click.argument("orientation_file")
@click.option("--pretty", is_flag=True)
def filled_find_cmd(board_file, orientation_file, pretty):
    """Locate a coherently oriented cell; print the cycle certificate."""
    board = _board_from_file(board_file)
    orientation = _orientation_from_file(orientation_file, board)
    try:
        result = find_cycle_cell(board, orientation)
        validate_certificate(board, orientation, result)
    except NoCellsError as exc:
        raise CliError(EXIT_INVALID, str(exc)) from exc
    except CertificateError as exc:
        raise CliError(EXIT_VERIFY, f"certificate rejected: {exc}") from exc
    obj = _certificate_obj(result)
    obj["board"] = board_file
    obj["validated"] = True
    _emit(obj, pretty)


@filled_group.command("enumerate")
@click.argument("board_file")
@click.option("--pretty", is_flag=True)
def filled_enumerate_cmd(board_file, pretty):
    """List every orientation with the cycle cell found in each."""
    board = _board_from_file(board_file)
    rows = []
    try:
        for orientation in enumerate_orientations(board):
            row: dict = {"arcs": _arcs_obj(orientation)}
            if board.n_cells > 0:
                result = find_cycle_cell(board, orientation)
                validate_certificate(board, orientation, result)
                row["cycle_cell"] = result.cell
                row["direction"] = result.direction
            rows.append(row)
    except OrientationLimitError as exc:
        raise CliError(EXIT_LIMIT, str(exc)) from exc
    except CertificateError as exc:
        raise CliError(EXIT_VERIFY, f"certificate rejected: {exc}") from exc
    _emit({"board": board_file, "count": len(rows), "orientations": rows}, pretty)


@filled_group.command("sample")
@click.argument("board_file")
@click.option("--seed", type=int, required=True)
@click.option("--pretty", is_flag=True)
def filled_sample_cmd(board_file, seed, pretty):
    """Sample one orientation uniformly; locate its cycle cell."""
    board = _board_from_file(board_file)
    try:
        orientation = sample_orientation(board, seed)
    except OrientationLimitError as exc:
        raise CliError(EXIT_LIMIT, str(exc)) from exc
    except OrientationError as exc:
        raise CliError(EXIT_INVALID, str(exc)) from exc
    obj = {"board": board_file, "seed": seed, "arcs": _arcs_obj(orientation)}
    if board.n_cells > 0:
        result = find_cycle_cell(board, orientation)
        validate_certificate(board, orientation, result)
        obj["cycle_cell"] = result.cell
        obj["direction"] = result.direction
    _emit(obj, pretty)


# ----------------------------------------------------------------------
# classify / play / serve
# ----------------------------------------------------------------------


@cli.command("classify")
@click.argument("board_file")
@click.argument("record_file")
@click.option("--pretty", is_flag=True)
def classify_cmd(board_file, record_file, pretty):
    """Per-edge and per-vertex taxonomy of the position after a record."""
    board = _board_from_file(board_file)
    _, moves = _record_from_file(record_file, board=board)
    state = _replay_record(board, moves)
    edges = [classify_edge(state, e) for e in range(board.n_edges)]
    vertices = [classify_vertex(state, v) for v in range(board.n_vertices)]
    _emit(
        {
            "board": board_file,
            "moves_played": len(moves),
            "to_move": state.to_move,
            "winner": winner_if_terminal(state),
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
                {"vertex": v, "status": status}
                for v, status in enumerate(vertices)
            ],
            "unmarkable": [s.edge for s in edges if s.status == "unmarkable"],
            "currently_unplayable": [
                s.edge for s in edges if s.currently_unplayable
            ],
            "almost_sinks": [
                v for v, s in enumerate(vertices) if s == "almost-sink"
            ],
            "almost_sources": [
                v for v, s in enumerate(vertices) if s == "almost-source"
            ],
        },
        pretty,
    )


@cli.command("play")
@click.argument("board_file")
@click.option("--p1", "p1_name", required=True)
@click.option("--p2", "p2_name", required=True)
@click.option("--seed", type=int, default=None)
@click.option("--max-edges", type=int, default=None)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.option("--pretty", is_flag=True)
def play_cmd(board_file, p1_name, p2_name, seed, max_edges, output, pretty):
    """Play two policies against each other; print (optionally save) the record."""
    board = _board_from_file(board_file)

    def resolve(name: str):
        if name == "random":
            name = f"random({0 if seed is None else seed})"
        try:
            return get_policy(name, board, max_edges=max_edges)
        except (ValueError, FamilyError, StrategyError) as exc:
            raise CliError(EXIT_INVALID, str(exc)) from exc

    policies = {1: resolve(p1_name), 2: resolve(p2_name)}
    state = GameState(board)
    moves: list[Move] = []
    try:
        while winner_if_terminal(state) is None:
            move = policies[state.to_move](state)
            state.apply(move, check=True)
            moves.append(move)
    except EdgeLimitError as exc:
        raise CliError(EXIT_LIMIT, str(exc)) from exc
    except (StrategyError, IllegalMoveError) as exc:
        raise CliError(EXIT_INVALID, f"policy {policies[state.to_move].name}: {exc}") from exc
    winner = winner_if_terminal(state)
    if output is not None:
        try:
            ref = str(
                Path(board_file).resolve().relative_to(
                    Path(output).resolve().parent
                )
            )
        except ValueError:
            ref = str(Path(board_file).resolve())
        Path(output).write_text(record_to_json(ref, moves), encoding="utf-8")
    _emit(
        {
            "board": board_file,
            "p1": policies[1].name,
            "p2": policies[2].name,
            "winner": winner,
            "moves": [_move_obj(m) for m in moves],
            "output": output,
        },
        pretty,
    )


@cli.command("serve")
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--boards",
    "boards_dir",
    type=click.Path(file_okay=False, exists=True),
    default=None,
    help="Directory of extra .board files to offer.",
)
@click.option(
    "--snapshot-dir",
    type=click.Path(file_okay=False),
    default=None,
    help="Persist a record file per game after every move.",
)
def serve_cmd(port, host, boards_dir, snapshot_dir):
    """Run the HTTP game service."""
    import uvicorn

    from .service import create_app

    app = create_app(boards_dir=boards_dir, snapshot_dir=snapshot_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


def main(argv: list[str] | None = None) -> None:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:  # --help and friends
        sys.exit(exc.exit_code)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(EXIT_USAGE)
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(EXIT_USAGE)
    except click.Abort:
        sys.exit(EXIT_USAGE)
    except CliError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(exc.code)
    sys.exit(0)


if __name__ == "__main__":
    main()
