"""Independent brute-force game oracle for cross-checking the package.

Everything here is re-derived from the rules as stated, on purpose:
markings are a plain dict, legality re-checks the sink/source ban from
raw incidence, and cycle cells are re-detected by walking each cell
boundary.  Only the board's combinatorial data (endpoints, incidence,
cell walks) is taken from the package — the embedding is input, not the
logic under test.
"""

from __future__ import annotations

from functools import lru_cache


def _incident(board, v):
    return [e for e, (a, b) in enumerate(board.edges) if v in (a, b)]


def naive_cycle_cells(board, markings: dict[int, tuple[int, int]]) -> list[int]:
    """Cells whose boundary is fully marked and cycles one way around."""
    out = []
    for cell in board.cells:
        k = len(cell.vertices)
        if len(set(cell.edges)) != k:  # spur edge repeats: never a cycle
            continue
        forward = 0
        backward = 0
        for i in range(k):
            a, b = cell.vertices[i], cell.vertices[(i + 1) % k]
            mark = markings.get(cell.edges[i])
            if mark == (a, b):
                forward += 1
            elif mark == (b, a):
                backward += 1
        if forward == k or backward == k:
            out.append(cell.id)
    return out


def naive_legal(board, markings: dict[int, tuple[int, int]]):
    """Legal (edge, tail, head) triples: unmarked, no sink, no source."""
    moves = []
    for e, (u, v) in enumerate(board.edges):
        if e in markings:
            continue
        for tail, head in ((u, v), (v, u)):
            ok = True
            for w in (u, v):
                incident = _incident(board, w)
                unmarked = [f for f in incident if f not in markings and f != e]
                if unmarked:
                    continue
                heads = sum(
                    1
                    for f in incident
                    if f != e and markings[f][1] == w
                )
                heads += 1 if head == w else 0
                if heads == len(incident):
                    ok = False  # sink
                    break
                if heads == 0:
                    ok = False  # source
                    break
            if ok:
                moves.append((e, tail, head))
    return moves


def brute_winner(board) -> int:
    """Game value by plain negamax over dict states; no tables, no pruning."""

    @lru_cache(maxsize=None)
    def win_for_mover(items: frozenset) -> bool:
        markings = dict(items)
        moves = naive_legal(board, markings)
        if not moves:
            return False  # mover has no move: previous mover won
        for e, t, h in moves:
            markings[e] = (t, h)
            completed = naive_cycle_cells(board, markings)
            if completed:
                markings.pop(e)
                return True
            lost = win_for_mover(frozenset(markings.items()))
            markings.pop(e)
            if not lost:
                return True
        return False

    return 1 if win_for_mover(frozenset()) else 2


def brute_playouts(board) -> tuple[int, dict[int, int]]:
    """Count every complete game and the winner tally, recursively."""

    def walk(markings: dict[int, tuple[int, int]], mover: int):
        moves = naive_legal(board, markings)
        if not moves:
            other = 3 - mover
            return 1, {mover: 0, other: 1}
        total = 0
        tally = {1: 0, 2: 0}
        for e, t, h in moves:
            markings[e] = (t, h)
            if naive_cycle_cells(board, markings):
                total += 1
                tally[mover] += 1
            else:
                sub_total, sub_tally = walk(markings, 3 - mover)
                total += sub_total
                tally[1] += sub_tally[1]
                tally[2] += sub_tally[2]
            markings.pop(e)
        return total, tally

    return walk({}, 1)
