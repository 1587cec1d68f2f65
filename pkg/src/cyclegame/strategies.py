"""Winning strategies: board symmetries and the proved policy family.

This module turns each proved winning recipe into an executable,
deterministic :class:`Policy`:

``parity``
    For a single-cycle board the winner is fixed by edge-count parity
    and any legal play suffices, so the policy simply plays the least
    legal move.

``chord``
    For a cycle with one chord the policy plays through the reflection
    in the chord axis: it claims the chord in the least-committal
    direction, pairs ring edges with their reflected partners, answers
    marks that run with a cell's cycling direction by counter-marks in
    the other cell nearest the threatened chord end, and mirrors
    everything else.

``flap``
    For a cycle with a triangular flap (one extra vertex of degree two
    riding on two adjacent ring vertices) the policy neutralises the
    triangle — renders it uncyclable — and then reduces to safe play on
    what remains.

``mirror``
    For a board with a qualifying involution (a non-trivial self-inverse
    symmetry) the policy answers every opponent move ``i -> j`` with its
    partner ``j' -> i'``; when it moves first it opens on the unique
    self-partnered edge.

``optimal``
    Exhaustive search (:func:`cyclegame.solver.solve`) at every turn.

``random(seed)``
    Seeded uniform choice among legal moves, for baselines.

Every policy completes a cycle cell immediately when it can: that is
always a win, so it soundly precedes any other rule.  Where a recipe
leaves a free choice, the least move in ``(edge, tail)`` order is taken,
so games are reproducible.  The search harness
(:func:`cyclegame.solver.verify_strategy`) is the arbiter of
correctness: each policy is checked against every opponent line, not
trusted by construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .board import Board
from .rules import (
    GameState,
    Move,
    is_cycle_completing,
    is_death_move,
    legal_moves,
    winner_if_terminal,
)
from .solver import solve

__all__ = [
    "FamilyError",
    "StrategyError",
    "Involution",
    "Policy",
    "ChordBoard",
    "FlapBoard",
    "POLICY_NAMES",
    "find_involutions",
    "detect_chord",
    "detect_flap",
    "mirror_reverse_policy",
    "parity_policy",
    "chord_policy",
    "flap_policy",
    "optimal_policy",
    "random_policy",
    "get_policy",
]


class StrategyError(RuntimeError):
    """A policy's prescription cannot be followed in this position.

    For qualifying inputs the recipes guarantee this never fires; firing
    under the verification harness is a genuine failure, not noise.
    """


class FamilyError(ValueError):
    """The board does not match the structural family a policy needs."""


# ----------------------------------------------------------------------
# Involutions
# ----------------------------------------------------------------------

SELF_INVOLUTIVE = "self-involutive"
PART_INVOLUTIVE = "part-involutive"
NOWHERE_INVOLUTIVE = "nowhere-involutive"


@dataclass(frozen=True)
class Involution:
    """A non-trivial self-inverse symmetry of a board complex.

    The vertex permutation determines everything else: each edge maps to
    the edge joining the images of its endpoints, and each cell to the
    cell bounded by the images of its edges.  Instances are only
    constructed when both induced maps are well-defined, so an abstract
    graph symmetry that scrambles the embedding's cells is rejected.

    Classification fields:

    - ``self_edges``: edges equal to their own partner.
    - ``fixed_vertices``: vertices equal to their own partner.
    - ``cell_tags[c]``: ``self-involutive`` when the cell maps to
      itself; ``part-involutive`` when it maps elsewhere yet contains an
      edge together with that edge's distinct partner; otherwise
      ``nowhere-involutive``.
    - ``qualifying_player``: the player with a proved mirror-reverse win
      under this symmetry — 2 when every cell is self- or
      nowhere-involutive and no edge is self-partnered, 1 when
      additionally exactly one edge is self-partnered and its endpoints
      are swapped (not fixed); ``None`` when neither condition holds.
    """

    board: Board = field(repr=False)
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...] = field(repr=False)
    cell_map: tuple[int, ...] = field(repr=False)
    self_edges: tuple[int, ...] = field(repr=False)
    fixed_vertices: tuple[int, ...] = field(repr=False)
    cell_tags: tuple[str, ...] = field(repr=False)
    qualifying_player: int | None = None

    @property
    def qualifies(self) -> bool:
        """True when a mirror-reverse win is proved for some player."""
        return self.qualifying_player is not None

    @classmethod
    def from_vertex_map(cls, board: Board, vertex_map: Sequence[int]) -> "Involution":
        """Build the involution induced by a vertex permutation.

        Raises:
            ValueError: the permutation is the identity, is not
                self-inverse, or fails to induce well-defined edge or
                cell maps.
        """
        vmap = tuple(vertex_map)
        n = board.n_vertices
        if sorted(vmap) != list(range(n)):
            raise ValueError("vertex_map is not a permutation")
        if all(vmap[v] == v for v in range(n)):
            raise ValueError("identity map is not an involution here")
        if any(vmap[vmap[v]] != v for v in range(n)):
            raise ValueError("vertex_map is not self-inverse")

        emap: list[int] = []
        for e in range(board.n_edges):
            u, v = board.endpoints(e)
            f = board.edge_between(vmap[u], vmap[v])
            if f is None:
                raise ValueError(f"edge {e} has no image under the map")
            emap.append(f)

        by_edge_set = {frozenset(c.edges): c.id for c in board.cells}
        cmap: list[int] = []
        for c in board.cells:
            image = frozenset(emap[e] for e in c.edges)
            target = by_edge_set.get(image)
            if target is None:
                raise ValueError(f"cell {c.id} has no image under the map")
            cmap.append(target)

        self_edges = tuple(e for e in range(board.n_edges) if emap[e] == e)
        fixed = tuple(v for v in range(n) if vmap[v] == v)

        tags: list[str] = []
        for c in board.cells:
            if cmap[c.id] == c.id:
                tags.append(SELF_INVOLUTIVE)
            elif any(emap[e] != e and emap[e] in c.edges for e in c.edges):
                tags.append(PART_INVOLUTIVE)
            else:
                tags.append(NOWHERE_INVOLUTIVE)

        qualifying: int | None = None
        if PART_INVOLUTIVE not in tags:
            if not self_edges:
                qualifying = 2
            elif len(self_edges) == 1:
                u, v = board.endpoints(self_edges[0])
                if vmap[u] == v:  # endpoints swapped, not fixed
                    qualifying = 1

        return cls(
            board=board,
            vertex_map=vmap,
            edge_map=tuple(emap),
            cell_map=tuple(cmap),
            self_edges=self_edges,
            fixed_vertices=fixed,
            cell_tags=tuple(tags),
            qualifying_player=qualifying,
        )

    def check(self) -> None:
        """Assert the structural invariants; raises AssertionError."""
        b = self.board
        assert any(self.vertex_map[v] != v for v in range(b.n_vertices))
        for v in range(b.n_vertices):
            assert self.vertex_map[self.vertex_map[v]] == v
        for e in range(b.n_edges):
            assert self.edge_map[self.edge_map[e]] == e
            u, v = b.endpoints(e)
            image = {self.vertex_map[u], self.vertex_map[v]}
            assert set(b.endpoints(self.edge_map[e])) == image
        for c in b.cells:
            assert self.cell_map[self.cell_map[c.id]] == c.id
            image = {self.edge_map[e] for e in c.edges}
            assert set(b.cells[self.cell_map[c.id]].edges) == image

    def reply_to(self, move: Move) -> Move:
        """The mirror answer to ``move``: ``i -> j`` becomes ``j' -> i'``."""
        return Move(
            self.edge_map[move.edge],
            self.vertex_map[move.head],
            self.vertex_map[move.tail],
        )


def find_involutions(board: Board) -> list[Involution]:
    """Enumerate all involutions of the board complex.

    Backtracks over degree-compatible vertex pairings, pruning on
    adjacency mismatches; a completed pairing is kept only when the
    induced edge and cell maps exist.  The identity is excluded.  The
    result is sorted by vertex map, so "the first qualifying involution"
    is well-defined across runs.
    """
    n = board.n_vertices
    adj = [
        [board.edge_between(u, v) is not None for v in range(n)] for u in range(n)
    ]
    deg = [board.degree(v) for v in range(n)]
    pi: list[int] = [-1] * n
    found: list[Involution] = []

    def consistent(v: int) -> bool:
        for u in range(n):
            if pi[u] == -1 or u == v:
                continue
            if adj[v][u] != adj[pi[v]][pi[u]]:
                return False
        return True

    def descend(v: int) -> None:
        if v == n:
            if all(pi[w] == w for w in range(n)):
                return
            try:
                found.append(Involution.from_vertex_map(board, pi))
            except ValueError:
                pass
            return
        if pi[v] != -1:
            descend(v + 1)
            return
        candidates = [v] + [w for w in range(v + 1, n) if pi[w] == -1]
        for w in candidates:
            if deg[w] != deg[v]:
                continue
            pi[v], pi[w] = w, v
            if consistent(v) and (w == v or consistent(w)):
                descend(v + 1)
            pi[v] = -1
            if w != v:
                pi[w] = -1

    descend(0)
    found.sort(key=lambda inv: inv.vertex_map)
    return found


# ----------------------------------------------------------------------
# Policy plumbing
# ----------------------------------------------------------------------


class Policy:
    """A named deterministic move chooser.

    Callable on a :class:`~cyclegame.rules.GameState` whose player to
    move is the policy's seat; returns a legal :class:`Move`.
    """

    def __init__(self, name: str, fn: Callable[[GameState], Move]) -> None:
        self.name = name
        self._fn = fn

    def __call__(self, state: GameState) -> Move:
        return self._fn(state)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Policy({self.name!r})"


def _winning_moves(state: GameState, moves: Iterable[Move]) -> list[Move]:
    return sorted(m for m in moves if is_cycle_completing(state, m))


def _require_moves(state: GameState) -> list[Move]:
    moves = legal_moves(state)
    if not moves:
        raise StrategyError("no legal move available")
    return moves


def _safe_moves(state: GameState, moves: Iterable[Move]) -> list[Move]:
    """Legal moves that do not hand the opponent a cycle completion."""
    return sorted(m for m in moves if not is_death_move(state, m))


def _marked_total(state: GameState) -> int:
    return sum(1 for mk in state.markings if mk is not None)


def _sole_marked_move(state: GameState) -> Move:
    """Reconstruct the only move on a board with exactly one mark."""
    if state.last_move is not None:
        return state.last_move
    for e, mk in enumerate(state.markings):
        if mk is not None:
            return Move(e, mk[0], mk[1])
    raise StrategyError("no marked edge to respond to")


# ----------------------------------------------------------------------
# Mirror-reverse policy
# ----------------------------------------------------------------------


def mirror_reverse_policy(
    involution: Involution, *, require_qualifies: bool = True
) -> Policy:
    """Answer each opponent move with its image under the involution.

    Move choice, in order: (a) complete a cycle cell when possible
    (least such move); (b) on an empty board, open on the least
    self-partnered edge in its least direction; (c) answer the
    opponent's ``i -> j`` with ``j' -> i'``.  The mirror answer is
    returned as long as it is legal — even when it is a losing choice —
    because for qualifying involutions the proof guarantees it is safe,
    and the verification harness is what exposes non-qualifying ones.

    Args:
        involution: the symmetry to mirror through.
        require_qualifies: when True (default), refuse to build the
            policy for a non-qualifying involution.

    Raises:
        StrategyError: at call time, when the prescription is
            inapplicable (reply edge already marked, reply illegal, or
            nothing to mirror).
    """
    if require_qualifies and not involution.qualifies:
        raise StrategyError(
            "involution does not qualify for the mirror-reverse strategy"
        )
    board = involution.board

    def choose(state: GameState) -> Move:
        if state.board is not board and state.board != board:
            raise StrategyError("state is not on this involution's board")
        moves = _require_moves(state)
        wins = _winning_moves(state, moves)
        if wins:
            return wins[0]
        if _marked_total(state) == 0:
            if involution.self_edges:
                e = min(involution.self_edges)
                u, v = board.endpoints(e)
                return Move(e, min(u, v), max(u, v))
            raise StrategyError(
                "no opening prescribed: the involution has no self-partnered edge"
            )
        last = state.last_move
        if last is None:
            raise StrategyError("cannot mirror: position has no recorded last move")
        reply = involution.reply_to(last)
        if state.markings[reply.edge] is not None:
            raise StrategyError(
                f"mirror reply edge {reply.edge} is already marked"
            )
        if not state.direction_legal(reply.edge, reply.tail, reply.head):
            raise StrategyError(
                f"mirror reply {reply.tail}->{reply.head} is illegal here"
            )
        return reply

    policy = Policy("mirror", choose)
    policy.involution = involution  # type: ignore[attr-defined]
    return policy


# ----------------------------------------------------------------------
# Parity policy (single-cycle boards)
# ----------------------------------------------------------------------


def parity_policy() -> Policy:
    """Least legal move, always.

    On a single-cycle board the winner is decided by parity alone: every
    finished game there ends with the mover either completing the cycle
    or making the final move, so no lookahead is needed.
    """

    def choose(state: GameState) -> Move:
        return min(_require_moves(state))

    return Policy("parity", choose)


# ----------------------------------------------------------------------
# Chord policy (cycle plus one chord)
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ChordBoard:
    """Structural summary of a cycle-with-chord board.

    ``winner`` is the player with the proved strategy: 1 when the ring
    is even, else 2.
    """

    chord_edge: int
    ends: tuple[int, int]
    ring_edges: frozenset[int]
    ring_size: int

    @property
    def winner(self) -> int:
        return 1 if self.ring_size % 2 == 0 else 2


def detect_chord(board: Board) -> ChordBoard | None:
    """Recognise a cycle with a single chord, by structure alone."""
    if board.n_cells != 2:
        return None
    e1 = set(board.cells[0].edges)
    e2 = set(board.cells[1].edges)
    shared = e1 & e2
    if len(shared) != 1 or e1 | e2 != set(range(board.n_edges)):
        return None
    chord = next(iter(shared))
    a, b = board.endpoints(chord)
    if board.degree(a) != 3 or board.degree(b) != 3:
        return None
    if any(
        board.degree(v) != 2 for v in range(board.n_vertices) if v not in (a, b)
    ):
        return None
    ring = frozenset((e1 | e2) - shared)
    if len(ring) != board.n_vertices:
        return None
    return ChordBoard(chord, (min(a, b), max(a, b)), ring, board.n_vertices)


def chord_policy(board: Board) -> Policy:
    """The recipe for a cycle with one chord.

    The play revolves around the reflection through the chord axis: it
    swaps the chord's endpoints and reverses each arc, pairing the ring
    edges (an odd arc's middle edge is its own partner).  Once the chord
    is marked ``t -> h``, each cell has one coherent cycling direction,
    so every ring mark either runs *with* its cell's cycle or *against*
    it.  Moves are chosen in this order:

    1. Complete a cycle cell (least such move).
    2. Open on the least self-partnered ring edge, least direction; when
       both arcs are even there is none, so open on the chord itself.
    3. While the chord is free, claim it.  Direction: never turn a
       marked middle of a three-edge arc with-cycle while the opponent
       holds a ring mark in the opposite cell; then fewest existing
       marks turned with-cycle (our own opening mark excluded); then
       least.
    4. Against an opponent mark running with its cell's cycle (not on
       an arc middle): mark against the cycle in the *other* cell, on
       the edge nearest the chord end that the attack is nearest to;
       if impossible, mirror the attack through the reflection.  On
       even rings this applies only when self-partnered edges exist.
    5. Settle unpaired edges — self-partnered, or with their partner
       already marked, skipping the partner of the opponent's last move
       — with against-the-cycle marks.
    6. Mirror the opponent's last move through the reflection (on odd
       rings only when it ran against the cycle).
    7. Any against-the-cycle mark, else the best remaining safe move,
       else the least legal move.

    Candidate pools are ranked to prefer moves that keep a safe reply
    in reserve against every safe opponent answer, then moves that lock
    the direction of fewest other edges.

    Raises:
        FamilyError: the board is not a cycle with a single chord.
    """
    fam = detect_chord(board)
    if fam is None:
        raise FamilyError("board is not a cycle with a single chord")
    chord = fam.chord_edge
    end_a, end_b = board.endpoints(chord)

    # Reflection through the chord axis: swap the ends, reverse each arc.
    reflect: dict[int, int] = {}
    arc_path: dict[int, list[int]] = {}
    for cell in board.cells:
        k = len(cell.vertices)
        i = cell.vertices.index(end_a)
        seq = [cell.vertices[(i + j) % k] for j in range(k)]
        path = [end_a] + seq[:0:-1] if seq[1] == end_b else seq
        arc_path[cell.id] = path
        for u, v in zip(path, reversed(path)):
            reflect[u] = v
    partner: dict[int, int] = {}
    for e in range(board.n_edges):
        u, v = board.endpoints(e)
        image = board.edge_between(reflect[u], reflect[v])
        assert image is not None
        partner[e] = image

    # arc_pos[e] = (cell, distance from the end_a side, from the end_b side)
    arc_pos: dict[int, tuple[int, int, int]] = {}
    for cid, path in arc_path.items():
        ne = len(path) - 1
        for j in range(ne):
            e = board.edge_between(path[j], path[j + 1])
            assert e is not None
            arc_pos[e] = (cid, j, ne - 1 - j)

    mid_edges: dict[int, int] = {}  # odd arc middles (self-partnered)
    short_arc_mids: dict[int, int] = {}  # ... of three-edge arcs only
    for cid, path in arc_path.items():
        ne = len(path) - 1
        if ne % 2 == 1:
            mid = board.edge_between(path[ne // 2], path[ne // 2 + 1])
            assert mid is not None
            mid_edges[cid] = mid
            if ne == 3:
                short_arc_mids[cid] = mid

    even_ring = fam.ring_size % 2 == 0
    self_ring_edges = sorted(
        e for e in range(board.n_edges) if e != chord and partner[e] == e
    )
    if self_ring_edges:
        u, v = board.endpoints(self_ring_edges[0])
        opening: Move | None = Move(self_ring_edges[0], min(u, v), max(u, v))
    else:
        opening = None

    def cycle_dir(t: int, h: int) -> dict[int, tuple[tuple[int, int], int]]:
        """Per ring edge: its with-cycle direction and cell, for chord t->h."""
        out: dict[int, tuple[tuple[int, int], int]] = {}
        for cid, path in arc_path.items():
            walk = list(reversed(path)) if path[0] == t else path
            for j in range(len(walk) - 1):
                e = board.edge_between(walk[j], walk[j + 1])
                assert e is not None
                out[e] = ((walk[j], walk[j + 1]), cid)
        return out

    def playable_edges(state: GameState) -> set[int]:
        return {m.edge for m in legal_moves(state)}

    def edges_killed(state: GameState, move: Move) -> int:
        """How many other edges stop being playable after this move."""
        before = playable_edges(state) - {move.edge}
        state.apply(move)
        after = playable_edges(state)
        state.undo()
        return len(before - after)

    def steady(state: GameState, move: Move) -> bool:
        """After the move, does every safe opponent reply leave us a safe move?"""
        state.apply(move)
        ok = True
        for reply in legal_moves(state):
            if is_death_move(state, reply):
                continue
            state.apply(reply)
            stuck = winner_if_terminal(state) is None and not any(
                not is_death_move(state, m) for m in legal_moves(state)
            )
            state.undo()
            if stuck:
                ok = False
                break
        state.undo()
        return ok

    def ranked(
        state: GameState,
        pool: list[Move],
        dist: Callable[[Move], int] | None = None,
    ) -> Move:
        if dist is None:
            return min(
                pool,
                key=lambda m: (not steady(state, m), edges_killed(state, m), m),
            )
        return min(
            pool,
            key=lambda m: (
                dist(m),
                not steady(state, m),
                edges_killed(state, m),
                m,
            ),
        )

    def claim_rank(state: GameState, t: int, h: int) -> tuple[int, int, tuple[int, int]]:
        flow = cycle_dir(t, h)
        veto = 0
        for cid, mid in short_arc_mids.items():
            mk = state.markings[mid]
            if mk is None or flow[mid][0] != mk:
                continue
            if any(
                state.markings[e] is not None
                and e != chord
                and partner[e] != e
                and arc_pos[e][0] != cid
                for e in range(board.n_edges)
            ):
                veto += 1
        support = 0
        for e, mk in enumerate(state.markings):
            if mk is None or e == chord:
                continue
            if opening is not None and e == opening.edge and mk == (
                opening.tail,
                opening.head,
            ):
                continue
            if flow[e][0] == mk:
                support += 1
        return (veto, support, (t, h))

    def usable(state: GameState, move: Move) -> bool:
        return state.direction_legal(
            move.edge, move.tail, move.head
        ) and not is_death_move(state, move)

    def mirror_reply(state: GameState) -> Move | None:
        last = state.last_move
        if last is None or last.edge == chord:
            return None
        image = partner[last.edge]
        if state.markings[image] is not None:
            return None
        move = Move(image, reflect[last.head], reflect[last.tail])
        return move if usable(state, move) else None

    def unpaired_answers(
        state: GameState,
        flow: dict[int, tuple[tuple[int, int], int]],
        skip: int | None,
    ) -> list[Move]:
        out = []
        for e, mk in enumerate(state.markings):
            if mk is not None or e == chord or e == skip:
                continue
            if partner[e] == e or state.markings[partner[e]] is not None:
                (a, b), _ = flow[e]
                move = Move(e, b, a)
                if usable(state, move):
                    out.append(move)
        return out

    def choose(state: GameState) -> Move:
        moves = _require_moves(state)
        wins = _winning_moves(state, moves)
        if wins:
            return wins[0]
        safe = _safe_moves(state, moves)

        if _marked_total(state) == 0:
            if opening is not None:
                return opening
            claims = sorted(m for m in safe if m.edge == chord)
            return claims[0] if claims else min(moves)

        if state.markings[chord] is None:
            claims = [m for m in safe if m.edge == chord]
            if claims:
                return min(claims, key=lambda m: claim_rank(state, m.tail, m.head))
            reply = mirror_reply(state)
            if reply is not None:
                return reply
            return ranked(state, safe) if safe else min(moves)

        t, h = state.markings[chord]
        flow = cycle_dir(t, h)
        last = state.last_move
        skip = partner[last.edge] if last is not None and last.edge != chord else None

        attack_cell: int | None = None
        attack_with_cycle = False
        near_end: str | None = None
        if last is not None and last.edge != chord:
            (a, b), cid = flow[last.edge]
            attack_cell = cid
            attack_with_cycle = (last.tail, last.head) == (a, b)
            _, da, db = arc_pos[last.edge]
            near_end = "a" if da < db else ("b" if db < da else None)

        def end_distance(move: Move) -> int:
            _, da, db = arc_pos[move.edge]
            if near_end == "a":
                return da
            if near_end == "b":
                return db
            return min(da, db)

        def counter_moves(cells: set[int] | None = None) -> list[Move]:
            out = []
            for m in safe:
                if m.edge == chord:
                    continue
                (a, b), cid = flow[m.edge]
                if (m.tail, m.head) == (b, a) and (cells is None or cid in cells):
                    out.append(m)
            return out

        if (
            attack_with_cycle
            and near_end is not None
            and (not even_ring or mid_edges)
        ):
            other = {c.id for c in board.cells} - {attack_cell}
            pool = counter_moves(other)
            if pool:
                return ranked(state, pool, dist=end_distance)
            reply = mirror_reply(state)
            if reply is not None:
                return reply

        settle = unpaired_answers(state, flow, skip)
        if settle:
            if attack_with_cycle:
                return min(
                    settle,
                    key=lambda m: (
                        arc_pos[m.edge][0] == attack_cell,
                        end_distance(m),
                        not steady(state, m),
                        edges_killed(state, m),
                        m,
                    ),
                )
            return ranked(state, settle)

        if even_ring:
            reply = mirror_reply(state)
            if reply is not None:
                return reply
        elif last is not None and last.edge != chord and not attack_with_cycle:
            reply = mirror_reply(state)
            if reply is not None:
                return reply

        pool = counter_moves()
        if pool:
            return ranked(
                state, pool, dist=end_distance if attack_with_cycle else None
            )
        if safe:
            return ranked(state, safe)
        return min(moves)

    policy = Policy("chord", choose)
    policy.family = fam  # type: ignore[attr-defined]
    return policy


# ----------------------------------------------------------------------
# Flap policy (cycle plus a triangular flap)
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class FlapBoard:
    """Structural summary of a cycle-with-flap board.

    The flap is one extra vertex of degree two (the apex) joined to two
    adjacent ring vertices, making a triangular cell with the ring edge
    between them (the base).  ``winner`` is 1 when the ring is odd,
    else 2.
    """

    apex: int
    base_edge: int
    triangle_cell: int
    ring_size: int

    @property
    def winner(self) -> int:
        return 1 if self.ring_size % 2 == 1 else 2


def detect_flap(board: Board) -> FlapBoard | None:
    """Recognise a cycle with a triangular flap, by structure alone."""
    if board.n_cells != 2:
        return None
    e1 = set(board.cells[0].edges)
    e2 = set(board.cells[1].edges)
    shared = e1 & e2
    if len(shared) != 2 or e1 | e2 != set(range(board.n_edges)):
        return None
    s1, s2 = sorted(shared)
    common = set(board.endpoints(s1)) & set(board.endpoints(s2))
    if len(common) != 1:
        return None
    apex = common.pop()
    if board.degree(apex) != 2:
        return None
    tri = next((c for c in board.cells if len(c.edges) == 3), None)
    if tri is None or not shared <= set(tri.edges):
        return None
    base = next(e for e in tri.edges if e not in shared)
    if any(
        board.degree(v) != 2
        for v in range(board.n_vertices)
        if v != apex and v not in board.endpoints(base)
    ):
        return None
    return FlapBoard(apex, base, tri.id, board.n_vertices - 1)


def flap_policy(board: Board) -> Policy:
    """The proved recipe for a cycle with a triangular flap.

    In order: complete a cycle cell; as the opening move (ring odd),
    mark the base in its least direction; as the first reply (ring
    even), neutralise the triangle if the opponent touched it, else mark
    the base with the same polarity as the opponent's move at their
    shared vertex (out keeps out, in keeps in), so the two cannot chain
    into a cycle; on later turns, whenever the triangle is cyclable in
    exactly one direction, mark one of its free edges against that
    direction; otherwise play the least move that is not a death move.
    Once the triangle is uncyclable the game is decided by safe play on
    the remaining cell.

    Raises:
        FamilyError: the board is not a cycle with a triangular flap.
    """
    fam = detect_flap(board)
    if fam is None:
        raise FamilyError("board is not a cycle with a triangular flap")
    tri = board.cells[fam.triangle_cell]
    base = fam.base_edge
    base_u, base_v = board.endpoints(base)
    forward = {
        e: (tri.vertices[i], tri.vertices[(i + 1) % 3])
        for i, e in enumerate(tri.edges)
    }
    backward = {e: (h, t) for e, (t, h) in forward.items()}

    def cyclable(state: GameState, arcs: dict[int, tuple[int, int]]) -> bool:
        return all(state.markings[e] in (None, arcs[e]) for e in tri.edges)

    def uncycle_candidates(state: GameState) -> list[Move]:
        fwd = cyclable(state, forward)
        bwd = cyclable(state, backward)
        if fwd == bwd:
            return []
        arcs = forward if fwd else backward
        return [
            Move(e, arcs[e][1], arcs[e][0])
            for e in tri.edges
            if state.markings[e] is None
        ]

    def choose(state: GameState) -> Move:
        moves = _require_moves(state)
        wins = _winning_moves(state, moves)
        if wins:
            return wins[0]
        safe = _safe_moves(state, moves)
        safe_set = set(safe)
        marked = _marked_total(state)
        if marked == 0 and fam.winner == 1:
            return Move(base, min(base_u, base_v), max(base_u, base_v))
        if marked == 1 and fam.winner == 2:
            first = _sole_marked_move(state)
            if first.edge not in tri.edges and state.markings[base] is None:
                shared_v = {first.tail, first.head} & {base_u, base_v}
                cands = [m for m in safe if m.edge == base]
                if shared_v:
                    v = shared_v.pop()
                    o = board.other_endpoint(base, v)
                    want = Move(base, v, o) if first.tail == v else Move(base, o, v)
                    if want in safe_set:
                        return want
                if cands:
                    return min(cands)
        neutralise = sorted(
            m for m in uncycle_candidates(state) if m in safe_set
        )
        if neutralise:
            return neutralise[0]
        if safe:
            return safe[0]
        return min(moves)

    policy = Policy("flap", choose)
    policy.family = fam  # type: ignore[attr-defined]
    return policy


# ----------------------------------------------------------------------
# Search-backed and baseline policies
# ----------------------------------------------------------------------


def optimal_policy(*, max_edges: int | None = None) -> Policy:
    """Play the exact best move from full search at every turn."""

    def choose(state: GameState) -> Move:
        result = solve(state, max_edges=max_edges)
        if result.best_move is None:
            raise StrategyError("no legal move available")
        return result.best_move

    return Policy("optimal", choose)


def random_policy(seed: int) -> Policy:
    """Seeded uniform choice among legal moves (reproducible baseline)."""
    import random as _random

    rng = _random.Random(seed)

    def choose(state: GameState) -> Move:
        return rng.choice(sorted(_require_moves(state)))

    policy = Policy(f"random({seed})", choose)
    policy.seed = seed  # type: ignore[attr-defined]
    return policy


# ----------------------------------------------------------------------
# Name registry
# ----------------------------------------------------------------------

POLICY_NAMES = ("parity", "chord", "flap", "mirror", "optimal", "random(seed)")

_RANDOM_RE = re.compile(r"^random\((\d+)\)$")


def get_policy(name: str, board: Board, *, max_edges: int | None = None) -> Policy:
    """Resolve a policy by its public name for the given board.

    Names: ``parity``, ``chord``, ``flap``, ``mirror`` (first qualifying
    involution of the board), ``optimal``, ``random(N)``.

    Raises:
        ValueError: unknown name, or ``mirror`` on a board with no
            qualifying involution.
        FamilyError: ``chord``/``flap`` on a board outside the family.
    """
    if name == "parity":
        return parity_policy()
    if name == "chord":
        return chord_policy(board)
    if name == "flap":
        return flap_policy(board)
    if name == "mirror":
        for inv in find_involutions(board):
            if inv.qualifies:
                return mirror_reverse_policy(inv)
        raise ValueError("board has no qualifying involution for 'mirror'")
    if name == "optimal":
        return optimal_policy(max_edges=max_edges)
    match = _RANDOM_RE.match(name)
    if match:
        return random_policy(int(match.group(1)))
    raise ValueError(f"unknown policy name: {name!r}")
