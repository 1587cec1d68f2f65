"""Complete orientations and the constructive cycle-cell search.

A complete sink/source-free orientation of a board always contains a
cycle cell.  This module provides:

* ``enumerate_orientations`` / ``sample_orientation``: all (or one
  random) complete sink/source-free orientations of a board.
* ``cw_next`` / ``ccw_next`` / ``trace_cycle``: the clockwise and
  counterclockwise edge-selection rules and the directed-walk tracer.
* ``is_inside_absorbing``: geometric check that every interior edge
  incident to a directed cycle points toward it.
* ``gut``: the subcomplex strictly inside an inside-absorbing cycle
  after discarding cells that touch the cycle.
* ``find_cycle_cell``: the constructive search — alternate the two
  selection rules to settle on an inside-absorbing cycle, then repeatedly
  trace inside the gut (backwards under absorbing polarity, forwards
  under repelling) until the surviving cycle bounds a single cell, which
  is then a cycle cell.  Every intermediate cycle is recorded in a
  certificate that ``validate_certificate`` re-checks independently.
* ``oracle_cycle_cell``: brute-force verifier scanning every cell.

Orientation file format (UTF-8 JSON)::

    {"board": "path/to/file.board" | {inline board document},
     "arcs": [{"edge": 0, "tail": 1, "head": 0}, ...]}

covering every edge exactly once.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .board import Board, board_from_obj, board_obj, parse_board
from .geometry import point_in_polygon, signed_area
from .rules import scan_cycle_cells

__all__ = [
    "CertificateError",
    "CertificateStep",
    "DirectedCycle",
    "FilledSearchResult",
    "Gut",
    "NoCellsError",
    "Orientation",
    "OrientationError",
    "OrientationLimitError",
    "ccw_next",
    "cw_next",
    "enumerate_orientations",
    "find_cycle_cell",
    "gut",
    "is_inside_absorbing",
    "is_inside_repelling",
    "load_orientation",
    "oracle_cycle_cell",
    "orientation_to_json",
    "sample_orientation",
    "trace_cycle",
    "validate_certificate",
]

ENUMERATION_EDGE_LIMIT = 20


class OrientationError(ValueError):
    """Arcs do not form a complete sink/source-free orientation."""


class OrientationLimitError(ValueError):
    """Board too large for exhaustive orientation enumeration."""


class NoCellsError(ValueError):
    """The board has no bounded cells (tree); out of domain."""


class CertificateError(RuntimeError):
    """The constructive search lost one of its invariants."""


ArcMap = "Orientation | Sequence[tuple[int, int]] | dict[int, tuple[int, int]]"


@dataclass(frozen=True)
class Orientation:
    """A complete sink/source-free orientation: one (tail, head) per edge."""

    arcs: tuple[tuple[int, int], ...]

    @classmethod
    def validate(cls, board: Board, arcs: ArcMap) -> "Orientation":
        """Check completeness and the sink/source rule.

        Raises:
            OrientationError: missing/duplicate edges, wrong endpoints,
                or a sink/source vertex.
        """
        arc_list = _arc_list(board, arcs)
        for v in range(board.n_vertices):
            incident = board.vertex_edges(v)
            if not incident:
                continue
            if all(arc_list[e][1] == v for e in incident):
                raise OrientationError(f"vertex {v} is a sink")
            if all(arc_list[e][0] == v for e in incident):
                raise OrientationError(f"vertex {v} is a source")
        return cls(tuple(arc_list))

    def __getitem__(self, edge: int) -> tuple[int, int]:
        return self.arcs[edge]

    def __len__(self) -> int:
        return len(self.arcs)


def _arc_list(board: Board, arcs: ArcMap) -> list[tuple[int, int]]:
    """Normalize any arc mapping to a complete per-edge list."""
    if isinstance(arcs, Orientation):
        return list(arcs.arcs)
    if isinstance(arcs, dict):
        items = arcs
        if sorted(items) != list(range(board.n_edges)):
            raise OrientationError("arcs must cover every edge exactly once")
        seq = [items[e] for e in range(board.n_edges)]
    else:
        seq = list(arcs)
        if len(seq) != board.n_edges:
            raise OrientationError(
                f"expected {board.n_edges} arcs, got {len(seq)}"
            )
    out: list[tuple[int, int]] = []
    for e, (t, h) in enumerate(seq):
        if frozenset((t, h)) != frozenset(board.endpoints(e)):
            raise OrientationError(
                f"arc ({t}, {h}) does not match edge {e} endpoints "
                f"{board.endpoints(e)}"
            )
        out.append((int(t), int(h)))
    return out


@dataclass(frozen=True)
class DirectedCycle:
    """A vertex-simple directed cycle in an orientation.

    Attributes:
        vertices: cycle vertices in walk order (not repeated at the end).
        arcs: per-step (tail, head) pairs, arcs[i] = vertices[i] ->
            vertices[i+1 mod k].
        orientation: "ccw" (positive signed area) or "cw".
        enclosed_cells: ids of cells whose interior point lies strictly
            inside the cycle polygon.
    """

    vertices: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]
    orientation: str
    enclosed_cells: frozenset[int]


def _make_cycle(board: Board, vertices: Sequence[int]) -> DirectedCycle:
    k = len(vertices)
    arcs = tuple(
        (vertices[i], vertices[(i + 1) % k]) for i in range(k)
    )
    poly = [board.points[v] for v in vertices]
    area = signed_area(poly)
    enclosed = frozenset(
        c.id for c in board.cells if point_in_polygon(c.interior_point, poly)
    )
    return DirectedCycle(
        vertices=tuple(vertices),
        arcs=arcs,
        orientation="ccw" if area > 0 else "cw",
        enclosed_cells=enclosed,
    )


# ----------------------------------------------------------------------
# Selection rules and traces
# ----------------------------------------------------------------------


def _next_arc(
    board: Board,
    arcs: Sequence[tuple[int, int]],
    tail: int,
    head: int,
    rule: str,
) -> tuple[int, int]:
    """Apply a selection rule at ``head`` after arriving along tail->head.

    The clockwise rule scans the rotation at ``head`` clockwise (reverse
    of the stored counterclockwise order) starting from the arrival edge
    and returns the first edge directed out of ``head``; the
    counterclockwise rule scans the other way.
    """
    edge = board.edge_between(tail, head)
    if edge is None:
        raise ValueError(f"no edge between {tail} and {head}")
    rot = board.rotation[head]
    idx = rot.index(edge)
    n = len(rot)
    step = -1 if rule == "cw" else 1
    for k in range(1, n + 1):
        e2 = rot[(idx + step * k) % n]
        t2, h2 = arcs[e2]
        if t2 == head:
            return (t2, h2)
    raise OrientationError(f"vertex {head} has no outgoing edge (sink)")


def cw_next(
    board: Board, arcs: ArcMap, tail: int, head: int
) -> tuple[int, int]:
    """Clockwise selection rule: first outgoing arc clockwise from arrival."""
    return _next_arc(board, _arc_list(board, arcs), tail, head, "cw")


def ccw_next(
    board: Board, arcs: ArcMap, tail: int, head: int
) -> tuple[int, int]:
    """Counterclockwise selection rule (mirror image of cw_next)."""
    return _next_arc(board, _arc_list(board, arcs), tail, head, "ccw")


def trace_cycle(
    board: Board,
    arcs: ArcMap,
    start: tuple[int, int],
    rule: str = "cw",
) -> DirectedCycle:
    """Follow a selection rule from a start arc until a vertex repeats.

    Returns:
        The cycle portion of the walk as a DirectedCycle.
    """
    arc_list = _arc_list(board, arcs)
    edge = board.edge_between(*start)
    if edge is None or arc_list[edge] != tuple(start):
        raise ValueError(f"start arc {start} is not in the orientation")
    tail, head = start
    order: list[int] = [tail]
    seen: dict[int, int] = {tail: 0}
    while head not in seen:
        seen[head] = len(order)
        order.append(head)
        tail, head = _next_arc(board, arc_list, tail, head, rule)
    cycle_vertices = order[seen[head]:]
    return _make_cycle(board, cycle_vertices)


def _rule_limit_cycle(
    board: Board,
    arcs: Sequence[tuple[int, int]],
    start: tuple[int, int],
    rule: str,
) -> list[int]:
    """Arc-iterate a selection rule to its periodic limit cycle.

    The successor-of-arc map is deterministic and total, so iteration is
    eventually periodic in arcs; on the period every transition obeys the
    rule, including at the closure vertex.  Returns the period's tail
    vertices; when the period revisits a vertex, the first vertex-simple
    subcycle is returned instead (downstream geometric checks arbitrate).
    """
    seen: dict[tuple[int, int], int] = {}
    seq: list[tuple[int, int]] = []
    arc = tuple(start)
    while arc not in seen:
        seen[arc] = len(seq)
        seq.append(arc)
        arc = _next_arc(board, arcs, arc[0], arc[1], rule)
    period = seq[seen[arc]:]
    tails = [a[0] for a in period]
    if len(set(tails)) == len(tails):
        return tails
    first_pos: dict[int, int] = {}
    for i, v in enumerate(tails + tails):
        if v in first_pos and i - first_pos[v] <= len(tails):
            sub = (tails + tails)[first_pos[v]: i]
            if len(set(sub)) == len(sub):
                return sub
        first_pos.setdefault(v, i)
    raise CertificateError("selection rule produced no simple cycle")


# ----------------------------------------------------------------------
# Geometric predicates
# ----------------------------------------------------------------------


def _cycle_vertices(cycle: "DirectedCycle | Sequence[int]") -> list[int]:
    if isinstance(cycle, DirectedCycle):
        return list(cycle.vertices)
    return list(cycle)


def _absorption(
    board: Board,
    arc_list: Sequence[tuple[int, int]],
    cycle: "DirectedCycle | Sequence[int]",
    toward: bool,
) -> bool:
    """Shared core of the absorbing/repelling checks.

    toward=True demands interior edges incident to the cycle point toward
    their cycle endpoint; toward=False demands they point away.
    """
    vertices = _cycle_vertices(cycle)
    on_cycle = set(vertices)
    poly = [board.points[v] for v in vertices]
    k = len(vertices)
    cycle_edges = set()
    for i in range(k):
        e = board.edge_between(vertices[i], vertices[(i + 1) % k])
        if e is None:
            raise ValueError("cycle vertices are not consecutively adjacent")
        cycle_edges.add(e)
    for e, (t, h) in enumerate(arc_list):
        if e in cycle_edges:
            continue
        t_on, h_on = t in on_cycle, h in on_cycle
        if not (t_on or h_on):
            continue
        if t_on and h_on:
            # A chord: interior iff its midpoint is strictly inside.
            pt, ph = board.points[t], board.points[h]
            mid = ((pt[0] + ph[0]) / 2, (pt[1] + ph[1]) / 2)
            if not point_in_polygon(mid, poly):
                continue
            # A chord can never point toward (or away from) both of its
            # cycle endpoints.
            return False
        inner = h if t_on else t
        if not point_in_polygon(board.points[inner], poly):
            continue
        cycle_end = t if t_on else h
        points_toward = h == cycle_end
        if points_toward != toward:
            return False
    return True


def is_inside_absorbing(
    board: Board, arcs: ArcMap, cycle: "DirectedCycle | Sequence[int]"
) -> bool:
    """True iff every interior edge incident to the cycle points toward it.

    Accepts raw arc mappings so drawn configurations that are not valid
    complete orientations (e.g. with interior dead-end stubs) can still
    be checked.
    """
    return _absorption(board, _arc_list(board, arcs), cycle, toward=True)


def is_inside_repelling(
    board: Board, arcs: ArcMap, cycle: "DirectedCycle | Sequence[int]"
) -> bool:
    """True iff every interior edge incident to the cycle points away."""
    return _absorption(board, _arc_list(board, arcs), cycle, toward=False)


@dataclass(frozen=True)
class Gut:
    """Subcomplex strictly inside a cycle, away from cells touching it.

    Attributes:
        vertices: vertices strictly inside the cycle polygon.
        edges: edges with both endpoints strictly inside.
        cells: enclosed cells none of whose boundary vertices lie on the
            cycle.
    """

    vertices: frozenset[int]
    edges: frozenset[int]
    cells: frozenset[int]

    @property
    def empty(self) -> bool:
        return not (self.vertices or self.edges or self.cells)


def gut(
    board: Board,
    arcs: ArcMap | None,
    cycle: "DirectedCycle | Sequence[int]",
) -> Gut:
    """Compute the gut of a directed cycle.

    The arcs argument is accepted for signature parity but unused: the
    gut is a property of the cycle's geometry alone.
    """
    vertices = _cycle_vertices(cycle)
    on_cycle = set(vertices)
    poly = [board.points[v] for v in vertices]
    inside = frozenset(
        v
        for v in range(board.n_vertices)
        if v not in on_cycle and point_in_polygon(board.points[v], poly)
    )
    edges = frozenset(
        e
        for e, (u, w) in enumerate(board.edges)
        if u in inside and w in inside
    )
    cells = frozenset(
        c.id
        for c in board.cells
        if point_in_polygon(c.interior_point, poly)
        and not (set(c.vertices) & on_cycle)
    )
    return Gut(vertices=inside, edges=edges, cells=cells)


# ----------------------------------------------------------------------
# The constructive search
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class CertificateStep:
    """One intermediate cycle of the constructive search.

    Attributes:
        stage: "initial" for the first settled cycle, "gut" afterwards.
        polarity: "absorbing" or "repelling" — the property the cycle is
            claimed to satisfy in the original orientation.
        vertices: the cycle.
        enclosed: number of enclosed cells (strictly decreasing over
            gut stages).
    """

    stage: str
    polarity: str
    vertices: tuple[int, ...]
    enclosed: int


@dataclass(frozen=True)
class FilledSearchResult:
    """Outcome of find_cycle_cell.

    Attributes:
        cell: id of the cycle cell found.
        direction: "ccw" or "cw" relative to the stored boundary walk.
        certificate: the intermediate cycles, in search order.
    """

    cell: int
    direction: str
    certificate: tuple[CertificateStep, ...]


def _settle_cycle(
    board: Board,
    world: Sequence[tuple[int, int]],
    start: tuple[int, int],
    allowed: frozenset[int] | None,
) -> DirectedCycle:
    """Alternate cw/ccw traces until an inside-absorbing cycle appears.

    ``world`` is the arc list actually traced (the reversed orientation
    for backward traces); "absorbing" is judged within that world.  A
    trace that settles on a non-absorbing cycle seeds retraces under the
    opposite rule from each of that cycle's arcs; candidates are explored
    deterministically (FIFO, arcs ordered by edge id).  ``allowed``, when
    given, asserts that traces stay within a vertex set (walks started
    strictly inside an absorbing cycle can never leave it).
    """
    queue: deque[tuple[str, tuple[int, int]]] = deque(
        [("cw", tuple(start)), ("ccw", tuple(start))]
    )
    tried: set[tuple[str, tuple[int, int]]] = set()
    budget = 16 * board.n_edges + 32
    while queue and budget > 0:
        rule, current = queue.popleft()
        if (rule, current) in tried:
            continue
        tried.add((rule, current))
        budget -= 1
        vertices = _rule_limit_cycle(board, world, current, rule)
        cycle = _make_cycle(board, vertices)
        if allowed is not None and not set(vertices) <= allowed:
            raise CertificateError("trace escaped its containment region")
        if _absorption(board, world, cycle, toward=True):
            return cycle
        other = "ccw" if rule == "cw" else "cw"
        for t, h in sorted(
            cycle.arcs, key=lambda a: board.edge_between(a[0], a[1])
        ):
            queue.append((other, (t, h)))
    raise CertificateError("selection-rule alternation did not settle")


def find_cycle_cell(board: Board, orientation: ArcMap) -> FilledSearchResult:
    """Constructively locate a cycle cell of a complete orientation.

    Raises:
        NoCellsError: the board has no bounded cells.
        OrientationError: the orientation is invalid.
        CertificateError: an internal invariant failed (never expected).
    """
    if board.n_cells == 0:
        raise NoCellsError("board has no bounded cells")
    arcs = Orientation.validate(board, orientation).arcs
    reversed_arcs = tuple((h, t) for t, h in arcs)

    certificate: list[CertificateStep] = []
    cycle = _settle_cycle(board, arcs, arcs[0], allowed=None)
    polarity = "absorbing"
    certificate.append(
        CertificateStep(
            stage="initial",
            polarity=polarity,
            vertices=cycle.vertices,
            enclosed=len(cycle.enclosed_cells),
        )
    )

    for _ in range(board.n_cells + 2):
        enclosed = cycle.enclosed_cells
        if len(enclosed) == 1:
            cell = board.cells[next(iter(enclosed))]
            if set(cell.edges) == {
                board.edge_between(t, h) for t, h in cycle.arcs
            }:
                direction = _cell_direction(board, cell.id, arcs)
                return FilledSearchResult(
                    cell=cell.id,
                    direction=direction,
                    certificate=tuple(certificate),
                )
        g = gut(board, arcs, cycle)
        if not g.edges:
            raise CertificateError(
                "nonempty region left no traceable gut edges"
            )
        start_edge = min(g.edges)
        if polarity == "absorbing":
            # Backward trace: forward in the reversed orientation.  Its
            # absorbing cycles are repelling in the original.
            t, h = reversed_arcs[start_edge]
            settled = _settle_cycle(
                board, reversed_arcs, (t, h), allowed=g.vertices
            )
            cycle_vertices = tuple(reversed(settled.vertices))
            new_cycle = _make_cycle(board, cycle_vertices)
            polarity = "repelling"
        else:
            t, h = arcs[start_edge]
            new_cycle = _settle_cycle(board, arcs, (t, h), allowed=g.vertices)
            polarity = "absorbing"
        if not new_cycle.enclosed_cells < enclosed:
            raise CertificateError(
                "gut trace did not strictly shrink the enclosed region"
            )
        certificate.append(
            CertificateStep(
                stage="gut",
                polarity=polarity,
                vertices=new_cycle.vertices,
                enclosed=len(new_cycle.enclosed_cells),
            )
        )
        cycle = new_cycle
    raise CertificateError("cycle-cell search exceeded its round budget")


def _cell_direction(
    board: Board, cell_id: int, arcs: Sequence[tuple[int, int]]
) -> str:
    """Direction of a coherently oriented cell under the given arcs."""
    cell = board.cells[cell_id]
    k = len(cell.vertices)
    first = arcs[cell.edges[0]]
    along = first == (cell.vertices[0], cell.vertices[1 % k])
    return "ccw" if along else "cw"


def validate_certificate(
    board: Board, orientation: ArcMap, result: FilledSearchResult
) -> bool:
    """Independently re-check a find_cycle_cell certificate.

    Verifies: every step is a genuine directed cycle of the orientation
    with its claimed polarity; enclosed-cell counts strictly decrease
    over gut stages; and the final cell is a coherently oriented cycle
    cell (confirmed by the brute-force oracle) matching the result.

    Raises:
        CertificateError: any claim fails.
    """
    arcs = Orientation.validate(board, orientation).arcs
    previous: int | None = None
    for step in result.certificate:
        k = len(step.vertices)
        for i in range(k):
            t, h = step.vertices[i], step.vertices[(i + 1) % k]
            e = board.edge_between(t, h)
            if e is None or arcs[e] != (t, h):
                raise CertificateError(
                    f"step cycle arc {t}->{h} is not in the orientation"
                )
        check = (
            is_inside_absorbing
            if step.polarity == "absorbing"
            else is_inside_repelling
        )
        if not check(board, arcs, step.vertices):
            raise CertificateError(
                f"step cycle is not {step.polarity} as claimed"
            )
        if step.stage == "gut" and previous is not None:
            if step.enclosed >= previous:
                raise CertificateError(
                    "enclosed-cell count failed to strictly decrease"
                )
        previous = step.enclosed
    oracle = oracle_cycle_cell(board, arcs)
    if (result.cell, result.direction) not in oracle:
        raise CertificateError(
            f"result cell {result.cell} ({result.direction}) is not a "
            "cycle cell of the orientation"
        )
    return True


def oracle_cycle_cell(
    board: Board, arcs: ArcMap
) -> list[tuple[int, str]]:
    """Brute-force verifier: scan every cell for coherent orientation."""
    arc_list = _arc_list(board, arcs)
    return scan_cycle_cells(board, {e: a for e, a in enumerate(arc_list)})


# ----------------------------------------------------------------------
# Orientation generation
# ----------------------------------------------------------------------


def enumerate_orientations(
    board: Board, *, limit: int = ENUMERATION_EDGE_LIMIT
) -> Iterator[Orientation]:
    """Yield every complete sink/source-free orientation.

    Backtracks over edges in id order (lower-endpoint tail first) with
    saturated-vertex pruning; complete and duplicate-free.

    Raises:
        OrientationLimitError: more than ``limit`` edges.
    """
    if board.n_edges > limit:
        raise OrientationLimitError(
            f"board has {board.n_edges} edges, enumeration limit is {limit}"
        )
    n_edges = board.n_edges
    arcs: list[tuple[int, int] | None] = [None] * n_edges
    remaining = [board.degree(v) for v in range(board.n_vertices)]
    ins = [0] * board.n_vertices
    outs = [0] * board.n_vertices

    def vertex_ok(v: int) -> bool:
        if remaining[v] == 0:
            return ins[v] > 0 and outs[v] > 0
        return True

    def assign(e: int) -> Iterator[Orientation]:
        if e == n_edges:
            yield Orientation(tuple(arcs))  # type: ignore[arg-type]
            return
        u, v = board.endpoints(e)
        lo, hi = (u, v) if u < v else (v, u)
        for tail, head in ((lo, hi), (hi, lo)):
            arcs[e] = (tail, head)
            remaining[tail] -= 1
            remaining[head] -= 1
            outs[tail] += 1
            ins[head] += 1
            if vertex_ok(tail) and vertex_ok(head):
                yield from assign(e + 1)
            arcs[e] = None
            remaining[tail] += 1
            remaining[head] += 1
            outs[tail] -= 1
            ins[head] -= 1

    yield from assign(0)


def sample_orientation(board: Board, seed: int) -> Orientation:
    """Seed-reproducible random complete sink/source-free orientation.

    Backtracks over a shuffled edge order with shuffled direction
    preference; the same seed always returns the same orientation.

    Raises:
        OrientationError: the board admits no valid orientation.
    """
    rng = random.Random(seed)
    order = list(range(board.n_edges))
    rng.shuffle(order)
    arcs: list[tuple[int, int] | None] = [None] * board.n_edges
    remaining = [board.degree(v) for v in range(board.n_vertices)]
    ins = [0] * board.n_vertices
    outs = [0] * board.n_vertices

    def vertex_ok(v: int) -> bool:
        return remaining[v] > 0 or (ins[v] > 0 and outs[v] > 0)

    def assign(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        u, v = board.endpoints(e)
        directions = [(u, v), (v, u)]
        rng.shuffle(directions)
        for tail, head in directions:
            arcs[e] = (tail, head)
            remaining[tail] -= 1
            remaining[head] -= 1
            outs[tail] += 1
            ins[head] += 1
            if vertex_ok(tail) and vertex_ok(head) and assign(i + 1):
                return True
            arcs[e] = None
            remaining[tail] += 1
            remaining[head] += 1
            outs[tail] -= 1
            ins[head] -= 1
        return False

    if not assign(0):
        raise OrientationError("board admits no sink/source-free orientation")
    return Orientation(tuple(arcs))  # type: ignore[arg-type]


# ----------------------------------------------------------------------
# Orientation files
# ----------------------------------------------------------------------


def load_orientation(
    text: str,
    base_dir: "Path | str | None" = None,
    board: Board | None = None,
) -> tuple[Board, Orientation]:
    """Parse an orientation document; resolve its board like a record.

    Raises:
        OrientationError: malformed document or invalid arcs.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OrientationError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "arcs" not in doc or not isinstance(
        doc["arcs"], list
    ):
        raise OrientationError("orientation document needs an 'arcs' array")
    if board is None:
        ref = doc.get("board")
        if isinstance(ref, str):
            path = Path(ref)
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            try:
                board = parse_board(path.read_text(encoding="utf-8"))
            except OSError as exc:
                raise OrientationError(
                    f"cannot read board file {path}: {exc}"
                ) from exc
        elif isinstance(ref, dict):
            board = board_from_obj(ref)
        else:
            raise OrientationError("orientation has no usable 'board' reference")
    arcs: dict[int, tuple[int, int]] = {}
    for row in doc["arcs"]:
        if not isinstance(row, dict) or not {"edge", "tail", "head"} <= set(row):
            raise OrientationError(f"bad arc row: {row!r}")
        if row["edge"] in arcs:
            raise OrientationError(f"duplicate arc for edge {row['edge']}")
        arcs[row["edge"]] = (row["tail"], row["head"])
    return board, Orientation.validate(board, arcs)


def orientation_to_json(board_ref: "str | Board", arcs: ArcMap) -> str:
    """Serialize an orientation document."""
    if isinstance(board_ref, Board):
        board_field: object = board_obj(board_ref)
        arc_list = _arc_list(board_ref, arcs)
    else:
        board_field = board_ref
        if isinstance(arcs, Orientation):
            arc_list = list(arcs.arcs)
        elif isinstance(arcs, dict):
            arc_list = [arcs[e] for e in sorted(arcs)]
        else:
            arc_list = list(arcs)
    doc = {
        "board": board_field,
        "arcs": [
            {"edge": e, "tail": t, "head": h}
            for e, (t, h) in enumerate(arc_list)
        ],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"
