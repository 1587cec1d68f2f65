"""Immutable planar game boards.

A board is a simple connected graph with a straight-line planar embedding:
vertices carry coordinates, edges are segments between them, and the
bounded faces of the drawing are the board's cells.  Construction derives
the rotation system (counterclockwise edge order around each vertex) from
the coordinates, traverses faces combinatorially, and validates every
structural requirement with a distinct diagnostic code.

Face traversal convention: the successor of directed edge (u, v) is
(v, w) where w is the neighbor after u in clockwise order around v; the
interior of each traversed face then lies to its left, so bounded faces
come out as counterclockwise walks (positive signed area) and the outer
face is the unique walk with minimal (negative) signed area.

File format (UTF-8 JSON)::

    {"vertices": [{"id": 0, "x": 0.0, "y": 1.0}, ...],
     "edges":    [{"id": 0, "u": 0, "v": 1}, ...]}

Ids must be dense from 0.  Emission is canonical: arrays sorted by id,
numbers in shortest round-trip decimal form.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from collections.abc import Sequence

from .geometry import (
    EPS,
    Point,
    angular_order,
    dist_point_segment,
    point_in_polygon,
    point_on_segment,
    polygon_centroid,
    segments_cross,
    signed_area,
)

__all__ = [
    "Board",
    "BoardError",
    "Cell",
    "board_to_json",
    "extract_cells",
    "parse_board",
    "signed_area",
]


class BoardError(ValueError):
    """Invalid board input.

    Attributes:
        code: machine-readable diagnostic, one of ``syntax``,
            ``duplicate-id``, ``dense-id``, ``coordinate``, ``coincident``,
            ``loop``, ``parallel-edge``, ``disconnected``, ``crossing``,
            ``angle-tie``, ``degenerate``.
    """

    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class Cell:
    """A bounded face of the embedding.

    The boundary is stored as a counterclockwise walk: ``edges[i]`` joins
    ``vertices[i]`` to ``vertices[(i + 1) % len]``.  Walks are usually
    simple cycles but may repeat vertices/edges when a bridge dangles
    inside the face (spur edges appear twice, in opposite directions).
    """

    id: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    area: float
    interior_point: Point


class Board:
    """Validated immutable planar board.

    Args:
        points: vertex coordinates, indexed by vertex id.
        edges: endpoint pairs (u, v), indexed by edge id.

    Raises:
        BoardError: any structural or geometric violation.
    """

    def __init__(
        self,
        points: Sequence[Point],
        edges: Sequence[tuple[int, int]],
    ) -> None:
        self.points: tuple[Point, ...] = tuple(
            (float(x), float(y)) for x, y in points
        )
        self.edges: tuple[tuple[int, int], ...] = tuple(
            (int(u), int(v)) for u, v in edges
        )
        self._validate_basic()
        self.rotation: tuple[tuple[int, ...], ...] = self._build_rotation()
        self._validate_geometry()
        self._validate_connected()
        cells, outer = extract_cells(self.points, self.edges, self.rotation)
        self.cells: tuple[Cell, ...] = tuple(cells)
        self.outer_walk: tuple[tuple[int, ...], tuple[int, ...]] | None = outer
        if len(self.cells) != len(self.edges) - len(self.points) + 1:
            raise BoardError(
                "degenerate",
                f"cell count {len(self.cells)} violates the Euler relation "
                f"E - V + 1 = {len(self.edges) - len(self.points) + 1}",
            )
        edge_cells: list[list[int]] = [[] for _ in self.edges]
        for cell in self.cells:
            for e in set(cell.edges):
                edge_cells[e].append(cell.id)
        self.edge_cells: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(cs)) for cs in edge_cells
        )
        self._edge_index: dict[frozenset[int], int] = {
            frozenset(uv): e for e, uv in enumerate(self.edges)
        }

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.points)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_cells(self) -> int:
        return len(self.cells)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def other_endpoint(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def edge_between(self, u: int, v: int) -> int | None:
        return self._edge_index.get(frozenset((u, v)))

    def vertex_edges(self, v: int) -> tuple[int, ...]:
        """Incident edges of v in counterclockwise rotation order."""
        return self.rotation[v]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def to_json(self) -> str:
        return board_to_json(self)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Board)
            and self.points == other.points
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.points, self.edges))

    def __repr__(self) -> str:
        return (
            f"Board(V={self.n_vertices}, E={self.n_edges}, "
            f"cells={self.n_cells})"
        )

    # ------------------------------------------------------------------
    # Validation
    # ------------------------------------------------------------------

    def _validate_basic(self) -> None:
        if not self.points:
            raise BoardError("degenerate", "board has no vertices")
        for i, (x, y) in enumerate(self.points):
            if not (math.isfinite(x) and math.isfinite(y)):
                raise BoardError(
                    "coordinate", f"vertex {i} has non-finite coordinates"
                )
        n = len(self.points)
        for i in range(n):
            for j in range(i + 1, n):
                dx = self.points[i][0] - self.points[j][0]
                dy = self.points[i][1] - self.points[j][1]
                if math.hypot(dx, dy) < EPS:
                    raise BoardError(
                        "coincident",
                        f"vertices {i} and {j} share the same position",
                    )
        seen: set[frozenset[int]] = set()
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise BoardError(
                    "syntax", f"edge {e} references unknown vertex"
                )
            if u == v:
                raise BoardError("loop", f"edge {e} is a loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise BoardError(
                    "parallel-edge",
                    f"edge {e} duplicates another edge between {u} and {v}",
                )
            seen.add(key)

    def _build_rotation(self) -> tuple[tuple[int, ...], ...]:
        incident: list[list[int]] = [[] for _ in self.points]
        for e, (u, v) in enumerate(self.edges):
            incident[u].append(e)
            incident[v].append(e)
        rotation: list[tuple[int, ...]] = []
        for v, edge_ids in enumerate(incident):
            others = [
                (e, self.points[self.other_endpoint_raw(e, v)]) for e in edge_ids
            ]
            try:
                ordered = angular_order(self.points[v], others)
            except ValueError as exc:
                raise BoardError("angle-tie", f"at vertex {v}: {exc}") from exc
            rotation.append(tuple(ordered))
        return tuple(rotation)

    def other_endpoint_raw(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if v == u else u

    def _validate_geometry(self) -> None:
        pts = self.points
        segs = [(pts[u], pts[v]) for u, v in self.edges]
        for e, (u, v) in enumerate(self.edges):
            for w in range(len(pts)):
                if w in (u, v):
                    continue
                if point_on_segment(pts[w], pts[u], pts[v]):
                    raise BoardError(
                        "crossing",
                        f"vertex {w} lies in the interior of edge {e}",
                    )
        for e1 in range(len(self.edges)):
            u1, v1 = self.edges[e1]
            for e2 in range(e1 + 1, len(self.edges)):
                u2, v2 = self.edges[e2]
                if {u1, v1} & {u2, v2}:
                    continue
                if segments_cross(*segs[e1], *segs[e2]):
                    raise BoardError(
                        "crossing", f"edges {e1} and {e2} intersect"
                    )

    def _validate_connected(self) -> None:
        n = len(self.points)
        if n == 1:
            return
        seen = {0}
        stack = [0]
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise BoardError(
                "disconnected",
                f"board is disconnected ({len(seen)} of {n} vertices reachable)",
            )


# ----------------------------------------------------------------------
# Face traversal
# ----------------------------------------------------------------------


def extract_cells(
    points: Sequence[Point],
    edges: Sequence[tuple[int, int]],
    rotation: Sequence[Sequence[int]],
) -> tuple[list[Cell], tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Traverse the faces of an embedding and return its bounded cells.

    Args:
        points: vertex coordinates.
        edges: endpoint pairs per edge id.
        rotation: counterclockwise incident-edge order per vertex.

    Returns:
        (cells, outer): bounded faces as counterclockwise ``Cell`` walks in
        extraction order, and the outer face as a (vertices, edges) walk
        pair (None when the board has no edges).
    """
    if not edges:
        return [], None
    # Directed edge = (edge id, flag); flag 0 traverses u -> v as stored.
    visited: set[tuple[int, int]] = set()
    position: list[dict[int, int]] = [
        {e: i for i, e in enumerate(rot)} for rot in rotation
    ]
    walks: list[tuple[list[int], list[int]]] = []
    for start_edge in range(len(edges)):
        for flag in (0, 1):
            if (start_edge, flag) in visited:
                continue
            walk_vertices: list[int] = []
            walk_edges: list[int] = []
            e, f = start_edge, flag
            while (e, f) not in visited:
                visited.add((e, f))
                u, v = edges[e]
                tail, head = (u, v) if f == 0 else (v, u)
                walk_vertices.append(tail)
                walk_edges.append(e)
                # Successor: at head, take the edge before e in CCW order
                # (i.e. the next one clockwise), leaving head.
                rot = rotation[head]
                idx = position[head][e]
                nxt = rot[(idx - 1) % len(rot)]
                nu, nv = edges[nxt]
                e, f = nxt, 0 if nu == head else 1
            walks.append((walk_vertices, walk_edges))
    walk_areas = [
        signed_area([points[v] for v in wv]) if len(wv) >= 3 else 0.0
        for wv, _ in walks
    ]
    if len(walks) == 1:
        return [], _canonical_walk(walks[0])
    outer_idx = min(range(len(walks)), key=lambda i: walk_areas[i])
    cells: list[Cell] = []
    for i, walk in enumerate(walks):
        if i == outer_idx:
            continue
        wv, we = _canonical_walk(walk)
        area = walk_areas[i]
        interior = _interior_point(points, wv)
        cells.append(
            Cell(
                id=len(cells),
                vertices=wv,
                edges=we,
                area=area,
                interior_point=interior,
            )
        )
    return cells, _canonical_walk(walks[outer_idx])


def _canonical_walk(
    walk: tuple[list[int], list[int]],
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rotate a cyclic walk to start at its lexicographically least arc."""
    wv, we = walk
    k = len(wv)
    best = min(range(k), key=lambda i: (wv[i], we[i]))
    return (
        tuple(wv[best:] + wv[:best]),
        tuple(we[best:] + we[:best]),
    )


def _interior_point(points: Sequence[Point], walk: Sequence[int]) -> Point:
    """Deterministic point strictly inside a face walk, clear of its edges."""
    poly = [points[v] for v in walk]

    def acceptable(p: Point) -> bool:
        if not point_in_polygon(p, poly):
            return False
        j = len(poly) - 1
        for i in range(len(poly)):
            if dist_point_segment(p, poly[j], poly[i]) < 1e-7:
                return False
            j = i
        return True

    candidates: list[Point] = [polygon_centroid(poly)]
    n = len(poly)
    for i in range(n):
        a, b, c = poly[i - 1], poly[i], poly[(i + 1) % n]
        candidates.append(((a[0] + b[0] + c[0]) / 3, (a[1] + b[1] + c[1]) / 3))
    for cand in candidates:
        if acceptable(cand):
            return cand
    # Probe just inside each boundary arc (interior lies to the left of a
    # counterclockwise walk).
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
        dx, dy = b[0] - a[0], b[1] - a[1]
        norm = math.hypot(dx, dy)
        if norm == 0:
            continue
        nx, ny = -dy / norm, dx / norm
        step = norm
        for _ in range(40):
            step /= 2
            cand = (mx + nx * step, my + ny * step)
            if acceptable(cand):
                return cand
    raise BoardError("degenerate", "could not find an interior point of a cell")


# ----------------------------------------------------------------------
# Serialization
# ----------------------------------------------------------------------


def parse_board(text: str) -> Board:
    """Parse and validate a board document.

    Args:
        text: UTF-8 JSON in the board file format.

    Returns:
        Validated Board.

    Raises:
        BoardError: distinct diagnostics for malformed syntax, duplicate
            ids, non-dense ids, loops/parallel edges, disconnection,
            crossings, and coincident vertices.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BoardError("syntax", f"invalid JSON: {exc}") from exc
    return board_from_obj(doc)


def board_from_obj(doc: object) -> Board:
    """Build a Board from an already-decoded document object."""
    if not isinstance(doc, dict):
        raise BoardError("syntax", "board document must be an object")
    for key in ("vertices", "edges"):
        if key not in doc or not isinstance(doc[key], list):
            raise BoardError("syntax", f"board document needs a '{key}' array")
    vertex_rows: dict[int, Point] = {}
    for row in doc["vertices"]:
        if not isinstance(row, dict) or not {"id", "x", "y"} <= set(row):
            raise BoardError("syntax", f"bad vertex row: {row!r}")
        vid, x, y = row["id"], row["x"], row["y"]
        if not isinstance(vid, int) or isinstance(vid, bool):
            raise BoardError("syntax", f"vertex id must be an integer: {row!r}")
        if not all(
            isinstance(c, (int, float)) and not isinstance(c, bool) for c in (x, y)
        ):
            raise BoardError("syntax", f"vertex coordinates must be numbers: {row!r}")
        if vid in vertex_rows:
            raise BoardError("duplicate-id", f"duplicate vertex id {vid}")
        vertex_rows[vid] = (float(x), float(y))
    edge_rows: dict[int, tuple[int, int]] = {}
    for row in doc["edges"]:
        if not isinstance(row, dict) or not {"id", "u", "v"} <= set(row):
            raise BoardError("syntax", f"bad edge row: {row!r}")
        eid, u, v = row["id"], row["u"], row["v"]
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in (eid, u, v)):
            raise BoardError("syntax", f"edge fields must be integers: {row!r}")
        if eid in edge_rows:
            raise BoardError("duplicate-id", f"duplicate edge id {eid}")
        edge_rows[eid] = (u, v)
    if sorted(vertex_rows) != list(range(len(vertex_rows))):
        raise BoardError("dense-id", "vertex ids must be dense from 0")
    if sorted(edge_rows) != list(range(len(edge_rows))):
        raise BoardError("dense-id", "edge ids must be dense from 0")
    points = [vertex_rows[i] for i in range(len(vertex_rows))]
    edges = [edge_rows[i] for i in range(len(edge_rows))]
    return Board(points, edges)


def board_obj(board: Board) -> dict:
    """Board document as a plain object (canonical field order)."""
    return {
        "vertices": [
            {"id": i, "x": x, "y": y} for i, (x, y) in enumerate(board.points)
        ],
        "edges": [
            {"id": e, "u": u, "v": v} for e, (u, v) in enumerate(board.edges)
        ],
    }


def board_to_json(board: Board) -> str:
    """Canonical board document: arrays sorted by id, shortest decimals."""
    return json.dumps(board_obj(board), separators=(",", ":")) + "\n"
