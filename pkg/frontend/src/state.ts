// Pure projection of the last service response into drawable data.
// Nothing here decides legality, death, or termination — every fact is
// read off the GameView the server sent.

import type { CellInfo, Direction, GameView, Player } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export interface DirectionOption {
  tail: number;
  head: number;
  legal: boolean;
  death: boolean;
}

export interface EdgeView {
  id: number;
  u: number;
  v: number;
  a: Point;
  b: Point;
  mid: Point;
  status: "marked" | "open" | "unmarkable";
  /** For marked edges: the arrow, oriented tail -> head. */
  arrow: { tail: number; head: number; from: Point; to: Point } | null;
  /** For open edges: both directions with server-supplied flags. */
  options: DirectionOption[];
  currentlyUnplayable: boolean;
  markedBy: Player | null;
}

export interface VertexView {
  id: number;
  at: Point;
  badge: "almost-sink" | "almost-source" | null;
  saturated: boolean;
}

export interface CellView {
  id: number;
  points: Point[];
  winning: Direction | null;
}

export interface ViewModel {
  viewBox: string;
  cells: CellView[];
  edges: EdgeView[];
  vertices: VertexView[];
  banner: string;
  toMove: Player;
  winner: Player | null;
  gameOver: boolean;
  /** 0 = two humans, otherwise the engine's seat. */
  enginePlayer: 0 | Player;
}

const SCALE = 100;
const PAD = 0.18;

/** Board coordinates are y-up; SVG is y-down. */
export function toScreen(x: number, y: number): Point {
  // `+ 0` collapses the negative zero produced by flipping y = 0.
  return { x: x * SCALE, y: -y * SCALE + 0 };
}

export function seatLabel(player: Player, enginePlayer: 0 | Player): string {
  if (enginePlayer === 0) {
    return `Player ${player}`;
  }
  return player === enginePlayer ? `Player ${player} (engine)` : `Player ${player} (you)`;
}

export function bannerText(game: GameView): string {
  if (game.winner !== null) {
    return `${seatLabel(game.winner, game.engine_player)} wins`;
  }
  return `${seatLabel(game.to_move, game.engine_player)} to move`;
}

function viewBoxFor(points: Point[]): string {
  let minX = Infinity;
  let minY = Infinity;
  let maxX = -Infinity;
  let maxY = -Infinity;
  for (const p of points) {
    minX = Math.min(minX, p.x);
    minY = Math.min(minY, p.y);
    maxX = Math.max(maxX, p.x);
    maxY = Math.max(maxY, p.y);
  }
  const spanX = Math.max(maxX - minX, SCALE);
  const spanY = Math.max(maxY - minY, SCALE);
  const padX = spanX * PAD;
  const padY = spanY * PAD;
  const f = (n: number) => Number(n.toFixed(2));
  return [
    f(minX - padX),
    f(minY - padY),
    f(spanX + 2 * padX),
    f(spanY + 2 * padY),
  ].join(" ");
}

function cellPolygon(cell: CellInfo, at: (v: number) => Point): Point[] {
  return cell.vertices.map(at);
}

export function buildViewModel(game: GameView): ViewModel {
  const screen = new Map<number, Point>();
  for (const v of game.board.vertices) {
    screen.set(v.id, toScreen(v.x, v.y));
  }
  const at = (v: number): Point => {
    const p = screen.get(v);
    if (!p) {
      throw new Error(`state references unknown vertex ${v}`);
    }
    return p;
  };

  const markedBy = new Map<number, Player>();
  for (const move of game.moves) {
    markedBy.set(move.edge, move.player);
  }

  const winningCells = new Map<number, Direction>();
  for (const row of game.cycle_cells) {
    winningCells.set(row.cell, row.direction);
  }

  const deaths = new Map<number, Set<string>>();
  for (const status of game.edges) {
    deaths.set(
      status.edge,
      new Set(status.death_directions.map(([t, h]) => `${t}>${h}`)),
    );
  }

  const edges = game.board.edges.map((edge): EdgeView => {
    const status = game.edges[edge.id];
    if (!status) {
      throw new Error(`no status row for edge ${edge.id}`);
    }
    const marking = game.markings[edge.id] ?? null;
    const death = deaths.get(edge.id) ?? new Set<string>();
    const a = at(edge.u);
    const b = at(edge.v);
    return {
      id: edge.id,
      u: edge.u,
      v: edge.v,
      a,
      b,
      mid: { x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 },
      status:
        status.status === "marked"
          ? "marked"
          : status.status === "unmarkable"
            ? "unmarkable"
            : "open",
      arrow: marking
        ? {
            tail: marking.tail,
            head: marking.head,
            from: at(marking.tail),
            to: at(marking.head),
          }
        : null,
      options: status.directions.map(([tail, head]) => ({
        tail,
        head,
        legal: true,
        death: death.has(`${tail}>${head}`),
      })),
      currentlyUnplayable: status.currently_unplayable,
      markedBy: markedBy.get(edge.id) ?? null,
    };
  });

  const vertices = game.board.vertices.map((v): VertexView => {
    const status = game.vertices[v.id];
    if (!status) {
      throw new Error(`no status row for vertex ${v.id}`);
    }
    return {
      id: v.id,
      at: at(v.id),
      badge:
        status.status === "almost-sink" || status.status === "almost-source"
          ? status.status
          : null,
      saturated: status.status === "saturated",
    };
  });

  const cells = game.cells.map((cell): CellView => ({
    id: cell.id,
    points: cellPolygon(cell, at),
    winning: winningCells.get(cell.id) ?? null,
  }));

  return {
    viewBox: viewBoxFor([...screen.values()]),
    cells,
    edges,
    vertices,
    banner: bannerText(game),
    toMove: game.to_move,
    winner: game.winner,
    gameOver: game.winner !== null,
    enginePlayer: game.engine_player,
  };
}
