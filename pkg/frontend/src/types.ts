// Wire types for the game service.  These mirror the JSON bodies
// exactly; the client never derives game facts on its own.

export type Player = 1 | 2;
export type Direction = "ccw" | "cw";

export interface BoardVertex {
  id: number;
  x: number;
  y: number;
}

export interface BoardEdge {
  id: number;
  u: number;
  v: number;
}

export interface BoardGeometry {
  vertices: BoardVertex[];
  edges: BoardEdge[];
}

export interface CellInfo {
  id: number;
  vertices: number[];
  edges: number[];
}

export interface CatalogEntry {
  id: string;
  name: string;
  source: string;
  vertices: number;
  edges: number;
  cells: number;
}

export interface BoardDetail extends CatalogEntry {
  board: BoardGeometry;
  cells_detail?: CellInfo[];
}

export interface Marking {
  tail: number;
  head: number;
}

export interface MoveRow {
  edge: number;
  tail: number;
  head: number;
  player: Player;
}

export interface LegalMove {
  edge: number;
  tail: number;
  head: number;
  death: boolean;
}

export type EdgeStatusName = "marked" | "markable" | "unmarkable";

export interface EdgeStatusRow {
  edge: number;
  status: EdgeStatusName;
  directions: [number, number][];
  death_directions: [number, number][];
  currently_unplayable: boolean;
}

export type VertexStatusName =
  | "neutral"
  | "saturated"
  | "almost-sink"
  | "almost-source";

export interface VertexStatusRow {
  vertex: number;
  status: VertexStatusName;
}

export interface CycleCellRow {
  cell: number;
  direction: Direction;
}

export interface GameView {
  id: string;
  board_id: string;
  board: BoardGeometry;
  cells: CellInfo[];
  engine_player: 0 | Player;
  policy: string | null;
  to_move: Player;
  winner: Player | null;
  cycle_cells: CycleCellRow[];
  markings: (Marking | null)[];
  moves: MoveRow[];
  legal_moves: LegalMove[];
  edges: EdgeStatusRow[];
  vertices: VertexStatusRow[];
  unmarkable: number[];
}

export interface MoveResponse extends GameView {
  human_move: MoveRow | null;
  engine_move: MoveRow | null;
}

export interface NewGameRequest {
  board_id: string;
  engine_player: 0 | Player;
  policy?: string;
}

export interface MoveRequest {
  edge: number;
  tail: number;
  head: number;
}
