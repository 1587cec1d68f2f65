// Thin fetch wrappers around the game service.  Every function returns
// the parsed JSON body; failures throw ApiError carrying the status and
// the service's own description of the violated rule.

import type {
  BoardDetail,
  CatalogEntry,
  GameView,
  MoveRequest,
  MoveResponse,
  NewGameRequest,
} from "./types.js";

let API_BASE = "";

/** Point the client at a specific server (tests use a spawned one). */
export function setApiBase(base: string): void {
  API_BASE = base.replace(/\/$/, "");
}

export class ApiError extends Error {
  readonly status: number;
  readonly rule: string | null;

  constructor(status: number, detail: string, rule: string | null) {
    super(detail);
    this.name = "ApiError";
    this.status = status;
    this.rule = rule;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(`${API_BASE}${path}`, init);
  if (res.status === 204) {
    return undefined as T;
  }
  const body = await res.json();
  if (!res.ok) {
    const detail =
      typeof body.detail === "string" ? body.detail : JSON.stringify(body.detail);
    throw new ApiError(res.status, detail, body.rule ?? null);
  }
  return body as T;
}

function post(payload: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  };
}

export async function listBoards(): Promise<CatalogEntry[]> {
  const body = await request<{ boards: CatalogEntry[] }>("/boards");
  return body.boards;
}

export function getBoard(id: string): Promise<BoardDetail> {
  return request(`/boards/${encodeURIComponent(id)}`);
}

export function newGame(req: NewGameRequest): Promise<MoveResponse> {
  return request("/games", post(req));
}

export function getGame(id: string): Promise<GameView> {
  return request(`/games/${encodeURIComponent(id)}`);
}

export function postMove(id: string, move: MoveRequest): Promise<MoveResponse> {
  return request(`/games/${encodeURIComponent(id)}/moves`, post(move));
}

export function deleteGame(id: string): Promise<void> {
  return request(`/games/${encodeURIComponent(id)}`, { method: "DELETE" });
}
