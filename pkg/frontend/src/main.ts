// Page wiring: board picker, new-game form, click-to-move loop.  All
// game facts come from the service; this file only routes clicks and
// redraws.

import { ApiError, deleteGame, listBoards, newGame, postMove } from "./api.js";
import { buildViewModel, type ViewModel } from "./state.js";
import {
  renderBanner,
  renderBoardSvg,
  renderDirectionChooser,
} from "./render.js";
import type { CatalogEntry, GameView, MoveResponse } from "./types.js";

const POLICIES = ["optimal", "mirror", "parity", "chord", "flap", "random"];

interface AppState {
  catalog: CatalogEntry[];
  game: GameView | null;
  vm: ViewModel | null;
  selectedEdge: number | null;
  error: string | null;
}

const app: AppState = {
  catalog: [],
  game: null,
  vm: null,
  selectedEdge: null,
  error: null,
};

function el<T extends HTMLElement>(selector: string): T {
  const node = document.querySelector<T>(selector);
  if (!node) {
    throw new Error(`missing element ${selector}`);
  }
  return node;
}

function renderLobby(): void {
  const options = app.catalog
    .map(
      (b) =>
        `<option value="${b.id}">${b.name} ` +
        `(${b.vertices}v ${b.edges}e ${b.cells}c)</option>`,
    )
    .join("");
  const policies = POLICIES.map(
    (p) => `<option value="${p}">${p}</option>`,
  ).join("");
  el("#app").innerHTML = `
    <h1>cycle game</h1>
    <form id="new-game" class="lobby">
      <label>Board <select name="board">${options}</select></label>
      <label>Seat
        <select name="seat">
          <option value="2">play first (engine answers)</option>
          <option value="1">play second (engine opens)</option>
          <option value="0">two humans</option>
        </select>
      </label>
      <label>Engine policy <select name="policy">${policies}</select></label>
      <button type="submit">Start</button>
    </form>
    <div id="error" class="error" hidden></div>
  `;
  el<HTMLFormElement>("#new-game").addEventListener("submit", (event) => {
    event.preventDefault();
    const form = new FormData(event.target as HTMLFormElement);
    void startGame(
      String(form.get("board")),
      Number(form.get("seat")) as 0 | 1 | 2,
      String(form.get("policy")),
    );
  });
}

async function startGame(
  boardId: string,
  enginePlayer: 0 | 1 | 2,
  policy: string,
): Promise<void> {
  try {
    const game = await newGame({
      board_id: boardId,
      engine_player: enginePlayer,
      policy,
    });
    app.game = game;
    app.error = null;
    app.selectedEdge = null;
    renderGame();
  } catch (err) {
    showError(err);
  }
}

function renderGame(): void {
  const game = app.game;
  if (!game) {
    renderLobby();
    return;
  }
  app.vm = buildViewModel(game);
  const chooser =
    app.selectedEdge !== null
      ? renderDirectionChooser(
          app.vm.edges.find((e) => e.id === app.selectedEdge)!,
        )
      : "";
  const moveLog = game.moves
    .map((m) => `<li>P${m.player}: ${m.tail} &#8594; ${m.head}</li>`)
    .join("");
  el("#app").innerHTML = `
    ${renderBanner(app.vm)}
    <div id="error" class="error" ${app.error ? "" : "hidden"}>${app.error ?? ""}</div>
    <div class="table">
      <div id="board-holder">${renderBoardSvg(app.vm)}</div>
      <aside>
        <div id="chooser-holder">${chooser}</div>
        <ol class="move-log">${moveLog}</ol>
        <button id="quit">New game</button>
      </aside>
    </div>
  `;
  el("#quit").addEventListener("click", () => {
    if (app.game) {
      void deleteGame(app.game.id).catch(() => undefined);
    }
    app.game = null;
    renderLobby();
  });
  el("#board-holder").addEventListener("click", (event) => {
    const target = (event.target as Element).closest("[data-edge]");
    if (!target || !app.vm || app.vm.gameOver) {
      return;
    }
    const id = Number(target.getAttribute("data-edge"));
    const edge = app.vm.edges.find((e) => e.id === id);
    if (!edge || edge.status !== "open") {
      return;
    }
    app.selectedEdge = id;
    app.error = null;
    renderGame();
  });
  el("#chooser-holder").addEventListener("click", (event) => {
    const button = (event.target as Element).closest("button.direction");
    if (!button) {
      return;
    }
    void sendMove(
      Number(button.getAttribute("data-edge")),
      Number(button.getAttribute("data-tail")),
      Number(button.getAttribute("data-head")),
    );
  });
}

async function sendMove(
  edge: number,
  tail: number,
  head: number,
): Promise<void> {
  if (!app.game) {
    return;
  }
  try {
    const response: MoveResponse = await postMove(app.game.id, {
      edge,
      tail,
      head,
    });
    app.game = response;
    app.selectedEdge = null;
    app.error = null;
  } catch (err) {
    showError(err);
    return;
  }
  renderGame();
}

function showError(err: unknown): void {
  if (err instanceof ApiError) {
    app.error = err.rule ? `${err.message} (rule: ${err.rule})` : err.message;
  } else {
    app.error = String(err);
  }
  if (app.game) {
    renderGame();
  } else {
    const banner = el("#error");
    banner.textContent = app.error;
    banner.hidden = false;
  }
}

async function boot(): Promise<void> {
  try {
    app.catalog = await listBoards();
    renderLobby();
  } catch (err) {
    el("#app").innerHTML = `<div class="error">cannot reach the game service: ${String(err)}</div>`;
  }
}

void boot();
