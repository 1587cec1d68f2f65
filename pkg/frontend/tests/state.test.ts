// The view model must be a faithful reshaping of the server response:
// same facts, drawable coordinates, no invented legality.

import { describe, expect, it } from "vitest";

import { bannerText, buildViewModel, seatLabel, toScreen } from "../src/state.js";
import { TAXONOMY_STATE, WON_STATE } from "./fixtures.js";

describe("coordinate mapping", () => {
  it("flips the y axis and scales", () => {
    expect(toScreen(0, 0)).toEqual({ x: 0, y: 0 });
    expect(toScreen(1, 1)).toEqual({ x: 100, y: -100 });
    expect(toScreen(-1, 0.5)).toEqual({ x: -100, y: -50 });
  });
});

describe("mid-game projection", () => {
  const vm = buildViewModel(TAXONOMY_STATE);

  it("keeps every edge and vertex", () => {
    expect(vm.edges).toHaveLength(14);
    expect(vm.vertices).toHaveLength(9);
    expect(vm.cells).toHaveLength(6);
  });

  it("draws arrows exactly on the server's markings", () => {
    const arrows = vm.edges.filter((e) => e.arrow !== null);
    const marked = TAXONOMY_STATE.markings
      .map((m, i) => (m ? i : null))
      .filter((i) => i !== null);
    expect(arrows.map((e) => e.id).sort((a, b) => a - b)).toEqual(marked);
    for (const edge of arrows) {
      const marking = TAXONOMY_STATE.markings[edge.id]!;
      expect(edge.arrow!.tail).toBe(marking.tail);
      expect(edge.arrow!.head).toBe(marking.head);
      expect(edge.status).toBe("marked");
    }
  });

  it("attributes each arrow to the player who made the move", () => {
    for (const move of TAXONOMY_STATE.moves) {
      expect(vm.edges[move.edge]!.markedBy).toBe(move.player);
    }
  });

  it("greys out the unmarkable edge without inventing directions", () => {
    const dead = vm.edges.filter((e) => e.status === "unmarkable");
    expect(dead.map((e) => e.id)).toEqual(TAXONOMY_STATE.unmarkable);
    for (const edge of dead) {
      expect(edge.options).toEqual([]);
      expect(edge.arrow).toBeNull();
    }
  });

  it("copies per-direction death flags verbatim", () => {
    const edge3 = vm.edges[3]!;
    expect(edge3.status).toBe("open");
    expect(edge3.options).toEqual([
      { tail: 1, head: 4, legal: true, death: true },
      { tail: 4, head: 1, legal: true, death: false },
    ]);
    const flagged = TAXONOMY_STATE.edges.filter(
      (e) => e.death_directions.length > 0,
    );
    for (const status of flagged) {
      const options = vm.edges[status.edge]!.options;
      const deadly = options.filter((o) => o.death).map((o) => [o.tail, o.head]);
      expect(deadly).toEqual(status.death_directions);
    }
  });

  it("badges almost-sinks and almost-sources from vertex statuses", () => {
    const badges = new Map(vm.vertices.map((v) => [v.id, v.badge]));
    for (const row of TAXONOMY_STATE.vertices) {
      if (row.status === "almost-sink" || row.status === "almost-source") {
        expect(badges.get(row.vertex)).toBe(row.status);
      } else {
        expect(badges.get(row.vertex)).toBeNull();
      }
    }
    expect(vm.vertices[2]!.badge).toBe("almost-sink");
    expect(vm.vertices[5]!.badge).toBe("almost-sink");
    expect(vm.vertices[8]!.badge).toBe("almost-source");
    expect(vm.vertices[0]!.saturated).toBe(true);
  });

  it("shows whose turn it is", () => {
    expect(vm.banner).toBe("Player 2 to move");
    expect(vm.gameOver).toBe(false);
    expect(vm.winner).toBeNull();
    expect(vm.cells.every((c) => c.winning === null)).toBe(true);
  });
});

describe("finished-game projection", () => {
  const vm = buildViewModel(WON_STATE);

  it("announces the winner", () => {
    expect(vm.gameOver).toBe(true);
    expect(vm.winner).toBe(1);
    expect(vm.banner).toBe("Player 1 wins");
  });

  it("highlights exactly the winning cycle cell with its direction", () => {
    expect(vm.cells).toHaveLength(1);
    expect(vm.cells[0]!.winning).toBe("ccw");
  });

  it("has no open edges left", () => {
    expect(vm.edges.every((e) => e.status === "marked")).toBe(true);
    expect(vm.edges.every((e) => e.arrow !== null)).toBe(true);
  });
});

describe("seat labels", () => {
  it("marks the engine's seat", () => {
    expect(seatLabel(1, 2)).toBe("Player 1 (you)");
    expect(seatLabel(2, 2)).toBe("Player 2 (engine)");
    expect(seatLabel(1, 0)).toBe("Player 1");
  });

  it("labels winner banners through the same rule", () => {
    expect(bannerText({ ...WON_STATE, engine_player: 2 })).toBe(
      "Player 1 (you) wins",
    );
  });
});
