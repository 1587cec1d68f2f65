// SVG construction from a ViewModel.  Pure string building so it can
// be asserted on directly; the page glues the output into the DOM and
// attaches event handlers by data attributes.

import type { EdgeView, Point, VertexView, ViewModel } from "./state.js";

const VERTEX_RADIUS = 9;
const ARROW_LENGTH = 26;
const ARROW_WIDTH = 16;

function esc(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

function fmt(n: number): string {
  return Number(n.toFixed(2)).toString();
}

function pointList(points: Point[]): string {
  return points.map((p) => `${fmt(p.x)},${fmt(p.y)}`).join(" ");
}

/** Arrowhead at the edge midpoint, pointing tail -> head. */
export function arrowHead(from: Point, to: Point): string {
  const mid = { x: (from.x + to.x) / 2, y: (from.y + to.y) / 2 };
  const angle = (Math.atan2(to.y - from.y, to.x - from.x) * 180) / Math.PI;
  const tip = ARROW_LENGTH / 2;
  const back = -ARROW_LENGTH / 2;
  const half = ARROW_WIDTH / 2;
  const points = `${tip},0 ${back},${-half} ${back},${half}`;
  return (
    `<polygon class="arrow" points="${points}" ` +
    `transform="translate(${fmt(mid.x)} ${fmt(mid.y)}) rotate(${fmt(angle)})"/>`
  );
}

function edgeClasses(edge: EdgeView): string {
  const classes = ["edge", edge.status];
  if (edge.status === "open") {
    if (edge.currentlyUnplayable) {
      classes.push("stuck");
    }
    if (edge.options.some((o) => o.death)) {
      classes.push("death-risk");
    }
  }
  if (edge.markedBy !== null) {
    classes.push(`by-p${edge.markedBy}`);
  }
  return classes.join(" ");
}

function renderEdge(edge: EdgeView): string {
  const line =
    `<line class="${edgeClasses(edge)}" data-edge="${edge.id}" ` +
    `x1="${fmt(edge.a.x)}" y1="${fmt(edge.a.y)}" ` +
    `x2="${fmt(edge.b.x)}" y2="${fmt(edge.b.y)}"/>`;
  if (edge.arrow) {
    return line + arrowHead(edge.arrow.from, edge.arrow.to);
  }
  return line;
}

function renderVertex(vertex: VertexView): string {
  const classes = ["vertex"];
  if (vertex.badge) {
    classes.push(vertex.badge);
  }
  if (vertex.saturated) {
    classes.push("saturated");
  }
  const badge = vertex.badge
    ? `<circle class="badge ${vertex.badge}" cx="${fmt(vertex.at.x)}" ` +
      `cy="${fmt(vertex.at.y)}" r="${VERTEX_RADIUS + 5}"/>`
    : "";
  return (
    badge +
    `<circle class="${classes.join(" ")}" data-vertex="${vertex.id}" ` +
    `cx="${fmt(vertex.at.x)}" cy="${fmt(vertex.at.y)}" r="${VERTEX_RADIUS}"/>` +
    `<text class="vertex-label" x="${fmt(vertex.at.x)}" ` +
    `y="${fmt(vertex.at.y)}" dy="0.35em">${vertex.id}</text>`
  );
}

export function renderBoardSvg(vm: ViewModel): string {
  const cells = vm.cells
    .map((cell) => {
      const classes = cell.winning ? "cell winning" : "cell";
      return (
        `<polygon class="${classes}" data-cell="${cell.id}" ` +
        `points="${pointList(cell.points)}"/>`
      );
    })
    .join("");
  const edges = vm.edges.map(renderEdge).join("");
  const vertices = vm.vertices.map(renderVertex).join("");
  return (
    `<svg class="board" viewBox="${vm.viewBox}" xmlns="http://www.w3.org/2000/svg">` +
    `<g class="cells">${cells}</g>` +
    `<g class="edges">${edges}</g>` +
    `<g class="vertices">${vertices}</g>` +
    `</svg>`
  );
}

export function renderBanner(vm: ViewModel): string {
  const classes = vm.gameOver ? "banner winner" : "banner turn";
  return `<div class="${classes}">${esc(vm.banner)}</div>`;
}

/** The two-direction chooser shown after clicking an open edge. */
export function renderDirectionChooser(edge: EdgeView): string {
  if (edge.status !== "open") {
    return "";
  }
  const hint = edge.currentlyUnplayable
    ? `<span class="all-deadly">every direction lets the opponent win</span>`
    : "";
  const buttons = edge.options
    .map((option) => {
      const warn = option.death
        ? ` <span class="death-warning" title="lets the opponent win at once">&#9888;</span>`
        : "";
      return (
        `<button class="direction${option.death ? " death" : ""}" ` +
        `data-edge="${edge.id}" data-tail="${option.tail}" ` +
        `data-head="${option.head}">` +
        `${option.tail} &#8594; ${option.head}${warn}</button>`
      );
    })
    .join("");
  return `<div class="chooser" data-edge="${edge.id}">${buttons}${hint}</div>`;
}
