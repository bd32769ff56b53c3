import type { FigureBundle, Series } from "./csv.js";
import type { FigureRecipe, Dash } from "./recipes.js";

const WIDTH = 720;
const HEIGHT = 480;
const MARGIN = { top: 40, right: 170, bottom: 50, left: 65 };

const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

const DASH_ARRAY: Record<Dash, string> = {
  solid: "none",
  dashed: "8 5",
  dotted: "2 4",
};

function fmt(v: number): string {
  return Number(v.toPrecision(6)).toString();
}

/** Round tick positions covering [lo, hi]. */
function linearTicks(lo: number, hi: number, count = 6): number[] {
  if (hi === lo) return [lo];
  const rawStep = (hi - lo) / count;
  const mag = 10 ** Math.floor(Math.log10(rawStep));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => s >= rawStep)!;
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + 1e-12 * step; t += step) {
    ticks.push(Math.abs(t) < 1e-12 * step ? 0 : t);
  }
  return ticks;
}

function decadeTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.ceil(Math.log10(lo)); 10 ** e <= hi * (1 + 1e-12); e++) {
    ticks.push(10 ** e);
  }
  return ticks.length > 0 ? ticks : [lo, hi];
}

export function renderSvg(bundle: FigureBundle, recipe: FigureRecipe): string {
  const plotted = bundle.series;
  const innerW = WIDTH - MARGIN.left - MARGIN.right;
  const innerH = HEIGHT - MARGIN.top - MARGIN.bottom;

  const xs = plotted.flatMap((s) => s.abscissa);
  let ys = plotted.flatMap((s) => s.value);
  if (recipe.logY) ys = ys.filter((v) => v > 0);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  let yMin = Math.min(...ys);
  let yMax = Math.max(...ys);
  if (!recipe.logY) {
    const pad = (yMax - yMin || 1) * 0.05;
    yMin -= pad;
    yMax += pad;
  }

  const sx = (x: number) =>
    MARGIN.left + ((x - xMin) / (xMax - xMin || 1)) * innerW;
  const sy = (y: number) => {
    const t = recipe.logY
      ? (Math.log10(y) - Math.log10(yMin)) / (Math.log10(yMax) - Math.log10(yMin) || 1)
      : (y - yMin) / (yMax - yMin || 1);
    return MARGIN.top + (1 - t) * innerH;
  };

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif" font-size="12">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  parts.push(
    `<text x="${MARGIN.left + innerW / 2}" y="22" text-anchor="middle" ` +
      `font-size="15">${recipe.title}</text>`,
  );

  // axes
  const axisY = MARGIN.top + innerH;
  parts.push(
    `<line x1="${MARGIN.left}" y1="${axisY}" x2="${MARGIN.left + innerW}" y2="${axisY}" stroke="black"/>`,
    `<line x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${axisY}" stroke="black"/>`,
  );
  for (const t of linearTicks(xMin, xMax)) {
    const x = sx(t);
    parts.push(
      `<line x1="${fmt(x)}" y1="${axisY}" x2="${fmt(x)}" y2="${axisY + 5}" stroke="black"/>`,
      `<text x="${fmt(x)}" y="${axisY + 18}" text-anchor="middle">${fmt(t)}</text>`,
    );
  }
  const yTicks = recipe.logY ? decadeTicks(yMin, yMax) : linearTicks(yMin, yMax);
  for (const t of yTicks) {
    const y = sy(t);
    parts.push(
      `<line x1="${MARGIN.left - 5}" y1="${fmt(y)}" x2="${MARGIN.left}" y2="${fmt(y)}" stroke="black"/>`,
      `<text x="${MARGIN.left - 8}" y="${fmt(y + 4)}" text-anchor="end">${fmt(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${MARGIN.left + innerW / 2}" y="${HEIGHT - 12}" text-anchor="middle">${recipe.xLabel}</text>`,
    `<text x="18" y="${MARGIN.top + innerH / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 18 ${MARGIN.top + innerH / 2})">${recipe.yLabel}</text>`,
  );

  // series paths + legend
  plotted.forEach((s: Series, i: number) => {
    const { label, dash } = recipe.style(s.name);
    const color = PALETTE[i % PALETTE.length];
    const pts: string[] = [];
    for (let k = 0; k < s.abscissa.length; k++) {
      if (recipe.logY && s.value[k] <= 0) continue;
      pts.push(`${pts.length === 0 ? "M" : "L"}${fmt(sx(s.abscissa[k]))} ${fmt(sy(s.value[k]))}`);
    }
    parts.push(
      `<path d="${pts.join(" ")}" fill="none" stroke="${color}" stroke-width="1.5" ` +
        `stroke-dasharray="${DASH_ARRAY[dash]}" data-series="${s.name}"/>`,
    );
    const ly = MARGIN.top + 10 + i * 18;
    const lx = MARGIN.left + innerW + 12;
    parts.push(
      `<g data-legend-entry="${s.name}">` +
        `<line x1="${lx}" y1="${ly}" x2="${lx + 26}" y2="${ly}" stroke="${color}" ` +
        `stroke-width="1.5" stroke-dasharray="${DASH_ARRAY[dash]}"/>` +
        `<text x="${lx + 32}" y="${ly + 4}">${label}</text></g>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
