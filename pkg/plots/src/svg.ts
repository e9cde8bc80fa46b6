/** Minimal hand-rolled SVG charts: a histogram and a scatter plot. */

const W = 640;
const H = 440;
const MARGIN = { top: 44, right: 24, bottom: 52, left: 64 };
const PLOT_W = W - MARGIN.left - MARGIN.right;
const PLOT_H = H - MARGIN.top - MARGIN.bottom;

export interface TrendLine {
  slope: number;
  intercept: number;
}

function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 0.01 && a < 10000) return String(Number(v.toPrecision(3)));
  return v.toExponential(1);
}

function ticks(lo: number, hi: number, n = 5): number[] {
  if (hi === lo) return [lo];
  const out: number[] = [];
  for (let i = 0; i <= n; i++) out.push(lo + ((hi - lo) * i) / n);
  return out;
}

class Frame {
  constructor(
    readonly xMin: number,
    readonly xMax: number,
    readonly yMin: number,
    readonly yMax: number
  ) {}

  x(v: number): number {
    const span = this.xMax - this.xMin || 1;
    return MARGIN.left + ((v - this.xMin) / span) * PLOT_W;
  }

  y(v: number): number {
    const span = this.yMax - this.yMin || 1;
    return MARGIN.top + PLOT_H - ((v - this.yMin) / span) * PLOT_H;
  }
}

function chrome(title: string, xLabel: string, yLabel: string, frame: Frame): string {
  const parts: string[] = [];
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${PLOT_W}" height="${PLOT_H}" fill="none" stroke="#444" stroke-width="1"/>`
  );
  parts.push(
    `<text x="${W / 2}" y="24" text-anchor="middle" font-size="15" font-weight="bold">${title}</text>`
  );
  parts.push(
    `<text x="${MARGIN.left + PLOT_W / 2}" y="${H - 12}" text-anchor="middle" font-size="12">${xLabel}</text>`
  );
  parts.push(
    `<text x="16" y="${MARGIN.top + PLOT_H / 2}" text-anchor="middle" font-size="12" transform="rotate(-90 16 ${MARGIN.top + PLOT_H / 2})">${yLabel}</text>`
  );
  for (const t of ticks(frame.xMin, frame.xMax)) {
    const px = frame.x(t);
    parts.push(`<line x1="${px}" y1="${MARGIN.top + PLOT_H}" x2="${px}" y2="${MARGIN.top + PLOT_H + 5}" stroke="#444"/>`);
    parts.push(
      `<text x="${px}" y="${MARGIN.top + PLOT_H + 18}" text-anchor="middle" font-size="10">${fmt(t)}</text>`
    );
  }
  for (const t of ticks(frame.yMin, frame.yMax)) {
    const py = frame.y(t);
    parts.push(`<line x1="${MARGIN.left - 5}" y1="${py}" x2="${MARGIN.left}" y2="${py}" stroke="#444"/>`);
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${py + 3}" text-anchor="end" font-size="10">${fmt(t)}</text>`
    );
  }
  return parts.join("\n");
}

function document(body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" viewBox="0 0 ${W} ${H}" font-family="sans-serif">\n` +
    `<rect width="${W}" height="${H}" fill="white"/>\n${body}\n</svg>\n`
  );
}

export function histogramSvg(opts: {
  title: string;
  xLabel: string;
  counts: number[];
  edges: number[];
}): string {
  const { counts, edges } = opts;
  const frame = new Frame(edges[0], edges[edges.length - 1], 0, Math.max(...counts, 1));
  const bars = counts
    .map((count, i) => {
      const x0 = frame.x(edges[i]);
      const x1 = frame.x(edges[i + 1]);
      const y = frame.y(count);
      const h = MARGIN.top + PLOT_H - y;
      return `<rect x="${x0}" y="${y}" width="${Math.max(x1 - x0, 0.5)}" height="${h}" fill="#4361ee" fill-opacity="0.8" stroke="white" stroke-width="0.5"/>`;
    })
    .join("\n");
  return document(chrome(opts.title, opts.xLabel, "count", frame) + "\n" + bars);
}

export function scatterSvg(opts: {
  title: string;
  xLabel: string;
  yLabel: string;
  points: Array<[number, number]>;
  trend?: TrendLine;
}): string {
  const xs = opts.points.map((p) => p[0]);
  const ys = opts.points.map((p) => p[1]);
  const frame = new Frame(
    Math.min(...xs, 0),
    Math.max(...xs),
    Math.min(...ys, 0),
    Math.max(...ys)
  );
  const dots = opts.points
    .map(([x, y]) => `<circle cx="${frame.x(x).toFixed(2)}" cy="${frame.y(y).toFixed(2)}" r="1.6" fill="#4361ee" fill-opacity="0.45"/>`)
    .join("\n");
  let trend = "";
  if (opts.trend) {
    const { slope, intercept } = opts.trend;
    const y1 = slope * frame.xMin + intercept;
    const y2 = slope * frame.xMax + intercept;
    trend =
      `<line x1="${frame.x(frame.xMin)}" y1="${frame.y(y1)}" x2="${frame.x(frame.xMax)}" y2="${frame.y(y2)}" stroke="#e63946" stroke-width="2" stroke-dasharray="6,3"/>\n` +
      `<text x="${W - MARGIN.right}" y="${MARGIN.top - 6}" text-anchor="end" font-size="11" fill="#e63946">trend slope ${fmt(slope)}</text>`;
  }
  return document(chrome(opts.title, opts.xLabel, opts.yLabel, frame) + "\n" + dots + "\n" + trend);
}
