/** Descriptive statistics shared by the four plots. */

import { RunRow } from "./csv";

/** Intervals at or below this length are treated as degenerate. */
export const DEGENERATE_INTERVAL = 1e-12;

/** Rows the figures are built from: in-between with a usable interval. */
export function qualifying(rows: RunRow[]): RunRow[] {
  return rows.filter(
    (r) => r.inBetween && r.relPos !== null && r.intervalLen > DEGENERATE_INTERVAL
  );
}

/**
 * Equal-width histogram over [lo, hi]; the last bin is closed on the right.
 * Bin edges are lo + i * (hi - lo) / bins, so counts agree bit-for-bit with
 * the simulator's own summary of the same data.
 */
export function histogram(
  values: number[],
  bins: number,
  lo: number,
  hi: number
): { counts: number[]; edges: number[] } {
  const step = (hi - lo) / bins;
  const edges = Array.from({ length: bins + 1 }, (_, i) => lo + step * i);
  edges[bins] = hi;
  const counts = new Array(bins).fill(0);
  for (const v of values) {
    if (v < lo || v > hi) continue;
    // rightmost edge strictly below or equal to v
    let idx = upperBound(edges, v) - 1;
    if (idx === bins) idx = bins - 1; // v === hi falls in the last bin
    counts[idx] += 1;
  }
  return { counts, edges };
}

function upperBound(sorted: number[], v: number): number {
  let lo = 0;
  let hi = sorted.length;
  while (lo < hi) {
    const mid = (lo + hi) >> 1;
    if (sorted[mid] <= v) lo = mid + 1;
    else hi = mid;
  }
  return lo;
}

/** Linear-interpolation quantile of an unsorted sample, q in [0, 1]. */
export function quantile(values: number[], q: number): number {
  if (values.length === 0) throw new Error("quantile of empty sample");
  const sorted = [...values].sort((a, b) => a - b);
  const pos = q * (sorted.length - 1);
  const base = Math.floor(pos);
  const frac = pos - base;
  if (base + 1 >= sorted.length) return sorted[sorted.length - 1];
  return sorted[base] + frac * (sorted[base + 1] - sorted[base]);
}

export function median(values: number[]): number {
  return quantile(values, 0.5);
}

/** Ordinary least squares fit y = slope * x + intercept. */
export function leastSquares(
  x: number[],
  y: number[]
): { slope: number; intercept: number } {
  const n = x.length;
  if (n < 2) throw new Error("least squares needs at least two points");
  const mx = x.reduce((s, v) => s + v, 0) / n;
  const my = y.reduce((s, v) => s + v, 0) / n;
  let sxy = 0;
  let sxx = 0;
  for (let i = 0; i < n; i++) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx === 0) throw new Error("least squares with constant x");
  const slope = sxy / sxx;
  return { slope, intercept: my - slope * mx };
}

function ranks(values: number[]): number[] {
  const order = values
    .map((v, i) => [v, i] as const)
    .sort((a, b) => a[0] - b[0]);
  const out = new Array(values.length);
  order.forEach(([, originalIndex], rank) => (out[originalIndex] = rank));
  return out;
}

/** Spearman rank correlation (no tie correction; inputs are continuous). */
export function spearman(x: number[], y: number[]): number {
  if (x.length !== y.length || x.length < 2) {
    throw new Error("spearman needs two equal-length samples of size >= 2");
  }
  const rx = ranks(x);
  const ry = ranks(y);
  const n = x.length;
  const mean = (n - 1) / 2;
  let sxy = 0;
  let sxx = 0;
  let syy = 0;
  for (let i = 0; i < n; i++) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  return sxy / Math.sqrt(sxx * syy);
}
