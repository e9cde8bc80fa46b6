import { describe, expect, it } from "vitest";

import { histogram, leastSquares, median, quantile, spearman } from "../src/stats";

describe("histogram", () => {
  it("fills equal-width bins with a right-closed last bin", () => {
    const { counts, edges } = histogram([0.05, 0.15, 0.15, 0.95, 1.0], 10, 0, 1);
    expect(counts).toEqual([1, 2, 0, 0, 0, 0, 0, 0, 0, 2]);
    expect(edges[0]).toBe(0);
    expect(edges[10]).toBe(1);
  });

  it("puts identical values into a single bin", () => {
    const { counts } = histogram([0.25, 0.25], 20, 0, 0.25);
    expect(counts.filter((c) => c > 0)).toEqual([2]);
  });

  it("ignores out-of-range values", () => {
    const { counts } = histogram([-0.1, 0.5, 1.1], 2, 0, 1);
    expect(counts).toEqual([0, 1]);
  });
});

describe("quantile and median", () => {
  it("interpolates linearly", () => {
    expect(quantile([0, 10], 0.5)).toBe(5);
    expect(quantile([1, 2, 3, 4], 0.25)).toBeCloseTo(1.75, 12);
    expect(median([3, 1, 2])).toBe(2);
  });

  it("rejects empty input", () => {
    expect(() => quantile([], 0.5)).toThrow();
  });
});

describe("leastSquares", () => {
  it("recovers an exact line", () => {
    const x = [0, 1, 2, 3];
    const y = x.map((v) => -2 * v + 1);
    const { slope, intercept } = leastSquares(x, y);
    expect(slope).toBeCloseTo(-2, 12);
    expect(intercept).toBeCloseTo(1, 12);
  });

  it("rejects degenerate inputs", () => {
    expect(() => leastSquares([1], [1])).toThrow();
    expect(() => leastSquares([2, 2], [1, 3])).toThrow();
  });
});

describe("spearman", () => {
  it("is +1 / -1 for strictly monotone relationships", () => {
    const x = [0.1, 0.4, 0.2, 0.9];
    expect(spearman(x, x.map((v) => v ** 3))).toBeCloseTo(1, 12);
    expect(spearman(x, x.map((v) => -v))).toBeCloseTo(-1, 12);
  });

  it("is invariant to monotone transforms of either argument", () => {
    const x = [0.3, 0.1, 0.7, 0.5, 0.9];
    const y = [2, 9, 4, 1, 7];
    expect(spearman(x, y)).toBeCloseTo(spearman(x.map(Math.log), y), 12);
  });
});
