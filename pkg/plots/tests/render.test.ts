import { execFileSync } from "child_process";
import * as fs from "fs";
import * as os from "os";
import * as path from "path";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { parseRunsCsv } from "../src/csv";
import { histogram, leastSquares, median, qualifying, spearman } from "../src/stats";
import { renderAll } from "../src/render";

const FIXTURE = path.join(__dirname, "fixtures", "runs_n10000_seed0.csv");
const EXPECTED = JSON.parse(
  fs.readFileSync(path.join(__dirname, "fixtures", "expected_stats.json"), "utf-8")
);

const EXPECTED_FILES = [
  "interval_length_hist.svg",
  "rel_pos_vs_interval.svg",
  "rel_pos_vs_interval_zoom.svg",
  "rel_pos_vs_youden.svg",
];

let tmp: string;

beforeAll(() => {
  tmp = fs.mkdtempSync(path.join(os.tmpdir(), "confounder-plots-"));
});

afterAll(() => {
  fs.rmSync(tmp, { recursive: true, force: true });
});

describe("renderAll on the 10000-run study CSV", () => {
  it("produces the four SVG figures", () => {
    const outDir = path.join(tmp, "figs");
    const written = renderAll({
      inputCsv: FIXTURE,
      outDir,
      bins: 20,
      zoomQuantile: 0.25,
    });
    expect(written.map((p) => path.basename(p))).toEqual(EXPECTED_FILES);
    for (const file of written) {
      const body = fs.readFileSync(file, "utf-8");
      expect(body.startsWith("<svg")).toBe(true);
      expect(body.length).toBeGreaterThan(2000);
    }
  });

  it("zooms to a subset of the full scatter", () => {
    const outDir = path.join(tmp, "zoomcheck");
    renderAll({ inputCsv: FIXTURE, outDir, bins: 20, zoomQuantile: 0.25 });
    const count = (name: string) =>
      (fs.readFileSync(path.join(outDir, name), "utf-8").match(/<circle/g) ?? []).length;
    const full = count("rel_pos_vs_interval.svg");
    const zoom = count("rel_pos_vs_interval_zoom.svg");
    expect(full).toBe(EXPECTED.n_records);
    expect(zoom).toBeGreaterThan(0);
    expect(zoom).toBeLessThan(full / 3);
  });
});

describe("statistics recomputed from the CSV match the simulator's summary", () => {
  const kept = qualifying(parseRunsCsv(fs.readFileSync(FIXTURE, "utf-8")));
  const lens = kept.map((r) => r.intervalLen);
  const rels = kept.map((r) => r.relPos as number);
  const absYouden = kept.map((r) => Math.abs(r.youden));

  it("selects the same qualifying rows", () => {
    expect(kept.length).toBe(EXPECTED.n_records);
  });

  it("reproduces the 20-bin histogram exactly", () => {
    const { counts, edges } = histogram(lens, 20, 0, Math.max(...lens));
    expect(counts).toEqual(EXPECTED.hist_counts);
    expect(edges[edges.length - 1]).toBeCloseTo(
      EXPECTED.hist_edges[EXPECTED.hist_edges.length - 1],
      12
    );
  });

  it("reproduces the median relative position", () => {
    expect(median(rels)).toBeCloseTo(EXPECTED.median_rel_pos, 12);
  });

  it("reproduces the rank correlation and its trend-line sign", () => {
    const corr = spearman(absYouden, rels);
    expect(corr).toBeCloseTo(EXPECTED.rank_corr, 9);
    const { slope } = leastSquares(absYouden, rels);
    expect(Math.sign(slope)).toBe(Math.sign(EXPECTED.rank_corr));
    expect(slope).toBeLessThan(0);
  });
});

describe("command-line interface", () => {
  const script = path.join(__dirname, "..", "render");

  it("renders via the executable wrapper", () => {
    const outDir = path.join(tmp, "cli-figs");
    const stdout = execFileSync(
      script,
      ["--in", FIXTURE, "--out", outDir, "--bins", "20", "--zoom-q", "0.25"],
      { encoding: "utf-8" }
    );
    expect(stdout.match(/wrote /g)).toHaveLength(4);
    for (const name of EXPECTED_FILES) {
      expect(fs.existsSync(path.join(outDir, name))).toBe(true);
    }
  });

  it("fails cleanly when no row qualifies", () => {
    const emptyCsv = path.join(tmp, "empty.csv");
    const header = fs.readFileSync(FIXTURE, "utf-8").split("\n", 1)[0];
    fs.writeFileSync(emptyCsv, header + "\n");
    const run = () =>
      execFileSync(script, ["--in", emptyCsv, "--out", path.join(tmp, "never")], {
        encoding: "utf-8",
        stdio: ["ignore", "pipe", "pipe"],
      });
    expect(run).toThrow();
    try {
      run();
    } catch (err: any) {
      expect(err.status).toBe(1);
      expect(String(err.stderr)).toMatch(/no qualifying rows/);
    }
    expect(fs.existsSync(path.join(tmp, "never"))).toBe(false);
  });

  it("rejects bad flags with a usage message", () => {
    try {
      execFileSync(script, ["--in", FIXTURE], { encoding: "utf-8", stdio: "pipe" });
      throw new Error("should have exited nonzero");
    } catch (err: any) {
      expect(err.status).toBe(1);
      expect(String(err.stderr)).toMatch(/usage/);
    }
  });
});
