/**
 * CLI: render the four study figures from a simulation CSV.
 *
 *   render --in runs.csv --out figs/ [--bins 20] [--zoom-q 0.25]
 *
 * Outputs, all SVG:
 *   interval_length_hist.svg     histogram of |rd_true - rd_crude|
 *   rel_pos_vs_interval.svg      relative position vs interval length
 *   rel_pos_vs_interval_zoom.svg the same, restricted to the smallest intervals
 *   rel_pos_vs_youden.svg        relative position vs |Youden|, with trend line
 *
 * Plots are a pure function of the CSV plus these options; nothing is
 * recomputed from model parameters.
 */

import * as fs from "fs";
import * as path from "path";

import { parseRunsCsv } from "./csv";
import { histogram, leastSquares, qualifying, quantile } from "./stats";
import { histogramSvg, scatterSvg } from "./svg";

export interface PlotSpec {
  inputCsv: string;
  outDir: string;
  bins: number;
  zoomQuantile: number;
}

export const DEFAULT_BINS = 20;
export const DEFAULT_ZOOM_QUANTILE = 0.25;

export function renderAll(spec: PlotSpec): string[] {
  const rows = parseRunsCsv(fs.readFileSync(spec.inputCsv, "utf-8"));
  const kept = qualifying(rows);
  if (kept.length === 0) {
    throw new Error(
      "no qualifying rows: need at least one in-between run with interval_len > 1e-12"
    );
  }
  const lens = kept.map((r) => r.intervalLen);
  const rels = kept.map((r) => r.relPos as number);
  const absYouden = kept.map((r) => Math.abs(r.youden));

  fs.mkdirSync(spec.outDir, { recursive: true });
  const written: string[] = [];
  const write = (name: string, svg: string) => {
    const file = path.join(spec.outDir, name);
    fs.writeFileSync(file, svg);
    written.push(file);
  };

  const { counts, edges } = histogram(lens, spec.bins, 0, Math.max(...lens));
  write(
    "interval_length_hist.svg",
    histogramSvg({
      title: `Interval length, ${kept.length} in-between runs`,
      xLabel: "|rd_true - rd_crude|",
      counts,
      edges,
    })
  );

  write(
    "rel_pos_vs_interval.svg",
    scatterSvg({
      title: "Position of rd_obs inside the interval",
      xLabel: "interval length",
      yLabel: "rel_pos (0 = rd_true, 1 = rd_crude)",
      points: kept.map((r) => [r.intervalLen, r.relPos as number]),
    })
  );

  const threshold = quantile(lens, spec.zoomQuantile);
  const zoomed = kept.filter((r) => r.intervalLen <= threshold);
  write(
    "rel_pos_vs_interval_zoom.svg",
    scatterSvg({
      title: `Zoom: intervals up to the ${Math.round(spec.zoomQuantile * 100)}th percentile`,
      xLabel: "interval length",
      yLabel: "rel_pos (0 = rd_true, 1 = rd_crude)",
      points: zoomed.map((r) => [r.intervalLen, r.relPos as number]),
    })
  );

  write(
    "rel_pos_vs_youden.svg",
    scatterSvg({
      title: "Proxy quality pulls rd_obs toward rd_true",
      xLabel: "|Youden index| of the proxy",
      yLabel: "rel_pos (0 = rd_true, 1 = rd_crude)",
      points: absYouden.map((x, i) => [x, rels[i]]),
      trend: leastSquares(absYouden, rels),
    })
  );

  return written;
}

function parseArgs(argv: string[]): PlotSpec {
  const spec: PlotSpec = {
    inputCsv: "",
    outDir: "",
    bins: DEFAULT_BINS,
    zoomQuantile: DEFAULT_ZOOM_QUANTILE,
  };
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (value === undefined) throw new Error(`missing value for ${flag}`);
    switch (flag) {
      case "--in":
        spec.inputCsv = value;
        break;
      case "--out":
        spec.outDir = value;
        break;
      case "--bins":
        spec.bins = Number(value);
        break;
      case "--zoom-q":
        spec.zoomQuantile = Number(value);
        break;
      default:
        throw new Error(`unknown flag ${flag}`);
    }
  }
  if (!spec.inputCsv || !spec.outDir) {
    throw new Error("usage: render --in runs.csv --out figs/ [--bins 20] [--zoom-q 0.25]");
  }
  if (!Number.isInteger(spec.bins) || spec.bins < 1) {
    throw new Error("--bins must be a positive integer");
  }
  if (!(spec.zoomQuantile > 0 && spec.zoomQuantile <= 1)) {
    throw new Error("--zoom-q must be in (0, 1]");
  }
  return spec;
}

export function main(argv: string[]): number {
  try {
    const written = renderAll(parseArgs(argv));
    for (const file of written) console.log(`wrote ${file}`);
    return 0;
  } catch (err) {
    console.error(`render: ${err instanceof Error ? err.message : err}`);
    return 1;
  }
}

export function run(): void {
  process.exit(main(process.argv.slice(2)));
}

if (require.main === module) {
  run();
}
