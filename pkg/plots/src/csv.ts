/**
 * Parser for the simulator's per-run CSV.
 *
 * The file carries one row per randomized run; the plotting side only needs
 * the in-between flag, the interval length, the relative position of the
 * partially adjusted effect inside the interval, and the Youden index of
 * the proxy. An empty rel_pos field marks a degenerate interval.
 */

export interface RunRow {
  runIndex: number;
  rdTrue: number;
  rdObs: number;
  rdCrude: number;
  yInC: string;
  yInD: string;
  inBetween: boolean;
  intervalLen: number;
  relPos: number | null;
  youden: number;
}

const REQUIRED = [
  "run_index",
  "rd_true",
  "rd_obs",
  "rd_crude",
  "y_in_c",
  "y_in_d",
  "in_between",
  "interval_len",
  "rel_pos",
  "youden",
] as const;

export function parseRunsCsv(text: string): RunRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error("CSV is empty: expected a header row");
  }
  const header = lines[0].split(",").map((h) => h.trim());
  const col: Record<string, number> = {};
  header.forEach((name, i) => (col[name] = i));
  for (const name of REQUIRED) {
    if (!(name in col)) {
      throw new Error(`CSV is missing required column "${name}"`);
    }
  }

  return lines.slice(1).map((line, i) => {
    const parts = line.split(",");
    const num = (name: string): number => {
      const v = Number(parts[col[name]]);
      if (!Number.isFinite(v)) {
        throw new Error(`row ${i + 2}: column ${name} is not a finite number`);
      }
      return v;
    };
    const relPosRaw = (parts[col["rel_pos"]] ?? "").trim();
    return {
      runIndex: num("run_index"),
      rdTrue: num("rd_true"),
      rdObs: num("rd_obs"),
      rdCrude: num("rd_crude"),
      yInC: parts[col["y_in_c"]],
      yInD: parts[col["y_in_d"]],
      inBetween: parts[col["in_between"]] === "true",
      intervalLen: num("interval_len"),
      relPos: relPosRaw === "" ? null : num("rel_pos"),
      youden: num("youden"),
    };
  });
}
