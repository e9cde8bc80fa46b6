import { describe, expect, it } from "vitest";

import { parseRunsCsv } from "../src/csv";

const HEADER =
  "run_index,p_c,p_d_given_c,p_d_given_cbar,p_a_given_c,p_a_given_cbar," +
  "mu_abar_cbar,mu_abar_c,mu_a_cbar,mu_a_c," +
  "rd_true,rd_obs,rd_crude,y_in_c,y_in_d,in_between,interval_len,rel_pos,youden";

describe("parseRunsCsv", () => {
  it("parses rows and maps empty rel_pos to null", () => {
    const text =
      HEADER +
      "\n0,0.5,0.8,0.2,0.7,0.4,0.1,0.2,0.3,0.4,0.05,0.06,0.09,neither,neither,true,0.04,0.25,0.6" +
      "\n1,0.5,0.8,0.2,0.7,0.4,0.1,0.1,0.3,0.3,0.2,0.2,0.2,constant,constant,true,0.0,,0.6\n";
    const rows = parseRunsCsv(text);
    expect(rows).toHaveLength(2);
    expect(rows[0].inBetween).toBe(true);
    expect(rows[0].relPos).toBeCloseTo(0.25, 15);
    expect(rows[0].youden).toBeCloseTo(0.6, 15);
    expect(rows[1].relPos).toBeNull();
    expect(rows[1].yInD).toBe("constant");
  });

  it("rejects a missing header or missing columns", () => {
    expect(() => parseRunsCsv("")).toThrow(/empty/);
    expect(() => parseRunsCsv("a,b,c\n1,2,3\n")).toThrow(/missing required column/);
  });

  it("rejects non-numeric cells", () => {
    const text = HEADER + "\nx,0.5,0.8,0.2,0.7,0.4,0.1,0.2,0.3,0.4,0.05,0.06,0.09,neither,neither,true,0.04,0.25,0.6\n";
    expect(() => parseRunsCsv(text)).toThrow(/run_index/);
  });

  it("accepts a header-only file as zero rows", () => {
    expect(parseRunsCsv(HEADER + "\n")).toEqual([]);
  });
});
