"""Reproduce the 10000-run randomized parameterization study.

Each run draws a fresh parameterization (even confounder prevalence, all
other parameters uniform), classifies the direction of E[Y|A,.] in C and in
D, and checks whether rd_obs landed between rd_true and rd_crude.
"""

from confounder_lab import figure_stats, run_experiment

summary, records = run_experiment(n=10000, seed=0)

labels = ("nondec", "noninc", "neither")
print("Cross-classification of direction in C (rows) vs direction in D (cols):")
print(f"  {'':10s}" + "".join(f"{c:>9s}" for c in labels) + f"{'in-betw.':>10s}")
for r, label in enumerate(labels):
    row = summary.table[r]
    print(f"  {label:10s}" + "".join(f"{v:>9d}" for v in row) + f"{summary.n_in_between_by_row[r]:>10d}")

n = summary.n_runs
print(f"\nmonotone in D: {summary.n_monotone_d} / {n}  ({summary.n_monotone_d/n:.1%})")
print(f"rd_obs in between overall: {summary.n_in_between} / {n}  ({summary.n_in_between/n:.1%})")
neither = summary.table[2][2]
print(
    f"in between despite a non-monotone E[Y|A,D]: "
    f"{summary.n_in_between_by_row[2]} / {neither}  ({summary.n_in_between_by_row[2]/neither:.1%})"
)

stats = figure_stats(records)
print(f"\nAmong the {stats.n_records} in-between runs with a nondegenerate interval:")
print(f"  median relative position of rd_obs: {stats.median_rel_pos:.3f}  (1 = at rd_crude)")
print(f"  rank corr(|youden|, relative position): {stats.rank_corr:+.3f}")
print("A stronger proxy (larger |Youden index|) pulls rd_obs away from rd_crude")
print("and toward rd_true; a weak proxy barely adjusts at all.")
