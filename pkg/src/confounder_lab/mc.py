"""Monte Carlo study over randomized proxy parameterizations.

Each run draws an independent parameterization, computes the three risk
differences and the direction classifications, and records where the
partially adjusted effect falls inside the interval spanned by the true and
crude effects.  The study sampler pins the confounder prevalence at
P(C=c) = 0.5 and draws the remaining eight parameters i.i.d. uniform(0,1);
the published aggregate in-between rates this experiment reproduces
correspond to an even prevalence, and all directional theorems are
prevalence-free.  Use :func:`confounder_lab.model.sample_proxy` instead
when the prevalence itself should vary.

Per-run seeds are derived from the master seed and the run index through
``numpy.random.SeedSequence((master_seed, run_index))``, so results do not
depend on execution order or on the number of workers.  Set
``CONFOUNDER_LAB_THREADS`` (or pass ``workers=``) to fan runs out over a
process pool; aggregation is order-independent.
"""

from __future__ import annotations

import csv
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import monotonicity
from .effects import EffectSummary, summarize
from .errors import EmptyInput
from .model import ProxyParams
from .monotonicity import Direction, MonotonicityReport

__all__ = [
    "RunRecord",
    "ExperimentSummary",
    "FigureStats",
    "run_seed",
    "sample_study_params",
    "run_experiment",
    "youden",
    "figure_stats",
    "write_csv",
    "CSV_COLUMNS",
]

DEGENERATE_INTERVAL = 1e-12

CSV_COLUMNS = (
    "run_index",
    "p_c",
    "p_d_given_c",
    "p_d_given_cbar",
    "p_a_given_c",
    "p_a_given_cbar",
    "mu_abar_cbar",
    "mu_abar_c",
    "mu_a_cbar",
    "mu_a_c",
    "rd_true",
    "rd_obs",
    "rd_crude",
    "y_in_c",
    "y_in_d",
    "in_between",
    "interval_len",
    "rel_pos",
    "youden",
)


@dataclass(frozen=True)
class RunRecord:
    """Everything retained about a single randomized run.

    ``interval_len`` is |rd_true - rd_crude|.  ``rel_pos`` rescales the
    distance of rd_obs from rd_true by the interval length (0 means rd_obs
    equals rd_true, 1 means it equals rd_crude) and is None when the
    interval is degenerate.
    """

    run_index: int
    params: ProxyParams
    summary: EffectSummary
    report: MonotonicityReport
    in_between: bool
    interval_len: float
    rel_pos: float | None
    youden: float


_ROW = {
    Direction.NONDECREASING: 0,
    Direction.CONSTANT: 0,  # weak-inequality convention, see README
    Direction.NONINCREASING: 1,
    Direction.NEITHER: 2,
}

_TABLE_LABELS = ("nondecreasing", "nonincreasing", "neither")


@dataclass(frozen=True)
class ExperimentSummary:
    """Aggregate cross-classification of direction in C (rows) vs in D (cols)."""

    n_runs: int
    table: tuple[tuple[int, int, int], ...]
    n_in_between_by_row: tuple[int, int, int]
    seed: int

    @property
    def n_monotone_d(self) -> int:
        return sum(row[0] + row[1] for row in self.table)

    @property
    def n_in_between(self) -> int:
        return sum(self.n_in_between_by_row)

    def to_dict(self) -> dict:
        return {
            "n_runs": self.n_runs,
            "seed": self.seed,
            "table": {
                "rows": "y_in_c",
                "cols": "y_in_d",
                "labels": list(_TABLE_LABELS),
                "counts": [list(row) for row in self.table],
            },
            "n_in_between_by_row": list(self.n_in_between_by_row),
            "n_monotone_d": self.n_monotone_d,
            "n_in_between": self.n_in_between,
            "tie_convention": "constant directions are tabulated as nondecreasing",
        }


def run_seed(master_seed: int, run_index: int) -> int:
    """Counter-based per-run seed: a pure function of (master seed, index)."""
    ss = np.random.SeedSequence((master_seed, run_index))
    return int(ss.generate_state(1, np.uint64)[0])


def youden(params: ProxyParams) -> float:
    """Youden index of D as a diagnostic for C: sensitivity + specificity - 1."""
    return params.p_d_given[0] + (1.0 - params.p_d_given[1]) - 1.0


def sample_study_params(rng_seed: int) -> ProxyParams:
    """Per-run parameterization of the randomized study.

    p_c is pinned at 0.5; P(d|c), P(d|c-bar), P(a|c), P(a|c-bar) and the
    four outcome means are drawn i.i.d. uniform(0,1), in that order.  The
    measure-zero degenerate draw P(d|c) = P(d|c-bar) is rejected and redrawn.
    """
    rng = np.random.default_rng(rng_seed)
    while True:
        u = rng.random(8)
        if u[0] == u[1] or 0.0 in u:
            continue
        return ProxyParams(
            p_c=0.5,
            p_d_given=(u[0], u[1]),
            p_a_given=(u[2], u[3]),
            mu=((u[4], u[5]), (u[6], u[7])),
        )


def _one_run(master_seed: int, index: int) -> RunRecord:
    params = sample_study_params(run_seed(master_seed, index))
    summary = summarize(params)
    rep = monotonicity.report(params)
    interval_len = abs(summary.rd_true - summary.rd_crude)
    rel_pos = (
        abs(summary.rd_obs - summary.rd_true) / interval_len
        if interval_len > DEGENERATE_INTERVAL
        else None
    )
    return RunRecord(
        run_index=index,
        params=params,
        summary=summary,
        report=rep,
        in_between=monotonicity.in_between(summary),
        interval_len=interval_len,
        rel_pos=rel_pos,
        youden=youden(params),
    )


def _run_batch(args: tuple[int, int, int]) -> list[RunRecord]:
    master_seed, start, stop = args
    return [_one_run(master_seed, i) for i in range(start, stop)]


def _worker_count(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("CONFOUNDER_LAB_THREADS", "1"))
    return max(1, workers)


def run_experiment(
    n: int, seed: int, workers: int | None = None
) -> tuple[ExperimentSummary, list[RunRecord]]:
    """Run ``n`` independent randomized runs; deterministic given (n, seed)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    workers = _worker_count(workers)
    if workers == 1:
        records = [_one_run(seed, i) for i in range(n)]
    else:
        step = -(-n // workers)
        chunks = [(seed, lo, min(lo + step, n)) for lo in range(0, n, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = [rec for batch in pool.map(_run_batch, chunks) for rec in batch]

    table = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    in_between_by_row = [0, 0, 0]
    for rec in records:
        row = _ROW[rec.report.y_in_c]
        table[row][_ROW[rec.report.y_in_d]] += 1
        if rec.in_between:
            in_between_by_row[row] += 1
    summary = ExperimentSummary(
        n_runs=n,
        table=tuple(tuple(row) for row in table),
        n_in_between_by_row=tuple(in_between_by_row),
        seed=seed,
    )
    return summary, records


@dataclass(frozen=True)
class FigureStats:
    """Descriptive statistics of the in-between runs with a nondegenerate interval."""

    n_records: int
    hist_counts: tuple[int, ...]
    hist_edges: tuple[float, ...]
    interval_rel_pos: tuple[tuple[float, float], ...]
    youden_rel_pos: tuple[tuple[float, float], ...]
    median_rel_pos: float
    rank_corr: float


def _ranks(x: np.ndarray) -> np.ndarray:
    order = np.argsort(x, kind="stable")
    ranks = np.empty(len(x))
    ranks[order] = np.arange(len(x))
    return ranks


def _spearman(x: np.ndarray, y: np.ndarray) -> float:
    if len(x) < 2 or np.ptp(x) == 0.0 or np.ptp(y) == 0.0:
        return float("nan")
    return float(np.corrcoef(_ranks(x), _ranks(y))[0, 1])


def figure_stats(records: list[RunRecord], bins: int = 20) -> FigureStats:
    """Summaries of where rd_obs falls inside the interval, for plotting.

    Restricted to runs with ``in_between`` true and a nondegenerate interval.
    The rank correlation pairs |youden| with rel_pos, since the sign of the
    Youden index only reflects how the proxy labels are coded.
    """
    kept = [r for r in records if r.in_between and r.rel_pos is not None]
    if not kept:
        raise EmptyInput("no in-between records with a nondegenerate interval")
    lens = np.array([r.interval_len for r in kept])
    rel = np.array([r.rel_pos for r in kept])
    yj = np.array([r.youden for r in kept])
    counts, edges = np.histogram(lens, bins=bins, range=(0.0, float(lens.max())))
    return FigureStats(
        n_records=len(kept),
        hist_counts=tuple(int(c) for c in counts),
        hist_edges=tuple(float(e) for e in edges),
        interval_rel_pos=tuple(zip(lens.tolist(), rel.tolist())),
        youden_rel_pos=tuple(zip(yj.tolist(), rel.tolist())),
        median_rel_pos=float(np.median(rel)),
        rank_corr=_spearman(np.abs(yj), rel),
    )


def _fmt(x: float) -> str:
    return repr(float(x))


def write_csv(records: list[RunRecord], path) -> None:
    """Write one row per run under the documented header (see CSV_COLUMNS)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            p = rec.params
            writer.writerow(
                (
                    rec.run_index,
                    _fmt(p.p_c),
                    _fmt(p.p_d_given[0]),
                    _fmt(p.p_d_given[1]),
                    _fmt(p.p_a_given[0]),
                    _fmt(p.p_a_given[1]),
                    _fmt(p.mu[0][0]),
                    _fmt(p.mu[0][1]),
                    _fmt(p.mu[1][0]),
                    _fmt(p.mu[1][1]),
                    _fmt(rec.summary.rd_true),
                    _fmt(rec.summary.rd_obs),
                    _fmt(rec.summary.rd_crude),
                    rec.report.y_in_c.value,
                    rec.report.y_in_d.value,
                    "true" if rec.in_between else "false",
                    _fmt(rec.interval_len),
                    "" if rec.rel_pos is None else _fmt(rec.rel_pos),
                    _fmt(rec.youden),
                )
            )
