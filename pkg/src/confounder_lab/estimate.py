"""Plug-in estimation from (A, D, Y) samples and cross-population transport.

The confounder is never observed, so a dataset is just counts and outcome
sums per (treatment, proxy) stratum.  Estimators are plain plug-in means;
no inference machinery is attached, but stratum sizes are carried so users
can judge precision themselves.

The transport combination targets a third population that shares its
outcome mechanism with population 1 and its treatment mechanism with
population 2: its E[Y|A,D] is taken from the first sample and its E[A|D]
from the second, and the alignment of their directions in D determines on
which side of the true effect the partially adjusted effect falls.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from . import effects
from .errors import EmptyInput, EmptyStratum, MuOutOfRange, OutOfRange
from .model import DriverParams, ProxyParams
from .monotonicity import Direction, direction_of, direction_sign, pair_direction

__all__ = [
    "SampleDataset",
    "PopulationEstimates",
    "EmpiricalRds",
    "TransportReport",
    "ingest",
    "estimate_population",
    "empirical_rds",
    "generate",
    "y_direction",
    "a_direction",
    "in_between_inference",
    "transport",
]

Counts2 = tuple[tuple[int, int], tuple[int, int]]
Matrix2 = tuple[tuple[float, float], tuple[float, float]]

VERDICT_GE = "RD_obs >= RD_true"
VERDICT_LE = "RD_obs <= RD_true"
VERDICT_NONE = "Inconclusive"


@dataclass(frozen=True)
class SampleDataset:
    """Sufficient statistics of an (A, D, Y) sample: ``n[a][d]`` and ``y_sum[a][d]``."""

    n: Counts2
    y_sum: Matrix2
    n_total: int


@dataclass(frozen=True)
class PopulationEstimates:
    """Plug-in estimates of the observable conditionals.

    ``e_y_ad[a][d]`` are stratum outcome means; ``e_a_d`` is
    (P(a|d), P(a|d-bar)); ``p_d`` is the proxy marginal.  ``n`` carries the
    stratum sizes behind each mean.
    """

    e_y_ad: Matrix2
    e_a_d: tuple[float, float]
    p_d: float
    n: Counts2


class EmpiricalRds(NamedTuple):
    rd_obs: float
    rd_crude: float


def ingest(rows: Iterable[tuple[int, int, float]] | np.ndarray) -> SampleDataset:
    """Fold (a, d, y) rows into per-stratum counts and outcome sums."""
    data = np.asarray(rows if isinstance(rows, np.ndarray) else list(rows), dtype=float)
    if data.size == 0:
        raise EmptyInput("no rows to ingest")
    if data.ndim != 2 or data.shape[1] != 3:
        raise OutOfRange(f"expected rows of (a, d, y); got array shape {data.shape}")
    a, d, y = data[:, 0], data[:, 1], data[:, 2]
    for name, col in (("a", a), ("d", d)):
        if not np.isin(col, (0.0, 1.0)).all():
            raise OutOfRange(f"column {name} must be binary 0/1")
    if not np.isfinite(y).all():
        raise OutOfRange("column y must be finite")
    idx = (a.astype(np.intp) << 1) | d.astype(np.intp)
    counts = np.bincount(idx, minlength=4)
    sums = np.bincount(idx, weights=y, minlength=4)
    return SampleDataset(
        n=((int(counts[0]), int(counts[1])), (int(counts[2]), int(counts[3]))),
        y_sum=((float(sums[0]), float(sums[1])), (float(sums[2]), float(sums[3]))),
        n_total=int(counts.sum()),
    )


def estimate_population(ds: SampleDataset) -> PopulationEstimates:
    """Plug-in conditional means and proxy marginal from a dataset.

    Raises:
        EmptyStratum: listing every (a, d) cell with zero rows; estimation
            never imputes missing strata.
    """
    empty = [(a, d) for a in (0, 1) for d in (0, 1) if ds.n[a][d] == 0]
    if empty:
        raise EmptyStratum(empty)
    e_y_ad = tuple(
        tuple(ds.y_sum[a][d] / ds.n[a][d] for d in (0, 1)) for a in (0, 1)
    )
    n_d = ds.n[0][1] + ds.n[1][1]
    n_dbar = ds.n[0][0] + ds.n[1][0]
    return PopulationEstimates(
        e_y_ad=e_y_ad,
        e_a_d=(ds.n[1][1] / n_d, ds.n[1][0] / n_dbar),
        p_d=n_d / ds.n_total,
        n=ds.n,
    )


def empirical_rds(est: PopulationEstimates) -> EmpiricalRds:
    """Plug-in observed and crude risk differences.

    The observed effect standardizes the stratum means over P(D); the crude
    effect reweights them by P(D|A), recovered from P(A|D) and P(D) by
    Bayes inversion (identical to the raw within-arm means).
    """
    m = est.e_y_ad
    p_d = est.p_d
    obs = (m[1][1] - m[0][1]) * p_d + (m[1][0] - m[0][0]) * (1.0 - p_d)
    p_a = est.e_a_d[0] * p_d + est.e_a_d[1] * (1.0 - p_d)
    p_d_given_a = est.e_a_d[0] * p_d / p_a
    p_d_given_abar = (1.0 - est.e_a_d[0]) * p_d / (1.0 - p_a)
    crude = (m[1][1] * p_d_given_a + m[1][0] * (1.0 - p_d_given_a)) - (
        m[0][1] * p_d_given_abar + m[0][0] * (1.0 - p_d_given_abar)
    )
    return EmpiricalRds(rd_obs=obs, rd_crude=crude)


def generate(params: ProxyParams | DriverParams, n: int, seed: int) -> np.ndarray:
    """Simulate ``n`` i.i.d. (a, d, y) rows; Y is Bernoulli with mean mu[a][c].

    The confounder is sampled internally and discarded.  Returns an (n, 3)
    float array; deterministic given the seed.
    """
    for row in params.mu:
        for m in row:
            if not 0.0 <= m <= 1.0:
                raise MuOutOfRange(f"mu={params.mu} must lie in [0, 1] to sample Y")
    pr = effects._as_proxy(params)
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    u = rng.random((4, n))
    c = u[0] < pr.p_c
    d = u[1] < np.where(c, pr.p_d_given[0], pr.p_d_given[1])
    a = u[2] < np.where(c, pr.p_a_given[0], pr.p_a_given[1])
    mu = np.asarray(pr.mu)
    y = u[3] < mu[a.astype(np.intp), c.astype(np.intp)]
    return np.column_stack((a, d, y)).astype(float)


def y_direction(est: PopulationEstimates, tol: float = 0.0) -> Direction:
    """Direction of the estimated E[Y|A,D] in D, over both treatment arms."""
    m = est.e_y_ad
    return direction_of(m[1][1], m[1][0], m[0][1], m[0][0], tol)


def a_direction(est: PopulationEstimates, tol: float = 0.0) -> Direction:
    """Direction of the estimated E[A|D] in D."""
    return pair_direction(est.e_a_d[0], est.e_a_d[1], tol)


def in_between_inference(rds: EmpiricalRds, y_dir: Direction) -> str:
    """Sign conclusion available once monotonicity in D is verified on data.

    When E[Y|A,D] is monotone in D the observed effect falls between the
    true and crude effects, so comparing rd_crude with rd_obs reveals on
    which side of the true effect rd_obs sits.
    """
    if y_dir is Direction.NEITHER:
        return VERDICT_NONE
    if rds.rd_crude <= rds.rd_obs:
        return VERDICT_LE
    return VERDICT_GE


@dataclass(frozen=True)
class TransportReport:
    """Transported conditionals for the third population and the sign verdict."""

    e_y_ad: Matrix2
    e_a_d: tuple[float, float]
    y_direction: Direction
    a_direction: Direction
    verdict: str


def transport(pop1: PopulationEstimates, pop2: PopulationEstimates) -> TransportReport:
    """Combine two populations' estimates into conclusions for a third.

    The third population's E[Y|A,D] is taken from ``pop1`` and its E[A|D]
    from ``pop2``.  Aligned directions imply the partially adjusted effect
    overshoots the true one, opposed directions imply it undershoots, and a
    non-monotone E[Y|A,D] yields no conclusion.  Degenerate (constant)
    directions are reported as aligned; the bound then holds with equality.
    """
    y_dir = y_direction(pop1)
    a_dir = a_direction(pop2)
    sy = direction_sign(y_dir)
    sa = direction_sign(a_dir)
    if sy is None:
        verdict = VERDICT_NONE
    elif sy * sa >= 0:
        verdict = VERDICT_GE
    else:
        verdict = VERDICT_LE
    return TransportReport(
        e_y_ad=pop1.e_y_ad,
        e_a_d=pop2.e_a_d,
        y_direction=y_dir,
        a_direction=a_dir,
        verdict=verdict,
    )
