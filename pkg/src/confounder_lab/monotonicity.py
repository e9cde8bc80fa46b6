"""Monotonicity classification and theorem-precondition checks.

A conditional mean E[Y|A,V] is *nondecreasing* in a binary V when moving V
from its low to its high level does not decrease the mean in either
treatment arm; *nonincreasing* is the mirror image; satisfying both means
the mean is constant; satisfying neither means the two arms move in
opposite directions.  These directions drive every ordering guarantee among
the three risk differences.

Tolerance policy: theorem suites over continuously sampled parameters use
``tol=0`` (exact ties have probability zero, and a nonzero tolerance would
silently convert genuine "neither" cases into monotone ones).  Hand-built
edge cases that should classify as constant use ``tol=1e-12`` to absorb
float rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import effects
from .model import DriverParams, ProxyParams
from .effects import EffectSummary, Params

__all__ = [
    "Direction",
    "BoundSide",
    "MonotonicityReport",
    "direction_of",
    "pair_direction",
    "is_monotone",
    "direction_sign",
    "report",
    "check_thm2",
    "check_thm3",
    "check_thm4",
    "check_thm5_mirror",
    "sample_constrained",
    "in_between",
    "bounds_verdict",
]

EQUALITY_TOL = 1e-9  # for preconditions that pin probabilities to exact values


class Direction(Enum):
    NONDECREASING = "nondecreasing"
    NONINCREASING = "nonincreasing"
    CONSTANT = "constant"
    NEITHER = "neither"


class BoundSide(Enum):
    UPPER = "upper"
    LOWER = "lower"


def direction_of(hi1: float, lo1: float, hi2: float, lo2: float, tol: float = 0.0) -> Direction:
    """Classify the joint direction of two (high-level, low-level) value pairs."""
    nondec = hi1 >= lo1 - tol and hi2 >= lo2 - tol
    noninc = hi1 <= lo1 + tol and hi2 <= lo2 + tol
    if nondec and noninc:
        return Direction.CONSTANT
    if nondec:
        return Direction.NONDECREASING
    if noninc:
        return Direction.NONINCREASING
    return Direction.NEITHER


def pair_direction(hi: float, lo: float, tol: float = 0.0) -> Direction:
    """Direction of a single value pair (never NEITHER)."""
    return direction_of(hi, lo, hi, lo, tol)


def is_monotone(direction: Direction) -> bool:
    return direction is not Direction.NEITHER


def direction_sign(direction: Direction) -> int | None:
    """+1, -1 or 0 for monotone directions; None for NEITHER."""
    if direction is Direction.NONDECREASING:
        return 1
    if direction is Direction.NONINCREASING:
        return -1
    if direction is Direction.CONSTANT:
        return 0
    return None


@dataclass(frozen=True)
class MonotonicityReport:
    """Directions of E[Y|A,.] and E[A|.] in the proxy D and in the confounder C."""

    y_in_d: Direction
    y_in_c: Direction
    a_in_d: Direction
    a_in_c: Direction


def report(params: Params, tol: float = 0.0) -> MonotonicityReport:
    """Classify all four directions from the analytic conditional means."""
    pr = effects._as_proxy(params)
    mu = pr.mu
    return MonotonicityReport(
        y_in_d=direction_of(
            effects.cond_mean_y_ad(pr, 1, 1),
            effects.cond_mean_y_ad(pr, 1, 0),
            effects.cond_mean_y_ad(pr, 0, 1),
            effects.cond_mean_y_ad(pr, 0, 0),
            tol,
        ),
        y_in_c=direction_of(mu[1][1], mu[1][0], mu[0][1], mu[0][0], tol),
        a_in_d=pair_direction(
            effects.p_a_given_d(pr, 1), effects.p_a_given_d(pr, 0), tol
        ),
        a_in_c=pair_direction(pr.p_a_given[0], pr.p_a_given[1], tol),
    )


def _mu_gaps(params: ProxyParams) -> tuple[float, float]:
    # (treated-arm C-gap, untreated-arm reversed C-gap), the pair whose
    # ordering drives the constrained-regime conclusions.
    g_a = params.mu[1][1] - params.mu[1][0]
    g_abar = params.mu[0][0] - params.mu[0][1]
    return g_a, g_abar


def _symmetric_preconditions(params: ProxyParams) -> bool:
    # p(c) = 0.5 and p(a|c) = p(a-bar|c-bar) = p(d|c) = p(d-bar|c-bar) >= 0.5
    q = params.p_a_given[0]
    return (
        abs(params.p_c - 0.5) <= EQUALITY_TOL
        and abs((1.0 - params.p_a_given[1]) - q) <= EQUALITY_TOL
        and abs(params.p_d_given[0] - q) <= EQUALITY_TOL
        and abs((1.0 - params.p_d_given[1]) - q) <= EQUALITY_TOL
        and q >= 0.5 - EQUALITY_TOL
    )


def _relaxed_preconditions(params: ProxyParams, tol: float) -> bool:
    # p(c) = 0.5, p(d|c) = p(d-bar|c-bar) >= 0.5, p(a-bar|c-bar) >= p(a|c) >= 0.5
    return (
        abs(params.p_c - 0.5) <= EQUALITY_TOL
        and abs(params.p_d_given[0] - (1.0 - params.p_d_given[1])) <= EQUALITY_TOL
        and params.p_d_given[0] >= 0.5 - EQUALITY_TOL
        and (1.0 - params.p_a_given[1]) >= params.p_a_given[0] - tol
        and params.p_a_given[0] >= 0.5 - tol
    )


def check_thm2(params: ProxyParams, tol: float = 0.0) -> bool:
    """Symmetric nonmonotone regime with aligned mean gaps.

    Requires p(c)=0.5 and a single shared conditional
    p(a|c)=p(a-bar|c-bar)=p(d|c)=p(d-bar|c-bar) >= 0.5, plus
    E[Y|a,c]-E[Y|a,c-bar] >= E[Y|a-bar,c-bar]-E[Y|a-bar,c] >= 0.
    Parameterizations in this regime satisfy rd_crude >= rd_obs >= rd_true.
    """
    g_a, g_abar = _mu_gaps(params)
    return _symmetric_preconditions(params) and g_a >= g_abar - tol and g_abar >= -tol


def check_thm3(params: ProxyParams, tol: float = 0.0) -> bool:
    """Mirror of :func:`check_thm2`; implies rd_crude <= rd_obs <= rd_true."""
    g_a, g_abar = _mu_gaps(params)
    return _symmetric_preconditions(params) and g_a <= g_abar + tol and g_abar <= tol


def check_thm4(params: ProxyParams, tol: float = 0.0) -> bool:
    """Relaxed regime: p(a-bar|c-bar) >= p(a|c) >= 0.5 instead of equality.

    Implies rd_crude >= rd_true and rd_obs >= rd_true (but not an ordering
    between rd_crude and rd_obs, which holds only for roughly 90% of draws).
    """
    g_a, g_abar = _mu_gaps(params)
    return _relaxed_preconditions(params, tol) and g_a >= g_abar - tol and g_abar >= -tol


def check_thm5_mirror(params: ProxyParams, tol: float = 0.0) -> bool:
    """Mirror of :func:`check_thm4`; implies rd_crude <= rd_true and rd_obs <= rd_true."""
    g_a, g_abar = _mu_gaps(params)
    return _relaxed_preconditions(params, tol) and g_a <= g_abar + tol and g_abar <= tol


_CONSTRAINED = ("thm2", "thm3", "thm4", "thm5")


def sample_constrained(rng_seed: int, which: str) -> ProxyParams:
    """Draw a parameterization satisfying the named theorem's preconditions.

    Equality constraints are built exactly; inequality constraints are met
    by rejection, so the accepted draws are uniform on the constraint set.
    Deterministic given the seed.
    """
    if which not in _CONSTRAINED:
        raise ValueError(f"unknown regime {which!r}; expected one of {_CONSTRAINED}")
    rng = np.random.default_rng(rng_seed)
    q = 0.5 + 0.5 * rng.random()
    while q == 0.5:
        q = 0.5 + 0.5 * rng.random()
    if which in ("thm2", "thm3"):
        p_a_given = (q, 1.0 - q)
    else:
        u = 0.5 + 0.5 * rng.random(2)
        p_a_given = (min(u), 1.0 - max(u))
    increasing = which in ("thm2", "thm4")
    while True:
        m = rng.random(4)
        mu = ((m[0], m[1]), (m[2], m[3]))
        g_a = mu[1][1] - mu[1][0]
        g_abar = mu[0][0] - mu[0][1]
        if increasing and g_a >= g_abar >= 0.0:
            break
        if not increasing and g_a <= g_abar <= 0.0:
            break
    return ProxyParams(p_c=0.5, p_d_given=(q, 1.0 - q), p_a_given=p_a_given, mu=mu)


def in_between(summary: EffectSummary, tol: float = 1e-12) -> bool:
    """Whether rd_obs lies in the closed interval spanned by rd_true and rd_crude."""
    lo = min(summary.rd_true, summary.rd_crude)
    hi = max(summary.rd_true, summary.rd_crude)
    return lo - tol <= summary.rd_obs <= hi + tol


def bounds_verdict(params: Params) -> tuple[BoundSide, BoundSide]:
    """Which side of the interventional means the observable S values fall on.

    The verdict for arm a follows from the alignment of the single-row
    direction of E[Y|a,D] with the direction of E[A|D]: aligned means
    S_a >= E[Y_a], opposed means S_a <= E[Y_a]; for the untreated arm the
    conclusions flip.  A constant row yields UPPER by convention, with
    equality holding.
    """
    pr = effects._as_proxy(params)
    dy_a = effects.cond_mean_y_ad(pr, 1, 1) - effects.cond_mean_y_ad(pr, 1, 0)
    dy_abar = effects.cond_mean_y_ad(pr, 0, 1) - effects.cond_mean_y_ad(pr, 0, 0)
    da = effects.p_a_given_d(pr, 1) - effects.p_a_given_d(pr, 0)
    side_a = BoundSide.UPPER if dy_a * da >= 0.0 else BoundSide.LOWER
    side_abar = BoundSide.UPPER if dy_abar * da <= 0.0 else BoundSide.LOWER
    return (side_a, side_abar)
