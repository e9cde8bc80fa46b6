"""Closed-form effect measures for a parameterized graph.

Everything here is computed exactly from the parameters, never from
simulated data, so downstream theorem checks are free of Monte Carlo noise.
All functions accept either graph; driver parameterizations are converted
through :func:`confounder_lab.model.to_proxy` first, which preserves the
joint distribution.

The three effect measures are

    rd_true  = E[Y_a] - E[Y_a-bar]          (standardized over C)
    rd_obs   = S_a - S_a-bar                (standardized over D)
    rd_crude = E[Y|a] - E[Y|a-bar]          (no adjustment)

with S_a = E[Y|a,d] p(d) + E[Y|a,d-bar] p(d-bar) and
E[Y_a] = E[Y|a,c] p(c) + E[Y|a,c-bar] p(c-bar).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .model import DriverParams, Matrix2, ProxyParams, level_prob, to_proxy

__all__ = [
    "ArmPair",
    "EffectSummary",
    "DerivedConditionals",
    "posterior_c",
    "log_odds_c",
    "posterior_c_sigmoid",
    "cond_mean_y_ad",
    "posterior_c_given_a",
    "posterior_c_given_d",
    "cond_mean_y_a",
    "p_d_marginal",
    "p_d_given_a",
    "p_a_given_d",
    "rd_true",
    "rd_obs",
    "rd_crude",
    "s_values",
    "e_y_do",
    "derived_conditionals",
    "summarize",
]

Params = ProxyParams | DriverParams


class ArmPair(NamedTuple):
    """A quantity evaluated at both treatment arms, A=a first."""

    a: float
    a_bar: float


@dataclass(frozen=True)
class EffectSummary:
    """All effect measures for one parameterization.

    Satisfies rd_true = e_y_do.a - e_y_do.a_bar and rd_obs = s.a - s.a_bar
    by construction.
    """

    rd_true: float
    rd_obs: float
    rd_crude: float
    e_y_do: ArmPair
    s: ArmPair


@dataclass(frozen=True)
class DerivedConditionals:
    """Observable-side conditionals derived from the parameterization.

    ``p_c_given_ad[i][k] = P(C=c | A=i, D=k)`` and
    ``e_y_given_ad[i][k] = E[Y | A=i, D=k]``.
    """

    p_c_given_ad: Matrix2
    e_y_given_ad: Matrix2
    p_d: float
    p_d_given_a: ArmPair


def _as_proxy(params: Params) -> ProxyParams:
    # Callers are responsible for validity (see model.validate); conversions
    # validate the driver side because to_proxy divides by its marginals.
    if isinstance(params, DriverParams):
        return to_proxy(params)
    return params


def posterior_c(params: Params, a_level: int, d_level: int) -> float:
    """P(C=c | A=a_level, D=d_level) by a direct Bayes ratio.

    Uses the conditional independence of A and D given C, so the likelihood
    of each confounder level factors as P(A|C) P(D|C).  This formulation is
    numerically robust near extreme conditionals; the log-odds/sigmoid form
    is available as :func:`posterior_c_sigmoid` and agrees to 1e-12.
    """
    pr = _as_proxy(params)
    like_c = (
        level_prob(pr.p_a_given[0], a_level)
        * level_prob(pr.p_d_given[0], d_level)
        * pr.p_c
    )
    like_cbar = (
        level_prob(pr.p_a_given[1], a_level)
        * level_prob(pr.p_d_given[1], d_level)
        * (1.0 - pr.p_c)
    )
    return like_c / (like_c + like_cbar)


def log_odds_c(params: Params, a_level: int, d_level: int) -> float:
    """Log posterior odds of the confounder given (A, D)."""
    pr = _as_proxy(params)
    return (
        math.log(level_prob(pr.p_a_given[0], a_level))
        + math.log(level_prob(pr.p_d_given[0], d_level))
        + math.log(pr.p_c)
        - math.log(level_prob(pr.p_a_given[1], a_level))
        - math.log(level_prob(pr.p_d_given[1], d_level))
        - math.log(1.0 - pr.p_c)
    )


def posterior_c_sigmoid(params: Params, a_level: int, d_level: int) -> float:
    """Equivalent of :func:`posterior_c` through the logistic sigmoid of the log odds."""
    delta = log_odds_c(params, a_level, d_level)
    if delta >= 0.0:
        return 1.0 / (1.0 + math.exp(-delta))
    e = math.exp(delta)
    return e / (1.0 + e)


def cond_mean_y_ad(params: Params, a_level: int, d_level: int) -> float:
    """E[Y | A=a_level, D=d_level].

    A convex combination of the two outcome means for that arm, weighted by
    the confounder posterior; D drops out of the inner expectation because Y
    and D are conditionally independent given (A, C).
    """
    pr = _as_proxy(params)
    w = posterior_c(pr, a_level, d_level)
    return pr.mu[a_level][1] * w + pr.mu[a_level][0] * (1.0 - w)


def posterior_c_given_a(params: Params, a_level: int) -> float:
    """P(C=c | A=a_level)."""
    pr = _as_proxy(params)
    like_c = level_prob(pr.p_a_given[0], a_level) * pr.p_c
    like_cbar = level_prob(pr.p_a_given[1], a_level) * (1.0 - pr.p_c)
    return like_c / (like_c + like_cbar)


def posterior_c_given_d(params: Params, d_level: int) -> float:
    """P(C=c | D=d_level)."""
    pr = _as_proxy(params)
    like_c = level_prob(pr.p_d_given[0], d_level) * pr.p_c
    like_cbar = level_prob(pr.p_d_given[1], d_level) * (1.0 - pr.p_c)
    return like_c / (like_c + like_cbar)


def cond_mean_y_a(params: Params, a_level: int) -> float:
    """E[Y | A=a_level], the unadjusted arm mean."""
    pr = _as_proxy(params)
    w = posterior_c_given_a(pr, a_level)
    return pr.mu[a_level][1] * w + pr.mu[a_level][0] * (1.0 - w)


def p_d_marginal(params: Params) -> float:
    """P(D=d)."""
    pr = _as_proxy(params)
    return pr.p_d_given[0] * pr.p_c + pr.p_d_given[1] * (1.0 - pr.p_c)


def p_d_given_a(params: Params, a_level: int) -> float:
    """P(D=d | A=a_level), mixing P(D|C) over the confounder posterior."""
    pr = _as_proxy(params)
    w = posterior_c_given_a(pr, a_level)
    return pr.p_d_given[0] * w + pr.p_d_given[1] * (1.0 - w)


def p_a_given_d(params: Params, d_level: int) -> float:
    """P(A=a | D=d_level), mixing P(A|C) over the confounder posterior."""
    pr = _as_proxy(params)
    w = posterior_c_given_d(pr, d_level)
    return pr.p_a_given[0] * w + pr.p_a_given[1] * (1.0 - w)


def e_y_do(params: Params) -> ArmPair:
    """Interventional means (E[Y_a], E[Y_a-bar]), standardized over the confounder."""
    pr = _as_proxy(params)
    p_c = pr.p_c
    return ArmPair(
        a=pr.mu[1][1] * p_c + pr.mu[1][0] * (1.0 - p_c),
        a_bar=pr.mu[0][1] * p_c + pr.mu[0][0] * (1.0 - p_c),
    )


def s_values(params: Params) -> ArmPair:
    """Observable approximations (S_a, S_a-bar), standardized over the proxy."""
    pr = _as_proxy(params)
    p_d = p_d_marginal(pr)
    return ArmPair(
        a=cond_mean_y_ad(pr, 1, 1) * p_d + cond_mean_y_ad(pr, 1, 0) * (1.0 - p_d),
        a_bar=cond_mean_y_ad(pr, 0, 1) * p_d + cond_mean_y_ad(pr, 0, 0) * (1.0 - p_d),
    )


def rd_true(params: Params) -> float:
    """True risk difference, the confounder-standardized causal contrast."""
    do = e_y_do(params)
    return do.a - do.a_bar


def rd_obs(params: Params) -> float:
    """Observed (partially adjusted) risk difference, standardized over the proxy."""
    s = s_values(params)
    return s.a - s.a_bar


def rd_crude(params: Params) -> float:
    """Crude risk difference, the unadjusted contrast of arm means."""
    pr = _as_proxy(params)
    return cond_mean_y_a(pr, 1) - cond_mean_y_a(pr, 0)


def derived_conditionals(params: Params) -> DerivedConditionals:
    """Bundle the observable-side conditionals for one parameterization."""
    pr = _as_proxy(params)
    return DerivedConditionals(
        p_c_given_ad=tuple(
            tuple(posterior_c(pr, a, d) for d in (0, 1)) for a in (0, 1)
        ),
        e_y_given_ad=tuple(
            tuple(cond_mean_y_ad(pr, a, d) for d in (0, 1)) for a in (0, 1)
        ),
        p_d=p_d_marginal(pr),
        p_d_given_a=ArmPair(a=p_d_given_a(pr, 1), a_bar=p_d_given_a(pr, 0)),
    )


def summarize(params: Params) -> EffectSummary:
    """Compute every effect measure for one parameterization."""
    pr = _as_proxy(params)
    do = e_y_do(pr)
    s = s_values(pr)
    return EffectSummary(
        rd_true=do.a - do.a_bar,
        rd_obs=s.a - s.a_bar,
        rd_crude=rd_crude(pr),
        e_y_do=do,
        s=s,
    )
