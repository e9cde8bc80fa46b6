"""Parameterizations of the two binary-confounder causal graphs.

Both graphs relate a binary treatment A, a binary unobserved confounder C,
a binary observed companion D of the confounder, and an outcome Y:

* proxy graph:  C -> D, factorized as p(C) p(D|C) p(A|C) p(Y|A,C)
* driver graph: D -> C, factorized as p(D) p(C|D) p(A|C) p(Y|A,C)

Every quantity computed anywhere in this package depends on Y only through
its conditional means E[Y|A,C], so the outcome is carried as a 2x2 matrix
``mu`` instead of a full distribution.

Index conventions, used throughout:

* levels are coded 1 for a, c, d and 0 for their complements;
* conditional pairs are ordered (given level 1, given level 0), e.g.
  ``p_d_given = (P(d|c), P(d|c-bar))``;
* ``mu[i][j] = E[Y | A=i, C=j]``, so ``mu[1][0]`` is E[Y|a, c-bar].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateProxy, OutOfRange

__all__ = [
    "ProxyParams",
    "DriverParams",
    "JointTable",
    "validate",
    "sample_proxy",
    "sample_driver",
    "to_proxy",
    "joint_table",
]

Pair = tuple[float, float]
Matrix2 = tuple[Pair, Pair]


def _pair(values) -> Pair:
    x, y = values
    return (float(x), float(y))


def _matrix(values) -> Matrix2:
    row0, row1 = values
    return (_pair(row0), _pair(row1))


def cond(pair: Pair, level: int) -> float:
    """Pick the conditional for parent level 1 or 0 from a (given-1, given-0) pair."""
    return pair[0] if level == 1 else pair[1]


def level_prob(p_one: float, level: int) -> float:
    """Probability of observing ``level`` for a variable with P(level 1) = ``p_one``."""
    return p_one if level == 1 else 1.0 - p_one


@dataclass(frozen=True)
class ProxyParams:
    """Full parameterization of the proxy graph (C causes D).

    Attributes:
        p_c: P(C=c).
        p_d_given: (P(D=d|C=c), P(D=d|C=c-bar)).
        p_a_given: (P(A=a|C=c), P(A=a|C=c-bar)).
        mu: 2x2 conditional outcome means, ``mu[i][j] = E[Y|A=i, C=j]``.
    """

    p_c: float
    p_d_given: Pair
    p_a_given: Pair
    mu: Matrix2

    def __post_init__(self):
        object.__setattr__(self, "p_c", float(self.p_c))
        object.__setattr__(self, "p_d_given", _pair(self.p_d_given))
        object.__setattr__(self, "p_a_given", _pair(self.p_a_given))
        object.__setattr__(self, "mu", _matrix(self.mu))

    @property
    def probabilities(self) -> tuple[float, ...]:
        return (self.p_c, *self.p_d_given, *self.p_a_given)


@dataclass(frozen=True)
class DriverParams:
    """Full parameterization of the driver graph (D causes C).

    Attributes:
        p_d: P(D=d).
        p_c_given: (P(C=c|D=d), P(C=c|D=d-bar)).
        p_a_given: (P(A=a|C=c), P(A=a|C=c-bar)).
        mu: 2x2 conditional outcome means, ``mu[i][j] = E[Y|A=i, C=j]``.
    """

    p_d: float
    p_c_given: Pair
    p_a_given: Pair
    mu: Matrix2

    def __post_init__(self):
        object.__setattr__(self, "p_d", float(self.p_d))
        object.__setattr__(self, "p_c_given", _pair(self.p_c_given))
        object.__setattr__(self, "p_a_given", _pair(self.p_a_given))
        object.__setattr__(self, "mu", _matrix(self.mu))

    @property
    def probabilities(self) -> tuple[float, ...]:
        return (self.p_d, *self.p_c_given, *self.p_a_given)


@dataclass(frozen=True)
class JointTable:
    """Exact joint distribution over (A, C, D) plus the outcome means.

    ``p[i, j, k] = P(A=i, C=j, D=k)``; entries are nonnegative and sum to 1.
    """

    p: np.ndarray
    mu: Matrix2

    def __post_init__(self):
        arr = np.asarray(self.p, dtype=float)
        if arr.shape != (2, 2, 2):
            raise ValueError(f"joint table must be 2x2x2, got shape {arr.shape}")
        if np.any(arr < 0.0) or abs(float(arr.sum()) - 1.0) > 1e-12:
            raise ValueError("joint table entries must be nonnegative and sum to 1")
        arr.flags.writeable = False
        object.__setattr__(self, "p", arr)
        object.__setattr__(self, "mu", _matrix(self.mu))


def validate(params: ProxyParams | DriverParams) -> None:
    """Check the type invariants, raising on the first violation.

    Raises:
        OutOfRange: a probability is not strictly inside (0, 1), or a value
            (including an outcome mean) is not finite.
        DegenerateProxy: the confounder and its companion are independent,
            i.e. P(D|c) = P(D|c-bar) for the proxy graph or
            P(C|d) = P(C|d-bar) for the driver graph.
    """
    for name in ("p_c", "p_d_given", "p_a_given", "p_d", "p_c_given"):
        value = getattr(params, name, None)
        if value is None:
            continue
        probs = value if isinstance(value, tuple) else (value,)
        for p in probs:
            if not math.isfinite(p) or not 0.0 < p < 1.0:
                raise OutOfRange(f"{name}={probs} must lie strictly inside (0, 1)")
    for row in params.mu:
        for m in row:
            if not math.isfinite(m):
                raise OutOfRange(f"mu={params.mu} must be finite")
    if isinstance(params, ProxyParams):
        if params.p_d_given[0] == params.p_d_given[1]:
            raise DegenerateProxy(
                f"P(d|c) = P(d|c-bar) = {params.p_d_given[0]}: D carries no information about C"
            )
    else:
        if params.p_c_given[0] == params.p_c_given[1]:
            raise DegenerateProxy(
                f"P(c|d) = P(c|d-bar) = {params.p_c_given[0]}: D has no influence on C"
            )


def sample_proxy(rng_seed: int) -> ProxyParams:
    """Draw a uniformly random proxy parameterization, deterministic in the seed.

    All nine free parameters (p_c, the two entries of p_d_given, the two of
    p_a_given, and the four outcome means) are drawn i.i.d. uniform on (0, 1),
    in the order (p_c, P(d|c), P(d|c-bar), P(a|c), P(a|c-bar), mu[0][0],
    mu[0][1], mu[1][0], mu[1][1]).  The measure-zero degenerate draw
    P(d|c) = P(d|c-bar) is rejected and redrawn.
    """
    rng = np.random.default_rng(rng_seed)
    while True:
        u = rng.random(9)
        if u[1] == u[2] or 0.0 in u:
            continue
        return ProxyParams(
            p_c=u[0],
            p_d_given=(u[1], u[2]),
            p_a_given=(u[3], u[4]),
            mu=((u[5], u[6]), (u[7], u[8])),
        )


def sample_driver(rng_seed: int) -> DriverParams:
    """Mirror of :func:`sample_proxy` for the driver graph."""
    rng = np.random.default_rng(rng_seed)
    while True:
        u = rng.random(9)
        if u[1] == u[2] or 0.0 in u:
            continue
        return DriverParams(
            p_d=u[0],
            p_c_given=(u[1], u[2]),
            p_a_given=(u[3], u[4]),
            mu=((u[5], u[6]), (u[7], u[8])),
        )


def to_proxy(params: DriverParams) -> ProxyParams:
    """Re-express a driver parameterization in proxy form.

    The two graphs can represent exactly the same joint distributions over
    (A, C, D, Y); only the factorization of p(C, D) differs.  Marginalizing
    and inverting gives

        p(C)    = p(C|d) p(d) + p(C|d-bar) p(d-bar)
        p(D|C)  = p(C|D) p(D) / p(C)

    while p(A|C) and the outcome means carry over unchanged.  The returned
    parameters induce the identical joint table.
    """
    validate(params)
    p_c_d, p_c_dbar = params.p_c_given
    p_d = params.p_d
    p_c = p_c_d * p_d + p_c_dbar * (1.0 - p_d)
    p_d_given_c = p_c_d * p_d / p_c
    p_d_given_cbar = (1.0 - p_c_d) * p_d / (1.0 - p_c)
    return ProxyParams(
        p_c=p_c,
        p_d_given=(p_d_given_c, p_d_given_cbar),
        p_a_given=params.p_a_given,
        mu=params.mu,
    )


def joint_table(params: ProxyParams | DriverParams) -> JointTable:
    """Multiply out the factorization into the exact 2x2x2 joint over (A, C, D)."""
    validate(params)
    p = np.empty((2, 2, 2))
    for a in (0, 1):
        for c in (0, 1):
            for d in (0, 1):
                p_a = level_prob(cond(params.p_a_given, c), a)
                if isinstance(params, ProxyParams):
                    cell = (
                        level_prob(params.p_c, c)
                        * level_prob(cond(params.p_d_given, c), d)
                        * p_a
                    )
                else:
                    cell = (
                        level_prob(params.p_d, d)
                        * level_prob(cond(params.p_c_given, d), c)
                        * p_a
                    )
                p[a, c, d] = cell
    return JointTable(p=p, mu=params.mu)
