"""Effect measures and monotonicity diagnostics under a mismeasured binary confounder.

The package computes, in closed form, the true / partially adjusted / crude
risk differences of a binary treatment when the binary confounder is only
seen through a binary proxy (or acts through a binary driver), classifies
the monotonicity directions that govern how those measures order, and
reproduces the randomized-parameterization study behind those orderings.
"""

from .errors import (
    ConfounderLabError,
    DegenerateProxy,
    EmptyInput,
    EmptyStratum,
    InvalidDocument,
    MuOutOfRange,
    OutOfRange,
)
from .model import (
    DriverParams,
    JointTable,
    ProxyParams,
    joint_table,
    sample_driver,
    sample_proxy,
    to_proxy,
    validate,
)
from .effects import (
    ArmPair,
    DerivedConditionals,
    EffectSummary,
    cond_mean_y_ad,
    derived_conditionals,
    e_y_do,
    posterior_c,
    posterior_c_sigmoid,
    rd_crude,
    rd_obs,
    rd_true,
    s_values,
    summarize,
)
from .monotonicity import (
    BoundSide,
    Direction,
    MonotonicityReport,
    bounds_verdict,
    check_thm2,
    check_thm3,
    check_thm4,
    check_thm5_mirror,
    direction_of,
    in_between,
    report,
    sample_constrained,
)
from .mc import ExperimentSummary, FigureStats, RunRecord, figure_stats, run_experiment, youden
from .estimate import (
    EmpiricalRds,
    PopulationEstimates,
    SampleDataset,
    TransportReport,
    empirical_rds,
    estimate_population,
    generate,
    ingest,
    transport,
)

__version__ = "0.1.0"

__all__ = [
    "ConfounderLabError",
    "DegenerateProxy",
    "EmptyInput",
    "EmptyStratum",
    "InvalidDocument",
    "MuOutOfRange",
    "OutOfRange",
    "ProxyParams",
    "DriverParams",
    "JointTable",
    "validate",
    "sample_proxy",
    "sample_driver",
    "to_proxy",
    "joint_table",
    "ArmPair",
    "EffectSummary",
    "DerivedConditionals",
    "posterior_c",
    "posterior_c_sigmoid",
    "cond_mean_y_ad",
    "rd_true",
    "rd_obs",
    "rd_crude",
    "s_values",
    "e_y_do",
    "derived_conditionals",
    "summarize",
    "Direction",
    "BoundSide",
    "MonotonicityReport",
    "direction_of",
    "report",
    "check_thm2",
    "check_thm3",
    "check_thm4",
    "check_thm5_mirror",
    "sample_constrained",
    "in_between",
    "bounds_verdict",
    "RunRecord",
    "ExperimentSummary",
    "FigureStats",
    "run_experiment",
    "figure_stats",
    "youden",
    "SampleDataset",
    "PopulationEstimates",
    "EmpiricalRds",
    "TransportReport",
    "ingest",
    "estimate_population",
    "empirical_rds",
    "generate",
    "transport",
    "__version__",
]
