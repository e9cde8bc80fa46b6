"""Command-line entry point.

Subcommands: analyze, simulate, verify, estimate, transport, generate.
All JSON documents carry ``"schema": "v1"``.  Exit codes: 0 success,
1 property-suite violations (verify only), 2 input or validation error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import estimate as est_mod
from . import mc
from .effects import summarize
from .errors import ConfounderLabError, InvalidDocument
from .model import DriverParams, ProxyParams, sample_driver, sample_proxy, to_proxy, validate
from .monotonicity import (
    bounds_verdict,
    in_between,
    is_monotone,
    direction_sign,
    report,
    sample_constrained,
)

SCHEMA = "v1"


def _print_json(payload: dict) -> None:
    payload = {"schema": SCHEMA, **payload}
    print(json.dumps(payload, indent=2))


def params_to_dict(params: ProxyParams | DriverParams) -> dict:
    if isinstance(params, ProxyParams):
        return {
            "graph": "proxy",
            "p_c": params.p_c,
            "p_d_given_c": list(params.p_d_given),
            "p_a_given_c": list(params.p_a_given),
            "mu": [list(row) for row in params.mu],
        }
    return {
        "graph": "driver",
        "p_d": params.p_d,
        "p_c_given_d": list(params.p_c_given),
        "p_a_given_c": list(params.p_a_given),
        "mu": [list(row) for row in params.mu],
    }


def params_from_dict(doc: dict) -> ProxyParams | DriverParams:
    try:
        graph = doc["graph"]
        if graph == "proxy":
            params = ProxyParams(
                p_c=doc["p_c"],
                p_d_given=tuple(doc["p_d_given_c"]),
                p_a_given=tuple(doc["p_a_given_c"]),
                mu=tuple(tuple(row) for row in doc["mu"]),
            )
        elif graph == "driver":
            params = DriverParams(
                p_d=doc["p_d"],
                p_c_given=tuple(doc["p_c_given_d"]),
                p_a_given=tuple(doc["p_a_given_c"]),
                mu=tuple(tuple(row) for row in doc["mu"]),
            )
        else:
            raise InvalidDocument(f'graph must be "proxy" or "driver", got {graph!r}')
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidDocument):
            raise
        raise InvalidDocument(f"malformed parameter document: {exc}") from exc
    validate(params)
    return params


def load_params(path: str) -> ProxyParams | DriverParams:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidDocument(f"{path} is not valid JSON: {exc}") from exc
    return params_from_dict(doc)


def _read_data_csv(path: str) -> list[tuple[float, float, float]]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["a", "d", "y"]:
            raise InvalidDocument(f"{path} must start with header a,d,y")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                rows.append((float(row[0]), float(row[1]), float(row[2])))
            except (ValueError, IndexError) as exc:
                raise InvalidDocument(f"{path}:{lineno}: bad row {row!r}") from exc
    return rows


def cmd_analyze(args) -> int:
    params = load_params(args.params)
    summary = summarize(params)
    rep = report(params)
    verdict = bounds_verdict(params)
    _print_json(
        {
            "params": params_to_dict(params),
            "effects": {
                "rd_true": summary.rd_true,
                "rd_obs": summary.rd_obs,
                "rd_crude": summary.rd_crude,
                "e_y_do_a": summary.e_y_do.a,
                "e_y_do_abar": summary.e_y_do.a_bar,
                "s_a": summary.s.a,
                "s_abar": summary.s.a_bar,
            },
            "monotonicity": {
                "y_in_d": rep.y_in_d.value,
                "y_in_c": rep.y_in_c.value,
                "a_in_d": rep.a_in_d.value,
                "a_in_c": rep.a_in_c.value,
            },
            "in_between": in_between(summary, args.tol),
            "bounds_verdict": {"s_a": verdict[0].value, "s_abar": verdict[1].value},
        }
    )
    return 0


def cmd_simulate(args) -> int:
    summary, records = mc.run_experiment(args.n, args.seed)
    mc.write_csv(records, args.out)
    doc = {"schema": SCHEMA, **summary.to_dict()}
    if args.summary:
        with open(args.summary, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    else:
        print(json.dumps(doc, indent=2))
    return 0


def _alignment(y_dir, a_dir) -> str:
    if not is_monotone(y_dir) or not is_monotone(a_dir):
        return "none"
    sy, sa = direction_sign(y_dir), direction_sign(a_dir)
    if sy == 0 or sa == 0:
        return "degenerate"
    return "same" if sy == sa else "opposite"


def _verify_suite(suite: str, n: int, seed: int, tol: float, corrupt: bool):
    violations = 0
    first = None

    def flag(params, bad: bool):
        nonlocal violations, first
        if corrupt:
            bad = not bad
        if bad:
            violations += 1
            if first is None:
                first = params

    for i in range(n):
        s = mc.run_seed(seed, i)
        if suite == "thm1":
            params = sample_proxy(s)
            rep = report(params)
            flag(params, is_monotone(rep.y_in_d) != is_monotone(rep.y_in_c))
        elif suite == "cor1":
            params = sample_proxy(s)
            rep = report(params)
            if is_monotone(rep.y_in_d):
                flag(params, not in_between(summarize(params), tol))
        elif suite in ("thm2", "thm3", "thm4", "thm5"):
            params = sample_constrained(s, suite)
            eff = summarize(params)
            if suite == "thm2":
                ok = eff.rd_crude >= eff.rd_obs - tol and eff.rd_obs >= eff.rd_true - tol
            elif suite == "thm3":
                ok = eff.rd_crude <= eff.rd_obs + tol and eff.rd_obs <= eff.rd_true + tol
            elif suite == "thm4":
                ok = eff.rd_crude >= eff.rd_true - tol and eff.rd_obs >= eff.rd_true - tol
            else:
                ok = eff.rd_crude <= eff.rd_true + tol and eff.rd_obs <= eff.rd_true + tol
            flag(params, not ok)
        elif suite == "driver":
            params = sample_driver(s)
            eff = summarize(params)
            eff2 = summarize(to_proxy(params))
            same = (
                abs(eff.rd_true - eff2.rd_true) <= tol
                and abs(eff.rd_obs - eff2.rd_obs) <= tol
                and abs(eff.rd_crude - eff2.rd_crude) <= tol
            )
            rep = report(params)
            aligned_match = _alignment(rep.y_in_d, rep.a_in_d) == _alignment(
                rep.y_in_c, rep.a_in_c
            )
            cor3_ok = True
            klass = _alignment(rep.y_in_d, rep.a_in_d)
            if klass == "same":
                cor3_ok = eff.rd_obs >= eff.rd_true - tol
            elif klass == "opposite":
                cor3_ok = eff.rd_obs <= eff.rd_true + tol
            flag(params, not (same and aligned_match and cor3_ok))
        elif suite == "bounds":
            params = sample_proxy(s) if i % 2 == 0 else sample_driver(s)
            eff = summarize(params)
            v_a, v_abar = bounds_verdict(params)
            ok_a = (
                eff.s.a >= eff.e_y_do.a - tol
                if v_a.value == "upper"
                else eff.s.a <= eff.e_y_do.a + tol
            )
            ok_abar = (
                eff.s.a_bar >= eff.e_y_do.a_bar - tol
                if v_abar.value == "upper"
                else eff.s.a_bar <= eff.e_y_do.a_bar + tol
            )
            flag(params, not (ok_a and ok_abar))
        else:
            raise InvalidDocument(f"unknown suite {suite!r}")
    return violations, first


def cmd_verify(args) -> int:
    violations, first = _verify_suite(args.suite, args.n, args.seed, args.tol, args.corrupt)
    print(f"suite={args.suite} n={args.n} seed={args.seed} violations={violations}")
    if violations:
        print("first counterexample: " + json.dumps(params_to_dict(first)))
        return 1
    return 0


def cmd_estimate(args) -> int:
    ds = est_mod.ingest(_read_data_csv(args.data))
    pop = est_mod.estimate_population(ds)
    rds = est_mod.empirical_rds(pop)
    y_dir = est_mod.y_direction(pop)
    a_dir = est_mod.a_direction(pop)
    _print_json(
        {
            "n_total": ds.n_total,
            "stratum_n": [list(row) for row in pop.n],
            "e_y_ad": [list(row) for row in pop.e_y_ad],
            "e_a_d": list(pop.e_a_d),
            "p_d": pop.p_d,
            "rd_obs": rds.rd_obs,
            "rd_crude": rds.rd_crude,
            "y_in_d": y_dir.value,
            "a_in_d": a_dir.value,
            "inference": est_mod.in_between_inference(rds, y_dir),
        }
    )
    return 0


def cmd_transport(args) -> int:
    pops = []
    for path in (args.pop1, args.pop2):
        pops.append(est_mod.estimate_population(est_mod.ingest(_read_data_csv(path))))
    rep = est_mod.transport(pops[0], pops[1])
    _print_json(
        {
            "e_y_ad": [list(row) for row in rep.e_y_ad],
            "e_a_d": list(rep.e_a_d),
            "y_in_d": rep.y_direction.value,
            "a_in_d": rep.a_direction.value,
            "verdict": rep.verdict,
        }
    )
    return 0


def cmd_generate(args) -> int:
    params = load_params(args.params)
    rows = est_mod.generate(params, args.n, args.seed)
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(("a", "d", "y"))
        for a, d, y in rows:
            writer.writerow((int(a), int(d), int(y) if y == int(y) else repr(y)))
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confounder-lab",
        description="Effect measures and monotonicity diagnostics for a mismeasured binary confounder.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="effect summary and direction report for one parameter file")
    p.add_argument("--params", required=True, help="JSON parameter document")
    p.add_argument("--tol", type=float, default=1e-12, help="tolerance for the in-between check")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("simulate", help="randomized parameterization study; writes CSV and summary JSON")
    p.add_argument("--n", type=_positive_int, default=10000)
    p.add_argument("--seed", type=_nonneg_int, default=0)
    p.add_argument("--out", required=True, help="per-run CSV output path")
    p.add_argument("--summary", help="summary JSON output path (stdout when omitted)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run a property suite; exit 0 iff zero violations")
    p.add_argument(
        "--suite",
        required=True,
        choices=("thm1", "cor1", "thm2", "thm3", "thm4", "thm5", "driver", "bounds"),
    )
    p.add_argument("--n", type=_positive_int, default=10000)
    p.add_argument("--seed", type=_nonneg_int, default=0)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("estimate", help="plug-in estimates and sign inference from an a,d,y CSV")
    p.add_argument("--data", required=True)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("transport", help="combine two population samples into third-population conclusions")
    p.add_argument("--pop1", required=True, help="CSV for the population sharing the outcome mechanism")
    p.add_argument("--pop2", required=True, help="CSV for the population sharing the treatment mechanism")
    p.set_defaults(func=cmd_transport)

    p = sub.add_parser("generate", help="simulate an a,d,y CSV from a parameter file")
    p.add_argument("--params", required=True)
    p.add_argument("--n", type=_positive_int, default=10000)
    p.add_argument("--seed", type=_nonneg_int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfounderLabError as exc:
        print(
            json.dumps(
                {"schema": SCHEMA, "error": type(exc).__name__, "message": str(exc)}
            ),
            file=sys.stderr,
        )
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
