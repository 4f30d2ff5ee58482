"""Command-line interface.

Subcommands: `reproduce` (recompute every published target and
pass/fail it), `tail`, `sensitivity`, `figure1`, `simulate`, and
`scenario validate`.  Exit status: 0 all good, 1 reproduction or
validation failure, 2 usage error.

Rates accept exact fraction literals ("26/1734") anywhere a number is
expected; truncating such a ratio to a decimal visibly shifts the fifth
digit of the headline tail probability.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import case_data, mixture, report
from ._backend import backend_name
from .exact_tests import fisher_one_sided, sensitivity_sweep
from .simulation import (
    SimConfig,
    simulate_allocation,
    simulate_mixture_tail,
    simulate_rate_ratio,
)

__all__ = ["main", "entry_point"]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class _UsageError(argparse.ArgumentTypeError):
    """Bad user input; argparse converts these to exit-status-2 errors
    when raised from a type callback."""


def _parse_rate(text: str) -> float:
    """A decimal or an exact integer ratio like 26/1734 (divided once,
    at double precision)."""
    text = text.strip()
    if "/" in text:
        num_str, _, den_str = text.partition("/")
        try:
            num = int(num_str)
            den = int(den_str)
        except ValueError:
            raise _UsageError(f"bad fraction literal {text!r}") from None
        if den == 0:
            raise _UsageError(f"zero denominator in {text!r}")
        return num / den
    try:
        return float(text)
    except ValueError:
        raise _UsageError(f"bad number {text!r}") from None


def _resolve_table(name_or_file: str):
    """A built-in table name, or a scenario file whose pooled table is used."""
    if Path(name_or_file).is_file():
        doc = case_data.load_scenario(name_or_file)
        return doc.scenario.to_table(), doc.scenario.name
    try:
        return case_data.builtin_table(name_or_file), name_or_file
    except KeyError:
        raise _UsageError(
            f"unknown table {name_or_file!r} (and no such file); built-ins: "
            + ", ".join(case_data.BUILTIN_TABLE_NAMES)
        ) from None


def _scenario_model(args) -> mixture.MixedPoissonModel:
    if getattr(args, "scenario", None):
        doc = case_data.load_scenario(args.scenario)
        return mixture.MixedPoissonModel.from_scenario(doc.scenario)
    return mixture.MixedPoissonModel.from_scenario(case_data.builtin_scenario("GGJ7"))


# --- subcommand handlers -----------------------------------------------------


def _cmd_reproduce(args) -> int:
    rpt = report.build_report(corrupt=args.corrupt_fixture)
    if args.with_simulation:
        sim = report.simulation_entries(seed=args.seed, reps=args.reps)
        rpt = report.ReproductionReport(entries=rpt.entries + sim)
    if not args.quiet:
        if args.format == "csv":
            sys.stdout.write(report.render_csv(rpt))
        elif args.format == "json":
            print(report.render_json(rpt))
        else:
            print(report.render_table(rpt))
    return EXIT_OK if rpt.all_passed else EXIT_FAILURE


def _cmd_tail(args) -> int:
    model = mixture.MixedPoissonModel(rho=args.rho, mu=args.mu, t=args.t)
    p = mixture.tail_probability(model, args.n)
    print(f"P(N >= {args.n}) = {p!r}")
    if args.check:
        quad = mixture.tail_probability_quadrature(model, args.n)
        print(f"quadrature cross-check = {quad!r}  (|diff| = {abs(p - quad):.3e})")
        config = SimConfig(replications=args.reps, seed=args.seed, model=model)
        est = simulate_mixture_tail(config, args.n)
        print(
            f"monte carlo ({est.replications} reps, seed {args.seed}) = "
            f"{est.point!r} +/- {est.std_error:.3e}"
        )
    return EXIT_OK


def _cmd_sensitivity(args) -> int:
    table, label = _resolve_table(args.table)
    rows = sensitivity_sweep(table, args.max_moved)
    if args.format == "csv":
        print("moved_out,p_value,inverse_p,inverse_p_rounded")
        for row in rows:
            print(f"{row.moved_out},{row.p_value!r},{row.inverse_p!r},{row.inverse_p_rounded}")
    elif args.format == "json":
        print(
            json.dumps(
                {
                    "table": label,
                    "rows": [
                        {
                            "moved_out": row.moved_out,
                            "p_value": row.p_value,
                            "inverse_p": row.inverse_p,
                            "inverse_p_rounded": row.inverse_p_rounded,
                        }
                        for row in rows
                    ],
                },
                indent=2,
            )
        )
    else:
        print(f"one-sided exact p-values for {label} "
              f"(k incidents postulated outside the suspect's shifts)")
        print(f"{'k':>2}  {'p-value':>22}  {'1/p':>22}  {'1/p (int)':>12}")
        for row in rows:
            print(
                f"{row.moved_out:>2}  {row.p_value:>22.15g}  "
                f"{row.inverse_p:>22.14g}  {row.inverse_p_rounded:>12}"
            )
    return EXIT_OK


def _cmd_figure1(args) -> int:
    model = _scenario_model(args)
    curve = mixture.tail_curve(model, args.k_max)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "model": {"rho": model.rho, "mu": model.mu, "t": model.t},
                    "rows": [{"k": k, "tail_probability": p} for k, p in curve],
                },
                indent=2,
            )
        )
    else:
        print("k,tail_probability")
        for k, p in curve:
            print(f"{k},{p!r}")
    return EXIT_OK


def _cmd_simulate_mixture(args) -> int:
    model = mixture.MixedPoissonModel(rho=args.rho, mu=args.mu, t=args.t)
    config = SimConfig(replications=args.reps, seed=args.seed, model=model)
    est = simulate_mixture_tail(config, args.n)
    analytic = mixture.tail_probability(model, args.n)
    print(f"simulated P(N >= {args.n}) = {est.point!r} +/- {est.std_error:.3e}")
    print(f"analytic  P(N >= {args.n}) = {analytic!r}")
    return EXIT_OK


def _cmd_simulate_rate_ratio(args) -> int:
    model = mixture.MixedPoissonModel(rho=1.0, mu=args.mu, t=1.0)
    config = SimConfig(replications=args.reps, seed=args.seed, model=model)
    est = simulate_rate_ratio(config, args.k)
    analytic = mixture.rate_ratio_exceedance(args.k)
    print(f"simulated P(ratio >= {args.k}) = {est.point!r} +/- {est.std_error:.3e}")
    print(f"analytic  2/(k+1)            = {analytic!r}")
    return EXIT_OK


def _cmd_simulate_allocation(args) -> int:
    table, label = _resolve_table(args.table)
    observed = args.observed if args.observed is not None else table.suspect_with
    config = SimConfig(
        replications=args.reps, seed=args.seed, model=table.hypergeom_params()
    )
    est = simulate_allocation(config, observed)
    analytic = fisher_one_sided(table) if observed == table.suspect_with else None
    print(
        f"simulated P(count >= {observed}) on {label} = "
        f"{est.point!r} +/- {est.std_error:.3e}"
    )
    if analytic is not None:
        print(f"exact one-sided p-value                  = {analytic!r}")
    return EXIT_OK


def _cmd_scenario_validate(args) -> int:
    if args.file is None:
        findings = case_data.consistency_report()
        header = "built-in case data"
    else:
        doc = case_data.load_scenario(args.file)
        findings = case_data.validate_document(doc)
        header = f"scenario {doc.scenario.name!r} ({args.file})"
    if not args.quiet:
        print(f"validation of {header}:")
        for finding in findings:
            print(f"  [{finding.level}] {finding.message}")
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def _add_sim_args(parser, default_reps=100_000):
    parser.add_argument("--reps", type=int, default=default_reps,
                        help="Monte Carlo replications")
    parser.add_argument("--seed", type=int, default=report.DEFAULT_SIM_SEED,
                        help="64-bit RNG seed")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftstats",
        description="Overdispersed incident-count models and exact-test "
                    "sensitivity analysis for shift/incident data.",
    )
    parser.add_argument(
        "--backend-info", action="store_true",
        help="print the active kernel backend and exit",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("reproduce", help="recompute every published target and "
                                         "report pass/fail per entry")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--with-simulation", action="store_true",
                   help="append seeded Monte Carlo concordance entries")
    p.add_argument("--quiet", action="store_true", help="suppress output; exit status only")
    p.add_argument("--corrupt-fixture", action="store_true",
                   help="negative control: damage the built-in fixtures so the "
                        "matching entries must fail")
    _add_sim_args(p, default_reps=report.DEFAULT_SIM_REPS)
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser("tail", help="P(N >= n) for a mixed-Poisson model")
    p.add_argument("--mu", type=_parse_rate, required=True,
                   help="mean incidents per shift (decimal or fraction like 26/1734)")
    p.add_argument("--t", type=_parse_rate, required=True, help="number of shifts")
    p.add_argument("--rho", type=_parse_rate, default=1.0,
                   help="intensity Gamma shape (default 1: exponential)")
    p.add_argument("--n", type=int, required=True, help="incident count threshold")
    p.add_argument("--check", action="store_true",
                   help="also print the quadrature cross-check and a Monte Carlo estimate")
    _add_sim_args(p)
    p.set_defaults(func=_cmd_tail)

    p = sub.add_parser("sensitivity",
                       help="exact-test sweep over postulated extra incidents")
    p.add_argument("table", help="built-in table name (e.g. jkz-original) or scenario file")
    p.add_argument("--max-moved", type=int, default=8,
                   help="largest number of postulated incidents (default 8)")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=_cmd_sensitivity)

    p = sub.add_parser("figure1", help="tail-curve data P(N >= k), k = 1..k-max")
    p.add_argument("--k-max", type=int, default=14)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--scenario", help="scenario file (default: built-in GGJ7)")
    p.set_defaults(func=_cmd_figure1)

    p = sub.add_parser("simulate", help="seeded Monte Carlo estimators")
    sim_sub = p.add_subparsers(dest="sim_command")

    q = sim_sub.add_parser("mixture", help="tail of the mixed-Poisson count")
    q.add_argument("--mu", type=_parse_rate, required=True)
    q.add_argument("--t", type=_parse_rate, required=True)
    q.add_argument("--rho", type=_parse_rate, default=1.0)
    q.add_argument("--n", type=int, required=True)
    _add_sim_args(q)
    q.set_defaults(func=_cmd_simulate_mixture)

    q = sim_sub.add_parser("rate-ratio",
                           help="chance one nurse's rate is >= k times another's")
    q.add_argument("--k", type=_parse_rate, required=True)
    q.add_argument("--mu", type=_parse_rate, default=1.0)
    _add_sim_args(q)
    q.set_defaults(func=_cmd_simulate_rate_ratio)

    q = sim_sub.add_parser("allocation",
                           help="shift-allocation null on a 2x2 table")
    q.add_argument("table", help="built-in table name or scenario file")
    q.add_argument("--observed", type=int, default=None,
                   help="threshold count (default: the table's suspect count)")
    _add_sim_args(q)
    q.set_defaults(func=_cmd_simulate_allocation)

    p = sub.add_parser("scenario", help="scenario document tools")
    scen_sub = p.add_subparsers(dest="scenario_command")
    q = scen_sub.add_parser("validate",
                            help="validate a scenario file, or cross-check the "
                                 "built-in case data when no file is given")
    q.add_argument("file", nargs="?", default=None)
    q.add_argument("--quiet", action="store_true")
    q.set_defaults(func=_cmd_scenario_validate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.backend_info:
        print(f"kernel backend: {backend_name()}")
        return EXIT_OK
    if not hasattr(args, "func"):
        parser.print_help()
        return EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"shiftstats: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (case_data.ScenarioParseError, case_data.ScenarioValidationError) as exc:
        print(f"shiftstats: invalid scenario: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (ValueError, KeyError, OSError) as exc:
        print(f"shiftstats: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
