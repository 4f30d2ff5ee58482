"""Reproduction report: recompute every published target from the
built-in case data and compare at its declared tolerance."""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import case_data, mixture, targets
from .exact_tests import sensitivity_sweep
from .simulation import SimConfig, simulate_allocation, simulate_mixture_tail, simulate_rate_ratio

__all__ = [
    "ReportEntry",
    "ReproductionReport",
    "build_report",
    "render_table",
    "render_csv",
    "render_json",
    "DEFAULT_SIM_SEED",
    "DEFAULT_SIM_REPS",
]

DEFAULT_SIM_SEED = 424242
DEFAULT_SIM_REPS = 1_000_000


@dataclass(frozen=True)
class ReportEntry:
    label: str
    computed: float
    expected: float
    tolerance: float
    mode: str
    passed: bool


@dataclass(frozen=True)
class ReproductionReport:
    entries: tuple[ReportEntry, ...]

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> tuple[ReportEntry, ...]:
        return tuple(e for e in self.entries if not e.passed)


def _computed_values(corrupt: bool) -> dict[str, float]:
    """Every target key mapped to its freshly computed value.

    `corrupt` swaps the built-in fixtures for deliberately damaged ones
    (one extra incident everywhere): the negative control proving the
    comparison actually bites.
    """
    ggj7 = case_data.builtin_scenario("GGJ7")
    ggj13 = case_data.builtin_scenario("GGJ13")
    jkz_original = case_data.builtin_table("jkz-original")
    if corrupt:
        ggj7 = case_data.CaseScenario(
            "GGJ7-corrupt",
            ggj7.suspect_shifts,
            ggj7.suspect_incidents,
            ggj7.total_shifts,
            ggj7.total_incidents + 1,
        )
        ggj13 = case_data.CaseScenario(
            "GGJ13-corrupt",
            ggj13.suspect_shifts,
            ggj13.suspect_incidents,
            ggj13.total_shifts,
            ggj13.total_incidents + 1,
        )
        jkz_original = case_data.ContingencyTable(
            jkz_original.suspect_with,
            jkz_original.suspect_without,
            jkz_original.others_with + 1,
            jkz_original.others_without - 1,
        )

    model7 = mixture.MixedPoissonModel.from_scenario(ggj7)
    model13 = mixture.MixedPoissonModel.from_scenario(ggj13)
    values: dict[str, float] = {}

    curve = mixture.tail_curve(model7, len(targets.TAIL_CURVE_VALUES))
    for k, p in curve:
        values[f"tail_curve:{k}"] = p

    rows = sensitivity_sweep(jkz_original, len(targets.INVERSE_P_VALUES) - 1)
    for row in rows:
        values[f"inverse_p:{row.moved_out}"] = row.inverse_p

    values["expected_count"] = mixture.expected_count(model7)
    values["unfavorable_tail"] = mixture.tail_probability(model13, 13)
    values["rate_ratio:2"] = mixture.rate_ratio_exceedance(2.0)
    return values


def build_report(corrupt: bool = False) -> ReproductionReport:
    """Compare all analytic targets against fresh computations."""
    values = _computed_values(corrupt)
    entries = tuple(
        ReportEntry(
            label=t.label,
            computed=values[t.key],
            expected=t.expected,
            tolerance=t.tolerance,
            mode=t.mode,
            passed=t.check(values[t.key]),
        )
        for t in targets.TARGETS
    )
    return ReproductionReport(entries=entries)


def simulation_entries(
    seed: int = DEFAULT_SIM_SEED, reps: int = DEFAULT_SIM_REPS
) -> tuple[ReportEntry, ...]:
    """Monte Carlo concordance entries: each simulated probability must
    land within 4 standard errors of its analytic value."""
    ggj7 = case_data.builtin_scenario("GGJ7")
    model = mixture.MixedPoissonModel.from_scenario(ggj7)
    config = SimConfig(replications=reps, seed=seed, model=model)
    entries = []

    for n in (1, 7, 13):
        analytic = mixture.tail_probability(model, n)
        est = simulate_mixture_tail(config, n)
        entries.append(
            ReportEntry(
                label=f"simulated tail P(N >= {n}) vs analytic (4 SE)",
                computed=est.point,
                expected=analytic,
                tolerance=4.0 * est.std_error,
                mode=targets.ABS,
                passed=abs(est.point - analytic) <= 4.0 * est.std_error,
            )
        )

    est = simulate_rate_ratio(config, 2.0)
    analytic = mixture.rate_ratio_exceedance(2.0)
    entries.append(
        ReportEntry(
            label="simulated rate-ratio exceedance at k=2 vs 2/3 (4 SE)",
            computed=est.point,
            expected=analytic,
            tolerance=4.0 * est.std_error,
            mode=targets.ABS,
            passed=abs(est.point - analytic) <= 4.0 * est.std_error,
        )
    )

    from .exact_tests import fisher_one_sided

    jkz_corrected = case_data.builtin_table("jkz-corrected")
    analytic = fisher_one_sided(jkz_corrected)
    alloc_config = SimConfig(
        replications=reps, seed=seed, model=jkz_corrected.hypergeom_params()
    )
    est = simulate_allocation(alloc_config, jkz_corrected.suspect_with)
    entries.append(
        ReportEntry(
            label="simulated allocation p-value, JKZ corrected vs exact (4 SE)",
            computed=est.point,
            expected=analytic,
            tolerance=4.0 * est.std_error,
            mode=targets.ABS,
            passed=abs(est.point - analytic) <= 4.0 * est.std_error,
        )
    )
    return tuple(entries)


def render_table(report: ReproductionReport) -> str:
    label_width = max(len(e.label) for e in report.entries)
    lines = [
        f"{'target':<{label_width}}  {'computed':>18}  {'reference':>14}  "
        f"{'tolerance':>12}  result"
    ]
    for e in report.entries:
        tol = f"{e.tolerance:.1e}" + ("rel" if e.mode == targets.REL else "")
        lines.append(
            f"{e.label:<{label_width}}  {e.computed:>18.12g}  {e.expected:>14.10g}  "
            f"{tol:>12}  {'pass' if e.passed else 'FAIL'}"
        )
    passed = sum(e.passed for e in report.entries)
    lines.append(f"{passed}/{len(report.entries)} targets reproduced")
    return "\n".join(lines)


def render_csv(report: ReproductionReport) -> str:
    lines = ["label,computed,expected,tolerance,mode,passed"]
    for e in report.entries:
        label = '"' + e.label.replace('"', '""') + '"'
        lines.append(
            f"{label},{e.computed!r},{e.expected!r},{e.tolerance!r},{e.mode},"
            f"{str(e.passed).lower()}"
        )
    return "\n".join(lines) + "\n"


def render_json(report: ReproductionReport) -> str:
    payload = {
        "targets_version": targets.TARGETS_VERSION,
        "all_passed": report.all_passed,
        "entries": [
            {
                "label": e.label,
                "computed": e.computed,
                "expected": e.expected,
                "tolerance": e.tolerance,
                "mode": e.mode,
                "passed": e.passed,
            }
            for e in report.entries
        ],
    }
    return json.dumps(payload, indent=2)
