"""Acceptance suite: every release criterion at its pinned tolerance.

Each test prints one `[criterion NN] PASS/FAIL` line (visible with
`pytest -s tests/test_acceptance.py`).  Monte Carlo criteria use fixed
seeds and 4-standard-error bands (false-alarm odds below 1 in 15 000
per assertion were a seed ever redrawn).  The stated runtime bounds
assume the compiled kernel backend, which is built on install.
"""

import math
import random
import subprocess
import sys
import time
from contextlib import contextmanager

from shiftstats import case_data as cd
from shiftstats.exact_tests import fisher_one_sided, sensitivity_sweep
from shiftstats.mixture import (
    MixedPoissonModel,
    count_variance,
    expected_count,
    rate_ratio_exceedance,
    tail_curve,
    tail_probability,
    tail_probability_quadrature,
)
from shiftstats.numerics import reg_lower_incomplete_gamma
from shiftstats.simulation import (
    SimConfig,
    simulate_allocation,
    simulate_mixture_tail,
    simulate_rate_ratio,
)
from shiftstats.targets import INVERSE_P_VALUES, TAIL_CURVE_VALUES

GGJ7_MODEL = MixedPoissonModel(rho=1.0, mu=26 / 1734, t=203.0)
GGJ13_MODEL = MixedPoissonModel(rho=1.0, mu=30 / 1734, t=203.0)


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"[criterion {number:02d}] FAIL  {description}")
        raise
    print(f"[criterion {number:02d}] PASS  {description}")


def test_criterion_01_headline_tail():
    with criterion(1, "P(N >= 7) = 0.13690 +/- 5e-6 on the GGJ7 model"):
        assert abs(tail_probability(GGJ7_MODEL, 7) - 0.13690) <= 5e-6


def test_criterion_02_unfavorable_tail():
    with criterion(2, "P(N >= 13) = 0.03850 +/- 5e-5 on the GGJ13 model"):
        assert abs(tail_probability(GGJ13_MODEL, 13) - 0.03850) <= 5e-5


def test_criterion_03_expected_count():
    with criterion(3, "expected count 203*26/1734 = 3.04383 +/- 1e-5"):
        assert abs(expected_count(GGJ7_MODEL) - 3.04383) <= 1e-5


def test_criterion_04_tail_curve():
    with criterion(4, "all 14 published tail-curve values within 1e-10"):
        curve = tail_curve(GGJ7_MODEL, 14)
        for got, expected in zip(curve.probabilities, TAIL_CURVE_VALUES):
            assert abs(got - expected) <= 1e-10


def test_criterion_05_sensitivity_sweep():
    with criterion(5, "9 published inverse p-values within 0.1%, under 1 s"):
        start = time.perf_counter()
        rows = sensitivity_sweep(cd.builtin_table("jkz-original"), 8)
        elapsed = time.perf_counter() - start
        for row, expected in zip(rows, INVERSE_P_VALUES):
            assert abs(row.inverse_p - expected) <= 1e-3 * expected
        assert elapsed < 1.0


def test_criterion_06_rate_ratio_identity():
    with criterion(6, "rate-ratio exceedance 2/(k+1): exact at k=2, MC 4 SE, < 5 s"):
        start = time.perf_counter()
        assert rate_ratio_exceedance(2.0) == 2.0 / 3.0
        config = SimConfig(replications=1_000_000, seed=20100808, model=GGJ7_MODEL)
        est = simulate_rate_ratio(config, 2.0)
        assert abs(est.point - 2.0 / 3.0) <= 4.0 * est.std_error
        assert time.perf_counter() - start < 5.0


def test_criterion_07_closed_form_vs_quadrature():
    with criterion(7, "closed form vs mixing-integral quadrature <= 1e-8, n = 1..20"):
        for n in range(1, 21):
            diff = abs(
                tail_probability(GGJ7_MODEL, n)
                - tail_probability_quadrature(GGJ7_MODEL, n)
            )
            assert diff <= 1e-8


def test_criterion_08_poisson_tail_identity():
    with criterion(8, "incomplete-gamma tail vs direct summation <= 1e-10, 200 cases"):
        rng = random.Random(20257)
        for _ in range(200):
            n = rng.randint(1, 30)
            mean = rng.uniform(1e-3, 50.0)
            total = 0.0
            term = math.exp(-mean)
            for k in range(n):
                total += term
                term *= mean / (k + 1)
            direct = 1.0 - total
            assert abs(reg_lower_incomplete_gamma(float(n), mean) - direct) <= 1e-10


def test_criterion_09_monte_carlo_concordance():
    with criterion(9, "1e6-rep simulations within 4 SE of analytic, < 30 s total"):
        start = time.perf_counter()
        config = SimConfig(replications=1_000_000, seed=16180339, model=GGJ7_MODEL)
        for n in (1, 7, 13):
            est = simulate_mixture_tail(config, n)
            analytic = tail_probability(GGJ7_MODEL, n)
            assert abs(est.point - analytic) <= 4.0 * est.std_error
        table = cd.builtin_table("jkz-corrected")
        alloc = SimConfig(
            replications=1_000_000, seed=16180339, model=table.hypergeom_params()
        )
        est = simulate_allocation(alloc, table.suspect_with)
        assert abs(est.point - fisher_one_sided(table)) <= 4.0 * est.std_error
        assert time.perf_counter() - start < 30.0


def test_criterion_10_overdispersion():
    with criterion(10, "variance exceeds mean for 100 random models; exact at rho=1"):
        rng = random.Random(6022)
        for _ in range(100):
            model = MixedPoissonModel(
                rho=rng.uniform(0.05, 200.0),
                mu=rng.uniform(1e-5, 4.0),
                t=rng.uniform(0.5, 2000.0),
            )
            assert count_variance(model) > expected_count(model)
        tmu = GGJ7_MODEL.t * GGJ7_MODEL.mu
        assert abs(count_variance(GGJ7_MODEL) - (tmu + tmu * tmu)) <= 1e-10


def test_criterion_11_data_fixtures():
    with criterion(11, "ward sums, ledger flags, containment, and the flagged discrepancy"):
        for variant in cd.Variant:
            records = [r for r in cd.builtin_ward_tables() if r.variant is variant]
            assert sum(r.table.total_shifts for r in records) == 1734
        corrected = [
            r for r in cd.builtin_ward_tables() if r.variant is cd.Variant.CORRECTED
        ]
        assert sum(r.table.total_incidents for r in corrected) == 26
        assert cd.ledger_set_size(cd.IncidentSet.GGJ7) == 7
        for entry in cd.builtin_ledger():
            if cd.IncidentSet.GGJ7 in entry.in_sets:
                assert cd.IncidentSet.GGJ13 in entry.in_sets
        # `scenario validate` flags (not fixes) the 9-vs-7 suspect count
        out = subprocess.run(
            [sys.executable, "-m", "shiftstats.cli", "scenario", "validate"],
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0, out.stderr
        assert "[warning]" in out.stdout
        assert "9 incidents" in out.stdout and "7" in out.stdout


def test_criterion_12_end_to_end_reproduce():
    with criterion(12, "`reproduce` exits 0 with 26/26; corrupted fixture exits nonzero"):
        out = subprocess.run(
            [sys.executable, "-m", "shiftstats.cli", "reproduce"],
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0, out.stdout + out.stderr
        assert "26/26 targets reproduced" in out.stdout
        corrupted = subprocess.run(
            [sys.executable, "-m", "shiftstats.cli", "reproduce", "--corrupt-fixture"],
            capture_output=True,
            text=True,
        )
        assert corrupted.returncode != 0
        assert "FAIL" in corrupted.stdout
