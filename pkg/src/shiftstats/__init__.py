"""Overdispersed incident-count models, one-sided exact tests, and their
Monte Carlo verification, with the case data that motivated them built in.

Hot kernels (special functions and simulation loops) live in a compiled
extension with a pure-Python fallback selected at import; see
`backend_name`.
"""

from ._backend import backend_name
from .case_data import (
    CaseScenario,
    IncidentLedgerEntry,
    IncidentSet,
    Variant,
    Ward,
    WardRecord,
    aggregate,
    builtin_ledger,
    builtin_scenario,
    builtin_table,
    builtin_ward_tables,
    consistency_report,
    load_scenario,
    parse_scenario,
    save_scenario,
)
from .distributions import (
    HypergeomParams,
    NegBinomialParams,
    PoissonParams,
    hypergeom_pmf,
    hypergeom_tail,
    neg_binomial_tail,
    poisson_tail,
)
from .exact_tests import (
    ContingencyTable,
    SensitivityRow,
    fisher_one_sided,
    sensitivity_sweep,
)
from .mixture import (
    MixedPoissonModel,
    TailCurve,
    count_variance,
    expected_count,
    rate_ratio_exceedance,
    tail_curve,
    tail_probability,
    tail_probability_quadrature,
    variance_components,
)
from .numerics import log_binomial, log_gamma, log_sum_exp, reg_lower_incomplete_gamma
from .simulation import (
    SimConfig,
    SimEstimate,
    simulate_allocation,
    simulate_mixture_moments,
    simulate_mixture_tail,
    simulate_rate_ratio,
)

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "CaseScenario",
    "IncidentLedgerEntry",
    "IncidentSet",
    "Variant",
    "Ward",
    "WardRecord",
    "aggregate",
    "builtin_ledger",
    "builtin_scenario",
    "builtin_table",
    "builtin_ward_tables",
    "consistency_report",
    "load_scenario",
    "parse_scenario",
    "save_scenario",
    "HypergeomParams",
    "NegBinomialParams",
    "PoissonParams",
    "hypergeom_pmf",
    "hypergeom_tail",
    "neg_binomial_tail",
    "poisson_tail",
    "ContingencyTable",
    "SensitivityRow",
    "fisher_one_sided",
    "sensitivity_sweep",
    "MixedPoissonModel",
    "TailCurve",
    "count_variance",
    "expected_count",
    "rate_ratio_exceedance",
    "tail_curve",
    "tail_probability",
    "tail_probability_quadrature",
    "variance_components",
    "log_binomial",
    "log_gamma",
    "log_sum_exp",
    "reg_lower_incomplete_gamma",
    "SimConfig",
    "SimEstimate",
    "simulate_allocation",
    "simulate_mixture_moments",
    "simulate_mixture_tail",
    "simulate_rate_ratio",
]
