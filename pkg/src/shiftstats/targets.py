"""Published reference values and the tolerance each must be reproduced
within.

This is the single source of truth for the `reproduce` command and the
acceptance tests.  The 26 analytic targets: the 14 tail-curve bar
heights of the GGJ7 model, the 9 sensitivity-sweep inverse p-values on
the uncorrected JKZ table, the expected incident count, the GGJ13 tail
at 13 incidents, and the rate-ratio identity at k = 2.

Tolerances mirror how each value was published: the bar heights carry
14 digits, the inverse p-values were printed as whole numbers (with
mixed rounding, hence the 0.1% relative band), and the headline numbers
were rounded to 5-6 digits.
"""

from __future__ import annotations

from dataclasses import dataclass

TARGETS_VERSION = 1

REL = "rel"
ABS = "abs"


@dataclass(frozen=True)
class Target:
    key: str
    label: str
    expected: float
    tolerance: float
    mode: str  # REL or ABS

    def check(self, computed: float) -> bool:
        if self.mode == REL:
            return abs(computed - self.expected) <= self.tolerance * abs(self.expected)
        return abs(computed - self.expected) <= self.tolerance


TAIL_CURVE_VALUES = (
    0.75270964061608,
    0.56657180307639,
    0.42646405827684,
    0.32100360804124,
    0.24162251044518,
    0.18187159300195,
    0.13689650140677,
    0.10304331637549,
    0.07756169763688,
    0.05838143755383,
    0.04394427087979,
    0.03307727634106,
    0.02489758478724,
    0.01874065209741,
)

INVERSE_P_VALUES = (
    9043864,
    1137586,
    257538,
    79497,
    29989,
    13051,
    6329,
    3341,
    1889,
)

EXPECTED_COUNT = 3.04383
HEADLINE_TAIL = 0.13690  # GGJ7 model at n = 7, rounded to 5 digits
UNFAVORABLE_TAIL = 0.03850  # GGJ13 model at n = 13
RATE_RATIO_AT_2 = 2.0 / 3.0

TARGETS: tuple[Target, ...] = (
    tuple(
        Target(
            key=f"tail_curve:{k}",
            label=f"tail curve P(N >= {k}), GGJ7 model",
            expected=v,
            tolerance=1e-10,
            mode=ABS,
        )
        for k, v in enumerate(TAIL_CURVE_VALUES, start=1)
    )
    + tuple(
        Target(
            key=f"inverse_p:{k}",
            label=f"inverse p-value, JKZ uncorrected, {k} incident(s) postulated outside",
            expected=float(v),
            tolerance=1e-3,
            mode=REL,
        )
        for k, v in enumerate(INVERSE_P_VALUES)
    )
    + (
        Target(
            key="expected_count",
            label="expected incidents in 203 shifts, GGJ7 model",
            expected=EXPECTED_COUNT,
            tolerance=1e-5,
            mode=ABS,
        ),
        Target(
            key="unfavorable_tail",
            label="tail P(N >= 13), GGJ13 model",
            expected=UNFAVORABLE_TAIL,
            tolerance=5e-5,
            mode=ABS,
        ),
        Target(
            key="rate_ratio:2",
            label="P(one rate at least twice the other), rho = 1",
            expected=RATE_RATIO_AT_2,
            tolerance=1e-12,
            mode=ABS,
        ),
    )
)
