"""Built-in case data: the incident ledger, the per-ward 2x2 tables
(original and corrected variants), and the named analysis scenarios.

The record-keeping behind these numbers was famously irreproducible, so
this module surfaces inconsistencies instead of reconciling them: the
corrected ward tables attribute 9 incidents to the suspect while the
GGJ7 scenario counts 7, and the GGJ13 total of 30 includes 4 incidents
that no ward table places.  `consistency_report` flags both; nothing
here silently adjusts a number.

Scenario files are flat INI documents (see `parse_scenario`); the
built-in scenarios also ship as data files that must stay identical to
the constants below.
"""

from __future__ import annotations

import configparser
import csv
import enum
import io
from dataclasses import dataclass
from datetime import date
from pathlib import Path

from .exact_tests import ContingencyTable

__all__ = [
    "Ward",
    "Variant",
    "Verdict",
    "IncidentSet",
    "IncidentLedgerEntry",
    "WardRecord",
    "CaseScenario",
    "ScenarioDocument",
    "Finding",
    "ScenarioParseError",
    "ScenarioValidationError",
    "SCENARIO_FORMAT_VERSION",
    "BUILTIN_SCENARIO_NAMES",
    "BUILTIN_TABLE_NAMES",
    "builtin_ledger",
    "ledger_entry",
    "ledger_set_size",
    "builtin_ward_tables",
    "ward_record",
    "builtin_scenario",
    "builtin_table",
    "aggregate",
    "parse_scenario",
    "format_scenario",
    "load_scenario",
    "save_scenario",
    "validate_document",
    "consistency_report",
    "data_file_path",
]

SCENARIO_FORMAT_VERSION = 1


class Ward(enum.Enum):
    JKZ = "JKZ"
    RKZ41 = "RKZ-41"
    RKZ42 = "RKZ-42"
    LEYENBURG = "Leyenburg"


class Variant(enum.Enum):
    ORIGINAL = "original"
    CORRECTED = "corrected"


class Verdict(enum.Enum):
    MURDER = "murder"
    ATTEMPT = "attempt"
    NONE = "none"


class IncidentSet(enum.Enum):
    """The data sets used in the various calculations: three prosecution
    sets over JKZ only (9, 8 and 7 cases) and the two all-ward scenarios."""

    E9 = "E9"
    E8 = "E8"
    E7 = "E7"
    GGJ7 = "GGJ7"
    GGJ13 = "GGJ13"


class ScenarioParseError(ValueError):
    """Malformed scenario document (syntax, missing keys, bad integers)."""


class ScenarioValidationError(ValueError):
    """Structurally valid document whose numbers violate an invariant.

    `declared` and `derived` carry both sides of a failed cross-check.
    """

    def __init__(self, message: str, declared=None, derived=None):
        super().__init__(message)
        self.declared = declared
        self.derived = derived


@dataclass(frozen=True)
class IncidentLedgerEntry:
    """One incident row: who/when/where, the 2004 verdict, the data sets
    that include it, and the bookkeeping remark.

    `count` is 1 except for the "Unknown RKZ-42" row, which aggregates 4
    incidents that were never assigned to individual shifts.
    """

    label: str
    date: date | None
    ward: Ward
    verdict_2004: Verdict
    in_sets: frozenset[IncidentSet]
    remark: str
    count: int = 1

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")
        if "Dropped" in self.remark and (
            IncidentSet.GGJ7 in self.in_sets or IncidentSet.GGJ13 in self.in_sets
        ):
            raise ValueError(f"dropped entry {self.label!r} cannot be in a GGJ set")

    def display(self) -> str:
        if self.date is None:
            return self.label
        return f"{self.label}({self.date.strftime('%d/%m/%y')})"


@dataclass(frozen=True)
class WardRecord:
    ward: Ward
    variant: Variant
    table: ContingencyTable


@dataclass(frozen=True)
class CaseScenario:
    """The four integers that parameterize an analysis: the suspect's
    shifts and incidents, and the grand totals over all wards."""

    name: str
    suspect_shifts: int
    suspect_incidents: int
    total_shifts: int
    total_incidents: int

    def __post_init__(self):
        for field in ("suspect_shifts", "total_shifts", "total_incidents"):
            if getattr(self, field) < 1:
                raise ValueError(f"{field} must be positive")
        if self.suspect_incidents < 0:
            raise ValueError("suspect_incidents must be >= 0")
        if self.suspect_incidents > self.total_incidents:
            raise ScenarioValidationError(
                f"suspect_incidents ({self.suspect_incidents}) exceeds "
                f"total_incidents ({self.total_incidents})",
                declared=self.total_incidents,
                derived=self.suspect_incidents,
            )
        if self.suspect_shifts > self.total_shifts:
            raise ScenarioValidationError(
                f"suspect_shifts ({self.suspect_shifts}) exceeds "
                f"total_shifts ({self.total_shifts})",
                declared=self.total_shifts,
                derived=self.suspect_shifts,
            )
        if self.suspect_incidents > self.suspect_shifts:
            raise ScenarioValidationError(
                f"suspect_incidents ({self.suspect_incidents}) exceeds "
                f"suspect_shifts ({self.suspect_shifts})",
                declared=self.suspect_shifts,
                derived=self.suspect_incidents,
            )

    def to_table(self) -> ContingencyTable:
        """The pooled 2x2 table implied by the four counts."""
        return ContingencyTable(
            suspect_with=self.suspect_incidents,
            suspect_without=self.suspect_shifts - self.suspect_incidents,
            others_with=self.total_incidents - self.suspect_incidents,
            others_without=(self.total_shifts - self.suspect_shifts)
            - (self.total_incidents - self.suspect_incidents),
        )


@dataclass(frozen=True)
class Finding:
    """One consistency-check result; warnings flag the data conflicts the
    record-keeping left behind."""

    level: str  # "ok" | "warning"
    message: str


@dataclass(frozen=True)
class ScenarioDocument:
    """A parsed scenario file: the scenario plus optional ward tables."""

    scenario: CaseScenario
    wards: tuple[WardRecord, ...] = ()
    format_version: int = SCENARIO_FORMAT_VERSION


# --- built-in data -----------------------------------------------------------

_S = IncidentSet
_ALL_FIVE = frozenset({_S.E9, _S.E8, _S.E7, _S.GGJ7, _S.GGJ13})

_LEDGER: tuple[IncidentLedgerEntry, ...] = (
    IncidentLedgerEntry(
        "Eda", date(2000, 9, 18), Ward.JKZ, Verdict.ATTEMPT, frozenset(), "Dropped"
    ),
    IncidentLedgerEntry(
        "Ka I", date(2000, 10, 10), Ward.JKZ, Verdict.NONE, frozenset(), "New, out"
    ),
    IncidentLedgerEntry(
        "Jouad", date(2000, 10, 10), Ward.JKZ, Verdict.MURDER, _ALL_FIVE, ""
    ),
    IncidentLedgerEntry(
        "Ka II", date(2000, 10, 25), Ward.JKZ, Verdict.MURDER, _ALL_FIVE, ""
    ),
    IncidentLedgerEntry(
        "Kemal I",
        date(2000, 10, 27),
        Ward.JKZ,
        Verdict.NONE,
        frozenset({_S.E9, _S.E8, _S.E7, _S.GGJ13}),
        "",
    ),
    IncidentLedgerEntry(
        "Kemal II",
        date(2000, 12, 20),
        Ward.JKZ,
        Verdict.NONE,
        frozenset({_S.E9, _S.E8, _S.E7, _S.GGJ13}),
        "",
    ),
    IncidentLedgerEntry(
        "Sadia", date(2001, 1, 17), Ward.JKZ, Verdict.NONE, frozenset(), "Moved, out"
    ),
    IncidentLedgerEntry(
        "Achmad I", date(2001, 1, 25), Ward.JKZ, Verdict.ATTEMPT, _ALL_FIVE, ""
    ),
    IncidentLedgerEntry(
        "Achmad II",
        date(2001, 2, 23),
        Ward.JKZ,
        Verdict.MURDER,
        frozenset({_S.E9, _S.E8}),
        "Moved, out",
    ),
    IncidentLedgerEntry(
        "Kemal III", date(2001, 3, 2), Ward.JKZ, Verdict.NONE, frozenset(), "New, out"
    ),
    IncidentLedgerEntry(
        "Sarah", date(2001, 4, 18), Ward.JKZ, Verdict.NONE, frozenset({_S.E9}), "Dropped"
    ),
    IncidentLedgerEntry(
        "Achraf", date(2001, 9, 1), Ward.JKZ, Verdict.ATTEMPT, _ALL_FIVE, ""
    ),
    IncidentLedgerEntry(
        "Amber", date(2001, 9, 4), Ward.JKZ, Verdict.MURDER, _ALL_FIVE, ""
    ),
    IncidentLedgerEntry(
        "Zonneveld",
        date(1997, 11, 27),
        Ward.RKZ41,
        Verdict.MURDER,
        frozenset({_S.GGJ7, _S.GGJ13}),
        "",
    ),
    IncidentLedgerEntry(
        "Wang",
        date(1997, 11, 12),
        Ward.RKZ42,
        Verdict.MURDER,
        frozenset({_S.GGJ7, _S.GGJ13}),
        "",
    ),
    IncidentLedgerEntry(
        "De Koning", date(1997, 5, 9), Ward.LEYENBURG, Verdict.MURDER, frozenset(), "Dropped"
    ),
    IncidentLedgerEntry(
        "Unknown RKZ-42",
        None,
        Ward.RKZ42,
        Verdict.NONE,
        frozenset({_S.GGJ13}),
        "Extra",
        count=4,
    ),
)

_WARD_TABLES: tuple[WardRecord, ...] = (
    WardRecord(Ward.JKZ, Variant.ORIGINAL, ContingencyTable(8, 134, 0, 887)),
    WardRecord(Ward.JKZ, Variant.CORRECTED, ContingencyTable(7, 135, 4, 883)),
    WardRecord(Ward.RKZ42, Variant.ORIGINAL, ContingencyTable(5, 53, 9, 272)),
    WardRecord(Ward.RKZ42, Variant.CORRECTED, ContingencyTable(1, 57, 9, 272)),
    WardRecord(Ward.RKZ41, Variant.ORIGINAL, ContingencyTable(1, 0, 4, 361)),
    WardRecord(Ward.RKZ41, Variant.CORRECTED, ContingencyTable(1, 2, 4, 359)),
)

# The GGJ13 counts are declared, not derived: 4 of its incidents exist only
# as the ledger's "Unknown RKZ-42" aggregate and appear in no ward table.
_GGJ7 = CaseScenario("GGJ7", 203, 7, 1734, 26)
_GGJ13 = CaseScenario("GGJ13", 203, 13, 1734, 30)

# per-scenario: which ward-sum cross-checks are expected to hold
_SCENARIOS: dict[str, tuple[CaseScenario, Variant, bool]] = {
    "GGJ7": (_GGJ7, Variant.CORRECTED, True),
    "GGJ13": (_GGJ13, Variant.CORRECTED, False),
}

BUILTIN_SCENARIO_NAMES = tuple(_SCENARIOS)


def builtin_ledger() -> tuple[IncidentLedgerEntry, ...]:
    """All 17 incident rows, exactly as recorded (the totals row is a
    derived quantity; see `ledger_set_size`)."""
    return _LEDGER


def ledger_entry(label: str) -> IncidentLedgerEntry:
    for entry in _LEDGER:
        if entry.label == label:
            return entry
    raise KeyError(f"no ledger entry labelled {label!r}")


def ledger_set_size(s: IncidentSet) -> int:
    """Number of incidents in a data set, counting aggregate rows at
    their multiplicity."""
    return sum(e.count for e in _LEDGER if s in e.in_sets)


def builtin_ward_tables() -> tuple[WardRecord, ...]:
    """All six ward tables: JKZ and RKZ-42 in original and corrected
    form, RKZ-41 original (one suspect shift) and corrected (three)."""
    return _WARD_TABLES


def ward_record(ward: Ward, variant: Variant) -> WardRecord:
    for record in _WARD_TABLES:
        if record.ward is ward and record.variant is variant:
            return record
    raise KeyError(f"no built-in table for {ward.value} / {variant.value}")


def builtin_scenario(name: str) -> CaseScenario:
    try:
        return _SCENARIOS[name][0]
    except KeyError:
        raise KeyError(
            f"unknown scenario {name!r}; built-ins: {', '.join(_SCENARIOS)}"
        ) from None


_TABLE_ALIASES = {
    "jkz-original": (Ward.JKZ, Variant.ORIGINAL),
    "jkz-corrected": (Ward.JKZ, Variant.CORRECTED),
    "rkz42-original": (Ward.RKZ42, Variant.ORIGINAL),
    "rkz42-corrected": (Ward.RKZ42, Variant.CORRECTED),
    "rkz41-original": (Ward.RKZ41, Variant.ORIGINAL),
    "rkz41-corrected": (Ward.RKZ41, Variant.CORRECTED),
}

BUILTIN_TABLE_NAMES = tuple(_TABLE_ALIASES) + ("ggj7", "ggj13")


def builtin_table(name: str) -> ContingencyTable:
    """Resolve a built-in 2x2 table by name: a ward/variant pair like
    'jkz-original', or a scenario name for its pooled table."""
    key = name.lower()
    if key in _TABLE_ALIASES:
        ward, variant = _TABLE_ALIASES[key]
        return ward_record(ward, variant).table
    if key.upper() in _SCENARIOS:
        return builtin_scenario(key.upper()).to_table()
    raise KeyError(
        f"unknown table {name!r}; built-ins: {', '.join(BUILTIN_TABLE_NAMES)}"
    )


def aggregate(wards: list[WardRecord], scenario_name: str) -> CaseScenario:
    """Combine per-ward tables into a named scenario.

    Shift sums must match the declared scenario exactly; incident totals
    are taken from the scenario declaration and cross-checked against the
    ward sum only where the source data is consistent (GGJ7).  The known
    suspect-incident discrepancy is deliberately not checked here; it is
    reported, not resolved, by `consistency_report`.
    """
    if not wards:
        raise ScenarioValidationError("empty ward list")
    if scenario_name not in _SCENARIOS:
        raise KeyError(
            f"unknown scenario {scenario_name!r}; built-ins: {', '.join(_SCENARIOS)}"
        )
    scenario, variant, check_incident_total = _SCENARIOS[scenario_name]
    seen = set()
    for record in wards:
        if record.variant is not wards[0].variant:
            raise ScenarioValidationError("mixed ward-table variants")
        if record.ward in seen:
            raise ScenarioValidationError(f"duplicate ward {record.ward.value}")
        seen.add(record.ward)

    total_shifts = sum(r.table.total_shifts for r in wards)
    if total_shifts != scenario.total_shifts:
        raise ScenarioValidationError(
            f"ward shift totals sum to {total_shifts}, scenario "
            f"{scenario_name} declares {scenario.total_shifts}",
            declared=scenario.total_shifts,
            derived=total_shifts,
        )
    suspect_shifts = sum(r.table.suspect_shifts for r in wards)
    if suspect_shifts != scenario.suspect_shifts:
        raise ScenarioValidationError(
            f"ward suspect-shift totals sum to {suspect_shifts}, scenario "
            f"{scenario_name} declares {scenario.suspect_shifts}",
            declared=scenario.suspect_shifts,
            derived=suspect_shifts,
        )
    if check_incident_total:
        total_incidents = sum(r.table.total_incidents for r in wards)
        if total_incidents != scenario.total_incidents:
            raise ScenarioValidationError(
                f"ward incident totals sum to {total_incidents}, scenario "
                f"{scenario_name} declares {scenario.total_incidents}",
                declared=scenario.total_incidents,
                derived=total_incidents,
            )
    return scenario


# --- scenario documents ------------------------------------------------------

_WARD_SECTION_PREFIX = "ward."
_CELL_KEYS = ("suspect_with", "suspect_without", "others_with", "others_without")
_WARD_BY_NAME = {w.name: w for w in Ward}


def _get_int(section, key: str, where: str) -> int:
    try:
        raw = section[key]
    except KeyError:
        raise ScenarioParseError(f"missing key {key!r} in [{where}]") from None
    raw = raw.strip()
    if not (raw.isdigit() or (raw.startswith("-") and raw[1:].isdigit())):
        raise ScenarioParseError(
            f"key {key!r} in [{where}] must be a plain integer, got {raw!r}"
        )
    return int(raw)


def parse_scenario(text: str) -> ScenarioDocument:
    """Parse a scenario document.

    Format: INI with a [scenario] section holding format_version, name and
    the four integer counts, plus optional [ward.<NAME>] sections (NAME in
    JKZ, RKZ41, RKZ42, LEYENBURG) each holding variant and the four cells.
    """
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ScenarioParseError(f"malformed scenario document: {exc}") from exc

    if not parser.has_section("scenario"):
        raise ScenarioParseError("missing [scenario] section")
    main = parser["scenario"]
    version = _get_int(main, "format_version", "scenario")
    if version != SCENARIO_FORMAT_VERSION:
        raise ScenarioParseError(
            f"unsupported format_version {version} "
            f"(this build reads version {SCENARIO_FORMAT_VERSION})"
        )
    name = main.get("name", "").strip()
    if not name:
        raise ScenarioParseError("missing key 'name' in [scenario]")
    scenario = CaseScenario(
        name=name,
        suspect_shifts=_get_int(main, "suspect_shifts", "scenario"),
        suspect_incidents=_get_int(main, "suspect_incidents", "scenario"),
        total_shifts=_get_int(main, "total_shifts", "scenario"),
        total_incidents=_get_int(main, "total_incidents", "scenario"),
    )

    wards = []
    for section_name in parser.sections():
        if section_name == "scenario":
            continue
        if not section_name.startswith(_WARD_SECTION_PREFIX):
            raise ScenarioParseError(f"unexpected section [{section_name}]")
        ward_key = section_name[len(_WARD_SECTION_PREFIX):]
        if ward_key not in _WARD_BY_NAME:
            raise ScenarioParseError(
                f"unknown ward {ward_key!r} in [{section_name}]; "
                f"known wards: {', '.join(_WARD_BY_NAME)}"
            )
        section = parser[section_name]
        variant_raw = section.get("variant", "").strip()
        try:
            variant = Variant(variant_raw)
        except ValueError:
            raise ScenarioParseError(
                f"key 'variant' in [{section_name}] must be "
                f"'original' or 'corrected', got {variant_raw!r}"
            ) from None
        cells = {key: _get_int(section, key, section_name) for key in _CELL_KEYS}
        wards.append(WardRecord(_WARD_BY_NAME[ward_key], variant, ContingencyTable(**cells)))

    doc = ScenarioDocument(scenario=scenario, wards=tuple(wards), format_version=version)
    _check_ward_sums(doc)
    return doc


def _check_ward_sums(doc: ScenarioDocument) -> None:
    """Hard invariants relating ward tables to the scenario counts.

    Shifts are fully enumerated by the tables, so shift sums must match
    exactly.  Incident counts may legitimately exceed the ward sums (the
    built-in GGJ13 scenario carries 4 incidents no table places), so those
    are soft findings, not errors; see `validate_document`.
    """
    if not doc.wards:
        return
    scenario = doc.scenario
    total_shifts = sum(r.table.total_shifts for r in doc.wards)
    if total_shifts != scenario.total_shifts:
        raise ScenarioValidationError(
            f"ward shift totals sum to {total_shifts}, scenario declares "
            f"{scenario.total_shifts}",
            declared=scenario.total_shifts,
            derived=total_shifts,
        )
    suspect_shifts = sum(r.table.suspect_shifts for r in doc.wards)
    if suspect_shifts != scenario.suspect_shifts:
        raise ScenarioValidationError(
            f"ward suspect-shift totals sum to {suspect_shifts}, scenario "
            f"declares {scenario.suspect_shifts}",
            declared=scenario.suspect_shifts,
            derived=suspect_shifts,
        )
    total_incidents = sum(r.table.total_incidents for r in doc.wards)
    if total_incidents > scenario.total_incidents:
        raise ScenarioValidationError(
            f"ward incident totals sum to {total_incidents}, more than the "
            f"declared {scenario.total_incidents}",
            declared=scenario.total_incidents,
            derived=total_incidents,
        )


def format_scenario(doc: ScenarioDocument) -> str:
    """Render a document in the INI scenario format (inverse of
    `parse_scenario`; round-trips losslessly)."""
    parser = configparser.ConfigParser(interpolation=None)
    parser["scenario"] = {
        "format_version": str(doc.format_version),
        "name": doc.scenario.name,
        "suspect_shifts": str(doc.scenario.suspect_shifts),
        "suspect_incidents": str(doc.scenario.suspect_incidents),
        "total_shifts": str(doc.scenario.total_shifts),
        "total_incidents": str(doc.scenario.total_incidents),
    }
    for record in doc.wards:
        parser[f"{_WARD_SECTION_PREFIX}{record.ward.name}"] = {
            "variant": record.variant.value,
            "suspect_with": str(record.table.suspect_with),
            "suspect_without": str(record.table.suspect_without),
            "others_with": str(record.table.others_with),
            "others_without": str(record.table.others_without),
        }
    out = io.StringIO()
    parser.write(out)
    return out.getvalue()


def load_scenario(path) -> ScenarioDocument:
    return parse_scenario(Path(path).read_text(encoding="utf-8"))


def save_scenario(doc: ScenarioDocument, path) -> None:
    Path(path).write_text(format_scenario(doc), encoding="utf-8")


def data_file_path(filename: str) -> Path:
    """Path of a shipped data file (the built-in fixtures)."""
    return Path(__file__).parent / "data" / filename


_SET_ORDER = (IncidentSet.E9, IncidentSet.E8, IncidentSet.E7,
              IncidentSet.GGJ7, IncidentSet.GGJ13)
_WARD_BY_VALUE = {w.value: w for w in Ward}
_VERDICT_BY_VALUE = {v.value: v for v in Verdict}


def format_ledger_csv(entries=None) -> str:
    """Render ledger entries as CSV (the shipped fixture format)."""
    entries = _LEDGER if entries is None else entries
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["label", "date", "ward", "verdict_2004", "count", "sets", "remark"])
    for e in entries:
        writer.writerow([
            e.label,
            e.date.isoformat() if e.date else "",
            e.ward.value,
            e.verdict_2004.value,
            e.count,
            "|".join(s.value for s in _SET_ORDER if s in e.in_sets),
            e.remark,
        ])
    return out.getvalue()


def load_ledger_csv(path) -> tuple[IncidentLedgerEntry, ...]:
    """Read a ledger fixture back into entries (inverse of
    `format_ledger_csv`)."""
    entries = []
    with open(path, newline="", encoding="utf-8") as handle:
        for row in csv.DictReader(handle):
            entries.append(
                IncidentLedgerEntry(
                    label=row["label"],
                    date=date.fromisoformat(row["date"]) if row["date"] else None,
                    ward=_WARD_BY_VALUE[row["ward"]],
                    verdict_2004=_VERDICT_BY_VALUE[row["verdict_2004"]],
                    in_sets=frozenset(
                        IncidentSet(v) for v in row["sets"].split("|") if v
                    ),
                    remark=row["remark"],
                    count=int(row["count"]),
                )
            )
    return tuple(entries)


# --- consistency checks -------------------------------------------------------


def validate_document(doc: ScenarioDocument) -> list[Finding]:
    """Soft cross-checks between a document's scenario and its ward tables."""
    findings = []
    if doc.wards:
        suspect_incidents = sum(r.table.suspect_with for r in doc.wards)
        if suspect_incidents != doc.scenario.suspect_incidents:
            findings.append(
                Finding(
                    "warning",
                    f"ward tables attribute {suspect_incidents} incidents to the "
                    f"suspect but the scenario counts {doc.scenario.suspect_incidents}",
                )
            )
        total_incidents = sum(r.table.total_incidents for r in doc.wards)
        if total_incidents != doc.scenario.total_incidents:
            findings.append(
                Finding(
                    "warning",
                    f"ward tables hold {total_incidents} incidents in total but the "
                    f"scenario declares {doc.scenario.total_incidents} "
                    f"({doc.scenario.total_incidents - total_incidents} not placed in any ward)",
                )
            )
    if not findings:
        findings.append(Finding("ok", "ward tables and scenario counts agree"))
    return findings


def consistency_report() -> list[Finding]:
    """Cross-check the built-in ledger, ward tables and scenarios,
    reporting (never repairing) the known conflicts."""
    findings = []

    for variant in Variant:
        records = [r for r in _WARD_TABLES if r.variant is variant]
        shifts = sum(r.table.total_shifts for r in records)
        level = "ok" if shifts == _GGJ7.total_shifts else "warning"
        findings.append(
            Finding(level, f"{variant.value} ward tables cover {shifts} shifts "
                           f"(scenarios declare {_GGJ7.total_shifts})")
        )

    corrected = [r for r in _WARD_TABLES if r.variant is Variant.CORRECTED]
    corrected_incidents = sum(r.table.total_incidents for r in corrected)
    level = "ok" if corrected_incidents == _GGJ7.total_incidents else "warning"
    findings.append(
        Finding(level, f"corrected ward tables hold {corrected_incidents} incidents; "
                       f"GGJ7 declares {_GGJ7.total_incidents}")
    )

    ggj7_ledger = ledger_set_size(IncidentSet.GGJ7)
    level = "ok" if ggj7_ledger == _GGJ7.suspect_incidents else "warning"
    findings.append(
        Finding(level, f"ledger flags {ggj7_ledger} GGJ7 incidents; "
                       f"GGJ7 counts {_GGJ7.suspect_incidents} for the suspect")
    )

    ggj13_ledger = ledger_set_size(IncidentSet.GGJ13)
    level = "ok" if ggj13_ledger == _GGJ13.suspect_incidents else "warning"
    findings.append(
        Finding(level, f"ledger flags {ggj13_ledger} GGJ13 incidents; "
                       f"GGJ13 counts {_GGJ13.suspect_incidents} for the suspect")
    )

    containment = all(
        IncidentSet.GGJ13 in e.in_sets for e in _LEDGER if IncidentSet.GGJ7 in e.in_sets
    )
    findings.append(
        Finding(
            "ok" if containment else "warning",
            "every GGJ7 incident is also a GGJ13 incident"
            if containment
            else "some GGJ7 incident is missing from GGJ13",
        )
    )

    # the two conflicts the source data genuinely contains
    suspect_corrected = sum(r.table.suspect_with for r in corrected)
    if suspect_corrected != _GGJ7.suspect_incidents:
        findings.append(
            Finding(
                "warning",
                f"corrected ward tables attribute {suspect_corrected} incidents to "
                f"the suspect but GGJ7 counts {_GGJ7.suspect_incidents} (two JKZ "
                f"incidents are excluded from the GGJ7 set)",
            )
        )
    if corrected_incidents != _GGJ13.total_incidents:
        findings.append(
            Finding(
                "warning",
                f"GGJ13 declares {_GGJ13.total_incidents} incidents in total but the "
                f"corrected ward tables hold {corrected_incidents}; the remaining "
                f"{_GGJ13.total_incidents - corrected_incidents} exist only as the "
                f"ledger's aggregate 'Unknown RKZ-42' row",
            )
        )
    return findings
