"""Verification campaigns: each theorem name expands to a list of
independent check units, units run (serially or across a process pool) in a
canonical order, and the outcomes fold into a deterministic report.

Campaign names
--------------
``gordon`` ``bressoud`` ``lovejoy-b`` ``lovejoy-d`` ``css`` ``clm`` ``main``
    count equality between the condition and residue sides.
``w-recurrence``
    the series recurrence W(k,i) - W(k,i-1) = (1+xq)(xq)^{i-1} W(k,k-i)(xq).
``d-recurrence``
    the cell-wise table recurrence with its zero boundary conventions.
``decomposition``
    the overline-switch injection and the count difference |S| + |T|.
``phi`` / ``chi``
    per-cell bijection checks (chi at i = 1 checks the cardinality only).
``jtp``
    bilateral theta sum vs triple product vs one-sided unfolding.
``genfun``
    the x = 1 series against the residue-class product.

Degenerate edges that enumeration refutes are excluded by default and can
be pulled in deliberately: ``include_i_equals_k`` adds the failing i = k
checks of the ``bressoud`` campaign, ``include_k1`` adds the failing k = 1
checks of the campaigns that need k >= 2.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from .core import InvalidParameters
from .bijections import card_s, card_t, card_u, verify_chi_cell, verify_iota_cell, verify_phi_cell
from .enumeration import condition_counts, count_tables, residue_counts, residue_rules
from .series import (
    QSeries,
    XQSeries,
    bilateral_theta,
    gen_d,
    residue_product,
    series_w,
    theta_halves,
    triple_product,
)

SCHEMA_VERSION = 1

THEOREMS = (
    "gordon", "bressoud", "lovejoy-b", "lovejoy-d", "css", "clm", "main",
    "w-recurrence", "d-recurrence", "decomposition", "phi", "chi", "jtp", "genfun",
)

_COUNT_FAMILIES = {
    "gordon": "gordon",
    "bressoud": "bressoud",
    "lovejoy-b": "lovejoy_b",
    "lovejoy-d": "lovejoy_d",
    "css": "css",
    "clm": "clm",
    "main": "main",
}

# campaigns whose identity is refuted at k = 1 by enumeration
_NEEDS_K2 = {"main", "lovejoy-d", "clm", "d-recurrence", "genfun"}

_DEFAULT_ORDER = {"w-recurrence": 24, "jtp": 30, "genfun": 30}


@dataclass(frozen=True)
class CheckRecord:
    """One verified equality (or deliberate counterexample)."""

    name: str
    params: dict
    expected: dict
    actual: dict
    passed: bool
    counterexample: Optional[str] = None


@dataclass
class VerificationReport:
    campaign: str
    parameters: dict
    records: list[CheckRecord] = field(default_factory=list)
    duration_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    def summary(self) -> dict:
        failed = sum(1 for record in self.records if not record.passed)
        return {"total": len(self.records), "passed": len(self.records) - failed, "failed": failed}

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "campaign": self.campaign,
            "parameters": self.parameters,
            "records": [asdict(record) for record in self.records],
            "summary": self.summary(),
            "duration_seconds": self.duration_seconds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# check units

def _first_q_diff(a: QSeries, b: QSeries) -> Optional[int]:
    for n, (u, v) in enumerate(zip(a.coeffs, b.coeffs)):
        if u != v:
            return n
    return None


def _first_xq_diff(a: XQSeries, b: XQSeries) -> Optional[tuple[int, int]]:
    for n in range(a.order + 1):
        pa, pb = a.coeffs[n], b.coeffs[n]
        for m in range(max(len(pa), len(pb))):
            u = pa[m] if m < len(pa) else 0
            v = pb[m] if m < len(pb) else 0
            if u != v:
                return m, n
    return None


def _unit_counts(campaign: str, family: str, k: int, i: int, nmax: int) -> list[CheckRecord]:
    cond = condition_counts(family, [(k, i)], nmax)[(k, i)]
    res = residue_counts(family, k, i, nmax)
    records = []
    for n in range(nmax + 1):
        good = cond[n] == res[n]
        records.append(CheckRecord(
            name=campaign,
            params={"k": k, "i": i, "n": n},
            expected={"source": "residue count", "value": res[n]},
            actual={"source": "enumeration", "value": cond[n]},
            passed=good,
            counterexample=None if good else
            f"(k,i,n)=({k},{i},{n}): residue side {res[n]}, condition side {cond[n]}",
        ))
    return records


def _unit_wrec(k: int, i: int, order: int) -> list[CheckRecord]:
    lhs = series_w(k, i, order) - series_w(k, i - 1, order)
    shifted = series_w(k, k - i, order).subs_x_to_xq()
    rhs = shifted.mul_monomial(1, i - 1, i - 1) + shifted.mul_monomial(1, i, i)
    diff = _first_xq_diff(lhs, rhs)
    return [CheckRecord(
        name="w-recurrence",
        params={"k": k, "i": i, "order": order},
        expected={"source": "(1+xq)(xq)^(i-1) W(k,k-i)(xq)", "value": None},
        actual={"source": "W(k,i) - W(k,i-1)", "value": None},
        passed=diff is None,
        counterexample=None if diff is None else
        f"first differing coefficient at x^{diff[0]} q^{diff[1]}",
    )]


def _unit_drec(k: int, mmax: int, nmax: int) -> list[CheckRecord]:
    tables = count_tables("main", [(k, i) for i in range(k + 1)], mmax, nmax)
    records = []
    for i in range(1, k + 1):
        bad = None
        for n in range(nmax + 1):
            for m in range(mmax + 1):
                lhs = tables[(k, i)].cell(m, n) - tables[(k, i - 1)].cell(m, n)
                rhs = tables[(k, k - i)].cell(m - i, n - m) + tables[(k, k - i)].cell(m - i + 1, n - m)
                if lhs != rhs:
                    bad = f"cell (m,n)=({m},{n}): difference {lhs}, stripped sum {rhs}"
                    break
            if bad:
                break
        records.append(CheckRecord(
            name="d-recurrence",
            params={"k": k, "i": i, "mmax": mmax, "nmax": nmax},
            expected={"source": "stripped-cell sum", "value": None},
            actual={"source": "count difference", "value": None},
            passed=bad is None,
            counterexample=bad,
        ))
    return records


def _cells(nmax: int):
    for n in range(nmax + 1):
        for m in range(n + 1):
            yield m, n


def _unit_decomp(k: int, i: int, nmax: int) -> list[CheckRecord]:
    image_bad = None
    count_bad = None
    for m, n in _cells(nmax):
        record = verify_iota_cell(k, i, m, n)
        if not record.passed and image_bad is None:
            image_bad = f"{record.cell_id}: {record.counterexample}"
        u_i = card_u(k, i, m, n)
        u_prev = card_u(k, i - 1, m, n)
        s_t = card_s(k, i, m, n) + card_t(k, i, m, n)
        if u_i - u_prev != s_t and count_bad is None:
            count_bad = f"(m,n)=({m},{n}): difference {u_i - u_prev}, |S|+|T| {s_t}"
    return [
        CheckRecord(
            name="decomposition",
            params={"k": k, "i": i, "nmax": nmax},
            expected={"source": "cell complement of S and T", "value": None},
            actual={"source": "image of the overline switch", "value": None},
            passed=image_bad is None,
            counterexample=image_bad,
        ),
        CheckRecord(
            name="decomposition",
            params={"k": k, "i": i, "nmax": nmax},
            expected={"source": "|S| + |T|", "value": None},
            actual={"source": "count difference", "value": None},
            passed=count_bad is None,
            counterexample=count_bad,
        ),
    ]


def _unit_map_cells(map_name: str, k: int, i: int, nmax: int) -> list[CheckRecord]:
    verifier = verify_phi_cell if map_name == "phi" else verify_chi_cell
    bad = None
    for m, n in _cells(nmax):
        record = verifier(k, i, m, n)
        if not record.passed:
            bad = f"{record.cell_id}: {record.counterexample}"
            break
    return [CheckRecord(
        name=map_name,
        params={"k": k, "i": i, "nmax": nmax},
        expected={"source": "target cell, extensionally", "value": None},
        actual={"source": f"image of {map_name}", "value": None},
        passed=bad is None,
        counterexample=bad,
    )]


def _unit_chi_card(k: int, nmax: int) -> list[CheckRecord]:
    # at i = 1 only the cardinality identity holds: |T| matches the
    # (k, k-1) count at (m, n-m)
    bad = None
    for m, n in _cells(nmax):
        t = card_t(k, 1, m, n)
        target = card_u(k, k - 1, m, n - m)
        if t != target:
            bad = f"(m,n)=({m},{n}): |T| {t}, target count {target}"
            break
    return [CheckRecord(
        name="chi",
        params={"k": k, "i": 1, "nmax": nmax},
        expected={"source": "target cell count", "value": None},
        actual={"source": "|T|", "value": None},
        passed=bad is None,
        counterexample=bad,
    )]


def _unit_jtp(k: int, i: int, order: int) -> list[CheckRecord]:
    theta = bilateral_theta(k, i, order)
    h1, h2 = theta_halves(k, i, order)
    records = []
    if k >= 2:
        diff = _first_q_diff(theta, triple_product(k, i, order))
        records.append(CheckRecord(
            name="jtp",
            params={"k": k, "i": i, "order": order},
            expected={"source": "triple product", "value": None},
            actual={"source": "bilateral sum", "value": None},
            passed=diff is None,
            counterexample=None if diff is None else f"first differing coefficient at q^{diff}",
        ))
    diff = _first_q_diff(theta, h1 + h2)
    records.append(CheckRecord(
        name="jtp",
        params={"k": k, "i": i, "order": order},
        expected={"source": "one-sided unfolding", "value": None},
        actual={"source": "bilateral sum", "value": None},
        passed=diff is None,
        counterexample=None if diff is None else f"first differing coefficient at q^{diff}",
    ))
    return records


def _unit_genfun(k: int, i: int, order: int) -> list[CheckRecord]:
    rules = residue_rules("main", k, i)
    allowed_plain = frozenset(range(rules.modulus)) - rules.forbidden_plain
    allowed_over = frozenset(range(rules.modulus)) - rules.forbidden_over
    product = residue_product(rules.modulus, allowed_plain, allowed_over, order)
    diff = _first_q_diff(gen_d(k, i, order), product)
    return [CheckRecord(
        name="genfun",
        params={"k": k, "i": i, "order": order},
        expected={"source": "residue-class product", "value": None},
        actual={"source": "alternating sum at x=1", "value": None},
        passed=diff is None,
        counterexample=None if diff is None else f"first differing coefficient at q^{diff}",
    )]


_RUNNERS: dict[str, Callable] = {
    "counts": _unit_counts,
    "wrec": _unit_wrec,
    "drec": _unit_drec,
    "decomp": _unit_decomp,
    "map": _unit_map_cells,
    "chi-card": _unit_chi_card,
    "jtp": _unit_jtp,
    "genfun": _unit_genfun,
}


def run_unit(unit: tuple) -> list[CheckRecord]:
    kind, *args = unit
    return _RUNNERS[kind](*args)


# ---------------------------------------------------------------------------
# campaign assembly

def _ki_pairs(kmin: int, kmax: int):
    for k in range(kmin, kmax + 1):
        for i in range(1, k + 1):
            yield k, i


def build_units(theorem: str, kmax: int, nmax: int, order: Optional[int] = None,
                include_i_equals_k: bool = False, include_k1: bool = False) -> list[tuple]:
    """Expand a campaign into its ordered check units."""
    if theorem not in THEOREMS:
        raise InvalidParameters(f"unknown theorem {theorem!r}")
    if kmax < 0 or nmax < 0 or (order is not None and order < 0):
        raise InvalidParameters("bounds must be >= 0")
    order = order if order is not None else _DEFAULT_ORDER.get(theorem, 0)
    kmin = 2 if (theorem in _NEEDS_K2 and not include_k1) else 1
    units: list[tuple] = []
    if theorem in _COUNT_FAMILIES:
        family = _COUNT_FAMILIES[theorem]
        for k in range(kmin, kmax + 1):
            if family == "gordon" or family == "css" or family == "main":
                iis = range(1, k + 1)
            elif family == "bressoud":
                iis = range(1, k + 1) if include_i_equals_k else range(1, k)
            elif family == "lovejoy_b":
                iis = [k]
            else:
                iis = [1]
            units.extend(("counts", theorem, family, k, i, nmax) for i in iis)
    elif theorem == "w-recurrence":
        units.extend(("wrec", k, i, order) for k, i in _ki_pairs(1, kmax))
    elif theorem == "d-recurrence":
        units.extend(("drec", k, nmax, nmax) for k in range(kmin, kmax + 1))
    elif theorem == "decomposition":
        units.extend(("decomp", k, i, nmax) for k, i in _ki_pairs(1, kmax))
    elif theorem == "phi":
        units.extend(("map", "phi", k, i, nmax) for k, i in _ki_pairs(1, kmax))
    elif theorem == "chi":
        for k in range(2, kmax + 1):
            units.append(("chi-card", k, nmax))
            units.extend(("map", "chi", k, i, nmax) for i in range(2, k + 1))
    elif theorem == "jtp":
        units.extend(("jtp", k, i, order) for k, i in _ki_pairs(1, kmax))
    elif theorem == "genfun":
        units.extend(("genfun", k, i, order) for k, i in _ki_pairs(kmin, kmax))
    return units


def run_campaign(theorem: str, kmax: int, nmax: int, order: Optional[int] = None,
                 include_i_equals_k: bool = False, include_k1: bool = False,
                 jobs: int = 1, seed: Optional[int] = None,
                 on_record: Optional[Callable[[CheckRecord], None]] = None) -> VerificationReport:
    """Run every check of a campaign and assemble the report.

    ``jobs`` > 1 distributes units over a process pool; results are merged
    in unit order so the report is deterministic either way.  ``on_record``
    is invoked with each record as it becomes available, for streaming.
    """
    units = build_units(theorem, kmax, nmax, order,
                        include_i_equals_k=include_i_equals_k, include_k1=include_k1)
    parameters = {
        "kmax": kmax,
        "nmax": nmax,
        "order": order if order is not None else _DEFAULT_ORDER.get(theorem),
        "include_i_equals_k": include_i_equals_k,
        "include_k1": include_k1,
        "jobs": jobs,
        "seed": seed,
    }
    started = time.perf_counter()
    report = VerificationReport(campaign=f"verify:{theorem}", parameters=parameters)
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = pool.map(run_unit, units)
            for batch in batches:
                for record in batch:
                    report.records.append(record)
                    if on_record:
                        on_record(record)
    else:
        for unit in units:
            for record in run_unit(unit):
                report.records.append(record)
                if on_record:
                    on_record(record)
    report.duration_seconds = time.perf_counter() - started
    return report
