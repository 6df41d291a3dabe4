"""Three-way verification: brute force vs automaton DP vs closed forms.

Every check compares exact coefficients and reports the first mismatching
index with both values, so a failure always carries a witness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from . import automaton, closedforms, paths
from .automaton import (
    VALLEY0_ALL_CLOSED_WEIGHTS,
    builtin_spec,
    closed_series,
    dp_run,
    level_series,
    meander_series,
)
from .paths import OPEN_BOUND, Statistic, enumerate_paths, marked_count, stat_count
from .series import TPoly, ZSeries

FAMILIES = (
    Statistic.ASCENT1,
    Statistic.DESCENT1,
    Statistic.VALLEY0,
    Statistic.UUDD4,
)


@dataclass
class Report:
    family: str
    check: str
    order: int
    status: str  # "pass" | "fail"
    witness: int | None = None
    expected: str | None = None
    actual: str | None = None
    ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def line(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.family:9s} {self.check}"
        if self.ok:
            return f"{head} (order {self.order}, {self.ms:.1f} ms)"
        return (
            f"{head} (order {self.order}): first mismatch at index "
            f"{self.witness}: expected {self.expected}, got {self.actual}"
        )


class _Checker:
    def __init__(self, family: str):
        self.family = family
        self.reports: list[Report] = []

    def series(self, check: str, expected: ZSeries, actual: ZSeries, upto=None):
        start = time.perf_counter()
        n = min(expected.order, actual.order)
        if upto is not None:
            n = min(n, upto)
        witness = None
        for i in range(n):
            if expected.coeff(i) != actual.coeff(i):
                witness = i
                break
        ms = (time.perf_counter() - start) * 1000
        if witness is None:
            self.reports.append(Report(self.family, check, n, "pass", ms=ms))
        else:
            self.reports.append(
                Report(
                    self.family,
                    check,
                    n,
                    "fail",
                    witness=witness,
                    expected=str(expected.coeff(witness)),
                    actual=str(actual.coeff(witness)),
                    ms=ms,
                )
            )

    def pairs(self, check: str, order: int, items):
        """items: iterable of (index, expected, actual)."""
        start = time.perf_counter()
        witness = exp = act = None
        for i, e, a in items:
            if e != a:
                witness, exp, act = i, e, a
                break
        ms = (time.perf_counter() - start) * 1000
        if witness is None:
            self.reports.append(Report(self.family, check, order, "pass", ms=ms))
        else:
            self.reports.append(
                Report(
                    self.family,
                    check,
                    order,
                    "fail",
                    witness=witness,
                    expected=str(exp),
                    actual=str(act),
                    ms=ms,
                )
            )


def _oracle_closed(fam: Statistic, n: int) -> TPoly:
    """Brute-force closed-path polynomial in the family's own convention."""
    if fam is Statistic.VALLEY0:
        counts: dict[int, int] = {}
        for p in enumerate_paths(n, 0):
            if p == "" or p.endswith("H"):
                k = stat_count(p, fam)
                counts[k] = counts.get(k, 0) + 1
        coeffs = [0] * (max(counts) + 1 if counts else 0)
        for k, c in counts.items():
            coeffs[k] = c
        return TPoly(coeffs)
    return marked_count(n, fam, 0)


def verify_family(fam: Statistic, oracle_max: int = 12, order: int = 64) -> list[Report]:
    oracle_max = min(oracle_max, paths.CLOSED_BOUND, order - 1)
    chk = _Checker(fam.value)
    spec = builtin_spec(fam)
    table = dp_run(spec, max(order, oracle_max + 1))
    dp_closed = closed_series(spec, order, table=table)
    dp_meander = meander_series(spec, order, table=table)

    # Brute force against the DP.
    chk.pairs(
        "oracle-dp-closed",
        oracle_max,
        (
            (n, _oracle_closed(fam, n), dp_closed.coeff(n))
            for n in range(oracle_max + 1)
        ),
    )
    open_max = min(oracle_max, OPEN_BOUND)
    chk.pairs(
        "oracle-dp-meander",
        open_max,
        (
            (n, marked_count(n, fam, None), dp_meander.coeff(n))
            for n in range(open_max + 1)
        ),
    )

    # Closed forms against the DP.
    cf = closedforms.cf_closed(fam, order)
    chk.series("closedform-dp-closed", cf, dp_closed)
    chk.series(
        "marks-closed",
        closedforms.cf_total_marks_closed(fam, order),
        dp_closed.dt_at1(),
    )
    if fam in (Statistic.ASCENT1, Statistic.DESCENT1):
        chk.series(
            "marks-meander",
            closedforms.cf_total_marks_meander(fam, order),
            dp_meander.dt_at1(),
        )

    # The small root annihilates the kernel quadratic.
    r2 = closedforms.r2_series(fam, order)
    c0, c1, c2 = closedforms.kernel_quadratic(fam, order)
    resid = c0 + c1 * r2 + c2 * r2 * r2
    chk.series(
        "kernel-quadratic",
        ZSeries.zero(resid.order),
        resid,
        upto=max(order - 2, 1),
    )

    # t = 1 forgets the statistic and leaves the plain path count.  The
    # valley f0 convention misses closed paths ending in D, so there the
    # check uses f0 + g0 = f0 + z*f1 (all closed paths).
    if fam is Statistic.VALLEY0:
        all_closed = (cf + closedforms._valley0_f1(order).shift(1)).eval_t(1)
    else:
        all_closed = cf.eval_t(1)
    chk.pairs(
        "t1-central-binomial",
        all_closed.order,
        (
            (n, closedforms.central_binomial(n), all_closed.coeff(n).constant_value())
            for n in range(all_closed.order)
        ),
    )

    # Level extraction, where a closed form exists.
    if fam is Statistic.ASCENT1:
        for layer in ("F", "G", "H"):
            for j in range(1, 6):
                chk.series(
                    f"level-{layer}{j}",
                    closedforms.cf_level(fam, layer, j, min(order, 32)),
                    level_series(spec, layer, j, min(order, 32), table=table),
                )
    if fam is Statistic.VALLEY0:
        for j in range(1, 6):
            chk.series(
                f"level-F{j}",
                closedforms.cf_level(fam, "F", j, min(order, 32)),
                level_series(spec, "F", j, min(order, 32), table=table),
            )
        # Appending H to any closed path lands it in the f0 class one step
        # later, so the f0 marks series records all closed valleys shifted.
        marks = closedforms.cf_total_marks_closed(fam, order)
        shift_max = min(oracle_max, paths.CLOSED_BOUND, order - 2)
        chk.pairs(
            "valley-shift-identity",
            shift_max,
            (
                (
                    n,
                    Fraction(
                        sum(stat_count(p, fam) for p in enumerate_paths(n, 0))
                    ),
                    marks.coeff(n + 1).constant_value(),
                )
                for n in range(shift_max + 1)
            ),
        )
    if fam is Statistic.DESCENT1:
        parts = closedforms._descent1_parts(order)
        chk.series("boundary-relations", cf, parts["total"])
    if fam is Statistic.UUDD4:
        chk.series(
            "boundary-f1",
            closedforms.uudd4_f1(order),
            level_series(spec, "F", 1, order, table=table),
        )
    return chk.reports


def verify_global(order: int = 64) -> list[Report]:
    """Cross-family checks."""
    chk = _Checker("all")
    # Reversal turns 1-ascents into 1-descents, so the bivariate closed
    # series of both families coincide.
    chk.series(
        "reversal-symmetry",
        closedforms.cf_closed(Statistic.ASCENT1, order),
        closedforms.cf_closed(Statistic.DESCENT1, order),
    )
    # Every automaton counts the same underlying closed paths at t = 1.
    reference = None
    for fam in FAMILIES:
        spec = builtin_spec(fam)
        weights = (
            VALLEY0_ALL_CLOSED_WEIGHTS if fam is Statistic.VALLEY0 else None
        )
        s = closed_series(spec, order, weights=weights).eval_t(1)
        if reference is None:
            reference = s
        else:
            chk.series(f"mass-conservation-{fam.value}", reference, s)
    return chk.reports


def run_verification(
    families=None, oracle_max: int = 12, order: int = 64
) -> list[Report]:
    fams = list(families) if families else list(FAMILIES)
    reports: list[Report] = []
    for fam in fams:
        reports.extend(verify_family(fam, oracle_max=oracle_max, order=order))
    if len(fams) == len(FAMILIES):
        reports.extend(verify_global(order=order))
    reports.sort(key=lambda r: (r.family, r.check))
    return reports
