"""Ground-truth enumeration of dispersed Dyck paths.

A path is a string over the steps U (up), D (down), H (horizontal).  The
running level starts at 0, must stay >= 0, and H is only allowed on level 0.
Everything here is brute force by design: statistics are counted straight
off the step sequence, so this module serves as the independent oracle for
the automaton and the closed forms.
"""

from __future__ import annotations

from collections import defaultdict
from enum import Enum
from itertools import groupby
from typing import Iterator

from .series import TPoly

# DFS enumeration stays comfortably sub-minute within these bounds.
CLOSED_BOUND = 16
OPEN_BOUND = 14


class LengthTooLarge(ValueError):
    """Requested length exceeds the enumeration bound."""


class Statistic(Enum):
    """The four path statistics, each marked by one power of t."""

    ASCENT1 = "ascent1"
    DESCENT1 = "descent1"
    VALLEY0 = "valley0"
    UUDD4 = "uudd4"


def path_is_valid(steps: str) -> bool:
    """True iff the step string is a dispersed Dyck path (any endpoint)."""
    level = 0
    for s in steps:
        if s == "U":
            level += 1
        elif s == "D":
            level -= 1
            if level < 0:
                return False
        elif s == "H":
            if level != 0:
                return False
        else:
            return False
    return True


def _bound_for(end: int | None) -> int:
    return CLOSED_BOUND if end == 0 else OPEN_BOUND


def enumerate_paths(n: int, end: int | None = 0) -> Iterator[str]:
    """Yield every valid path of length n ending at level ``end``.

    ``end=None`` means any endpoint (meanders / prefixes).  Paths come out
    in lexicographic step order with D < H < U.
    """
    if n < 0 or n > _bound_for(end):
        raise LengthTooLarge(f"length {n} beyond enumeration bound")
    if end is not None and end < 0:
        raise ValueError("end level must be >= 0")
    yield from _walk("", 0, n, end)


def _walk(prefix: str, level: int, remaining: int, end: int | None) -> Iterator[str]:
    if remaining == 0:
        if end is None or level == end:
            yield prefix
        return
    if end is not None:
        # Must be able to reach the target level; H at level 0 absorbs any
        # leftover steps, so descending to 0 first is always an option.
        if level - end > remaining and end != 0:
            return
        if level > remaining and end == 0:
            return
        if end - level > remaining:
            return
    if level >= 1:
        yield from _walk(prefix + "D", level - 1, remaining - 1, end)
    if level == 0:
        yield from _walk(prefix + "H", level, remaining - 1, end)
    yield from _walk(prefix + "U", level + 1, remaining - 1, end)


def _singleton_runs(steps: str, which: str) -> int:
    return sum(
        1 for s, grp in groupby(steps) if s == which and len(list(grp)) == 1
    )


def stat_count(steps: str, stat: Statistic) -> int:
    """Count the statistic directly from the step sequence.

    Runs (for 1-ascents/1-descents) are maximal and delimited by any other
    step or by the path boundary; a trailing singleton counts.
    """
    if stat is Statistic.ASCENT1:
        return _singleton_runs(steps, "U")
    if stat is Statistic.DESCENT1:
        return _singleton_runs(steps, "D")
    if stat is Statistic.VALLEY0:
        count = 0
        level = 0
        for i, s in enumerate(steps):
            level += 1 if s == "U" else -1 if s == "D" else 0
            if s == "D" and level == 0 and i + 1 < len(steps) and steps[i + 1] == "U":
                count += 1
        return count
    if stat is Statistic.UUDD4:
        return sum(1 for i in range(len(steps) - 3) if steps[i : i + 4] == "UUDD")
    raise ValueError(f"unknown statistic {stat!r}")


def marked_count(n: int, stat: Statistic, end: int | None = 0) -> TPoly:
    """Sum of t^{stat(path)} over every valid path of length n in the class."""
    counts: dict[int, int] = defaultdict(int)
    for p in enumerate_paths(n, end):
        counts[stat_count(p, stat)] += 1
    if not counts:
        return TPoly()
    coeffs = [0] * (max(counts) + 1)
    for k, c in counts.items():
        coeffs[k] = c
    return TPoly(coeffs)
