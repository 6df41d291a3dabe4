"""Layered transition systems for dispersed Dyck paths, evaluated by exact DP.

Each statistic gets a small automaton whose states are (layer, level)
pairs.  Walking the automaton along a path is deterministic, so the dynamic
program over (length, layer, level) counts each path exactly once; a marked
transition contributes one power of t.  The resulting tables reproduce the
closed-form generating functions coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .paths import Statistic
from .series import T, TP_ONE, TP_ZERO, OutOfOrder, TPoly, ZSeries

_DELTA = {"U": 1, "D": -1, "H": 0}


class InvalidAutomaton(ValueError):
    """The transition table violates a structural invariant."""


@dataclass(frozen=True)
class Transition:
    """One edge template, applicable at source levels lo..hi (hi None = inf)."""

    src: str
    dst: str
    step: str
    lo: int = 0
    hi: int | None = None
    marked: bool = False

    @property
    def delta(self) -> int:
        return _DELTA[self.step]

    def applies(self, level: int) -> bool:
        return level >= self.lo and (self.hi is None or level <= self.hi)


@dataclass(frozen=True)
class AutomatonSpec:
    name: str
    layers: tuple[str, ...]
    start: str
    transitions: tuple[Transition, ...]
    closed_weights: dict[str, TPoly] = field(default_factory=dict)
    meander_weights: dict[str, TPoly] = field(default_factory=dict)

    def __post_init__(self):
        for tr in self.transitions:
            if tr.src not in self.layers or tr.dst not in self.layers:
                raise InvalidAutomaton(f"unknown layer in {tr}")
            if tr.step not in _DELTA:
                raise InvalidAutomaton(f"bad step in {tr}")
            if tr.step == "H" and not (tr.lo == 0 and tr.hi == 0):
                raise InvalidAutomaton(f"H-transition must be pinned to level 0: {tr}")
            if tr.step == "D" and tr.lo < 1:
                raise InvalidAutomaton(f"D-transition needs source level >= 1: {tr}")
        # Determinism: at most one applicable transition per (layer, step,
        # source level); this is what makes DP counts equal path counts.
        groups: dict[tuple[str, str], list[Transition]] = {}
        for tr in self.transitions:
            groups.setdefault((tr.src, tr.step), []).append(tr)
        for (src, step), trs in groups.items():
            for i, a in enumerate(trs):
                for b in trs[i + 1 :]:
                    a_hi = a.hi if a.hi is not None else float("inf")
                    b_hi = b.hi if b.hi is not None else float("inf")
                    if a.lo <= b_hi and b.lo <= a_hi:
                        raise InvalidAutomaton(
                            f"overlapping transitions from ({src}, {step}): {a} / {b}"
                        )

    def transitions_from(self, layer: str) -> tuple[Transition, ...]:
        return tuple(tr for tr in self.transitions if tr.src == layer)


@lru_cache(maxsize=None)
def builtin_spec(stat: Statistic) -> AutomatonSpec:
    """The transition system encoding the given statistic."""
    t = T
    one = TP_ONE
    if stat is Statistic.ASCENT1:
        return AutomatonSpec(
            name="ascent1",
            layers=("F", "G", "H"),
            start="F",
            transitions=(
                Transition("F", "F", "H", 0, 0),
                Transition("F", "G", "U"),
                Transition("G", "H", "U"),
                Transition("H", "H", "U"),
                Transition("F", "F", "D", 1),
                Transition("G", "F", "D", 1, marked=True),
                Transition("H", "F", "D", 1),
            ),
            closed_weights={"F": one},
            meander_weights={"F": one, "G": t, "H": one},
        )
    if stat is Statistic.DESCENT1:
        return AutomatonSpec(
            name="descent1",
            layers=("F", "G", "H"),
            start="F",
            transitions=(
                Transition("F", "F", "H", 0, 0),
                Transition("G", "G", "H", 0, 0),
                Transition("H", "H", "H", 0, 0),
                Transition("F", "F", "U"),
                Transition("G", "F", "U", marked=True),
                Transition("H", "F", "U"),
                Transition("F", "G", "D", 1),
                Transition("G", "H", "D", 1),
                Transition("H", "H", "D", 1),
            ),
            closed_weights={"F": one, "G": t, "H": one},
            meander_weights={"F": one, "G": t, "H": one},
        )
    if stat is Statistic.VALLEY0:
        return AutomatonSpec(
            name="valley0",
            layers=("F", "G"),
            start="F",
            transitions=(
                Transition("F", "F", "H", 0, 0),
                Transition("G", "F", "H", 0, 0),
                Transition("F", "F", "U"),
                Transition("G", "F", "U", 0, 0, marked=True),
                Transition("F", "G", "D", 1, 1),
                Transition("F", "F", "D", 2),
            ),
            closed_weights={"F": one},
            meander_weights={"F": one, "G": one},
        )
    if stat is Statistic.UUDD4:
        return AutomatonSpec(
            name="uudd4",
            layers=("F", "G", "H", "K"),
            start="F",
            transitions=(
                Transition("F", "F", "H", 0, 0),
                Transition("F", "G", "U"),
                Transition("K", "G", "U"),
                Transition("G", "H", "U"),
                Transition("H", "H", "U"),
                Transition("F", "F", "D", 1),
                Transition("G", "F", "D", 1),
                Transition("H", "K", "D", 1),
                Transition("K", "F", "D", 1, marked=True),
            ),
            closed_weights={"F": one},
            meander_weights={"F": one, "G": one, "H": one, "K": one},
        )
    raise ValueError(f"unknown statistic {stat!r}")


# All closed paths for the valley automaton: the paper-convention F layer
# holds only the empty path and paths ending in H, while closed paths
# ending in D sit in G.
VALLEY0_ALL_CLOSED_WEIGHTS = {"F": TP_ONE, "G": TP_ONE}


class CoeffTable:
    """DP output: TPoly entries indexed by (length, layer, level)."""

    def __init__(self, spec: AutomatonSpec, rows):
        self.spec = spec
        self._rows = rows

    @property
    def order(self) -> int:
        return len(self._rows)

    def entry(self, n: int, layer: str, level: int) -> TPoly:
        if not 0 <= n < len(self._rows):
            raise OutOfOrder(f"length {n} beyond table order {self.order}")
        return self._rows[n].get((layer, level), TP_ZERO)

    def row(self, n: int):
        if not 0 <= n < len(self._rows):
            raise OutOfOrder(f"length {n} beyond table order {self.order}")
        return self._rows[n]


def dp_run(spec: AutomatonSpec, order: int) -> CoeffTable:
    """Fill the table for lengths 0 .. order-1 by exact dynamic programming."""
    if order < 1:
        raise ValueError("order must be >= 1")
    by_layer = {layer: spec.transitions_from(layer) for layer in spec.layers}
    rows = [{(spec.start, 0): TP_ONE}]
    t = T
    for _ in range(1, order):
        prev = rows[-1]
        cur: dict[tuple[str, int], TPoly] = {}
        for (layer, level), val in prev.items():
            for tr in by_layer[layer]:
                if not tr.applies(level):
                    continue
                contrib = val * t if tr.marked else val
                key = (tr.dst, level + tr.delta)
                if key in cur:
                    cur[key] = cur[key] + contrib
                else:
                    cur[key] = contrib
        rows.append(cur)
    return CoeffTable(spec, rows)


def _table(spec: AutomatonSpec, order: int, table: CoeffTable | None) -> CoeffTable:
    if table is not None and table.order >= order:
        return table
    return dp_run(spec, order)


def closed_series(
    spec: AutomatonSpec,
    order: int,
    table: CoeffTable | None = None,
    weights: dict[str, TPoly] | None = None,
) -> ZSeries:
    """Weighted count of paths ending at level 0, as a series in z."""
    tab = _table(spec, order, table)
    w = weights if weights is not None else spec.closed_weights
    out = []
    for n in range(order):
        acc = TP_ZERO
        for layer, wl in w.items():
            e = tab.entry(n, layer, 0)
            if e:
                acc = acc + wl * e
        out.append(acc)
    return ZSeries(out)


def meander_series(
    spec: AutomatonSpec,
    order: int,
    table: CoeffTable | None = None,
    weights: dict[str, TPoly] | None = None,
) -> ZSeries:
    """Weighted count of paths with arbitrary endpoint, as a series in z."""
    tab = _table(spec, order, table)
    w = weights if weights is not None else spec.meander_weights
    out = []
    for n in range(order):
        acc = TP_ZERO
        for (layer, _level), e in tab.row(n).items():
            wl = w.get(layer)
            if wl is not None and e:
                acc = acc + wl * e
        out.append(acc)
    return ZSeries(out)


def level_series(
    spec: AutomatonSpec,
    layer: str,
    level: int,
    order: int,
    table: CoeffTable | None = None,
) -> ZSeries:
    """The series of table entries at a fixed (layer, level)."""
    if level < 0:
        raise ValueError("level must be >= 0")
    tab = _table(spec, order, table)
    return ZSeries([tab.entry(n, layer, level) for n in range(order)])
