"""Exact enumeration of dispersed Dyck paths and their statistics.

Three independent routes to the same bivariate series — brute-force path
enumeration, a layered-automaton dynamic program, and kernel-method closed
forms — with a harness that verifies they agree coefficient by coefficient.
"""

from . import backend
from .automaton import (
    AutomatonSpec,
    CoeffTable,
    Transition,
    builtin_spec,
    closed_series,
    dp_run,
    level_series,
    meander_series,
)
from .closedforms import (
    central_binomial,
    cf_closed,
    cf_level,
    cf_total_marks_closed,
    cf_total_marks_meander,
    kernel_quadratic,
    r2_series,
    w_series,
)
from .paths import Statistic, enumerate_paths, marked_count, path_is_valid, stat_count
from .series import T, TPoly, ZSeries
from .verify import Report, run_verification

__all__ = [
    "AutomatonSpec",
    "CoeffTable",
    "Report",
    "Statistic",
    "T",
    "TPoly",
    "Transition",
    "ZSeries",
    "backend",
    "builtin_spec",
    "central_binomial",
    "cf_closed",
    "cf_level",
    "cf_total_marks_closed",
    "cf_total_marks_meander",
    "closed_series",
    "dp_run",
    "enumerate_paths",
    "kernel_quadratic",
    "level_series",
    "marked_count",
    "meander_series",
    "path_is_valid",
    "r2_series",
    "run_verification",
    "stat_count",
    "w_series",
]

__version__ = "0.1.0"
