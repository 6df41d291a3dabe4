"""Command-line front end: series expansion, b-files, and verification."""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import closedforms, verify
from .automaton import builtin_spec, level_series, meander_series
from .paths import Statistic
from .series import SeriesError, ZSeries

FAMILY_NAMES = {f.value: f for f in Statistic}

MODES = ("closed", "meander", "marks-closed", "marks-meander")


class NonIntegerCoefficient(ValueError):
    """A b-file coefficient failed to be an integer after t-evaluation."""


def _parse_family(name: str) -> Statistic:
    try:
        return FAMILY_NAMES[name]
    except KeyError:
        raise click.UsageError(f"unknown family {name!r}")


def _parse_mode(mode: str):
    """Returns (kind, level) where level is set for 'level:<j>'."""
    if mode in MODES:
        return mode, None
    if mode.startswith("level:"):
        try:
            j = int(mode.split(":", 1)[1])
        except ValueError:
            raise click.UsageError(f"bad level in mode {mode!r}")
        if j < 0:
            raise click.UsageError("level must be >= 0")
        return "level", j
    raise click.UsageError(f"unknown mode {mode!r}")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"bad rational {text!r}")


def series_for(family: Statistic, mode: str, order: int) -> ZSeries:
    """The series a (family, mode) pair denotes.

    Closed paths and marks come from the closed forms; meanders and level
    slices come from the automaton DP (levels have no closed form for every
    family, and the two routes are verified to agree anyway).
    """
    kind, j = _parse_mode(mode)
    if kind == "closed":
        return closedforms.cf_closed(family, order)
    if kind == "meander":
        return meander_series(builtin_spec(family), order)
    if kind == "level":
        return level_series(builtin_spec(family), "F", j, order)
    if kind == "marks-closed":
        return closedforms.cf_total_marks_closed(family, order)
    # marks-meander
    try:
        return closedforms.cf_total_marks_meander(family, order)
    except closedforms.UnsupportedFamily as exc:
        raise click.UsageError(str(exc))


@click.group()
def main():
    """Exact series for dispersed Dyck path statistics."""


@main.command()
@click.option("--family", required=True, help="ascent1|descent1|valley0|uudd4")
@click.option("--mode", default="closed", show_default=True,
              help="closed|meander|level:<j>|marks-closed|marks-meander")
@click.option("--order", default=16, show_default=True, type=click.IntRange(min=1))
@click.option("--t", "t_spec", default="keep", show_default=True,
              help="'keep' for polynomials in t, or a rational p/q to evaluate")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
def expand(family, mode, order, t_spec, fmt):
    """Print one coefficient of the series per line."""
    fam = _parse_family(family)
    s = series_for(fam, mode, order)
    if t_spec != "keep":
        s = s.eval_t(_parse_rational(t_spec))
    if fmt == "json":
        payload = {
            "family": fam.value,
            "mode": mode,
            "order": order,
            "coeffs": [[str(f) for f in c.coeffs] for c in s.coeffs],
        }
        click.echo(json.dumps(payload))
        return
    for n in range(s.order):
        c = s.coeff(n)
        if t_spec != "keep":
            click.echo(f"{n}: {c.constant_value()}")
        else:
            click.echo(f"{n}: {c}")


@main.command()
@click.option("--family", required=True)
@click.option("--mode", default="closed", show_default=True)
@click.option("--order", default=16, show_default=True, type=click.IntRange(min=1))
@click.option("--t", "t_spec", default="1", show_default=True,
              help="rational value of the marker t")
def bfile(family, mode, order, t_spec):
    """Emit the OEIS b-file lines 'n a(n)' for n = 0 .. order-1."""
    fam = _parse_family(family)
    s = series_for(fam, mode, order).eval_t(_parse_rational(t_spec))
    lines = []
    for n in range(s.order):
        v = s.coeff(n).constant_value()
        if v.denominator != 1:
            raise click.ClickException(
                f"non-integer coefficient {v} at n={n}; "
                "this signals a formula transcription bug"
            )
        lines.append(f"{n} {v.numerator}")
    click.echo("\n".join(lines))


@main.command("verify")
@click.option("--family", "families", multiple=True,
              help="repeatable; default: all families")
@click.option("--oracle-max", default=12, show_default=True,
              type=click.IntRange(min=0))
@click.option("--order", default=64, show_default=True, type=click.IntRange(min=2))
def verify_cmd(families, oracle_max, order):
    """Run the three-way verification suite; exit 0 iff everything agrees."""
    if not families or "all" in families:
        fams = None
    else:
        fams = [_parse_family(f) for f in families]
    try:
        reports = verify.run_verification(fams, oracle_max=oracle_max, order=order)
    except SeriesError as exc:
        click.echo(f"FAIL internal: {exc}", err=True)
        sys.exit(1)
    ok = True
    for r in reports:
        click.echo(r.line(), err=True)
        ok = ok and r.ok
    click.echo(
        f"{'all checks passed' if ok else 'VERIFICATION FAILED'} "
        f"({len(reports)} checks)",
        err=True,
    )
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
