"""Command-line front end.

Usage:
    legendre-iso census 13                 # one field, all checks
    legendre-iso sweep 5 2000 --format csv # one row per admissible q
    legendre-iso verify 5 2000             # exit status only
    legendre-iso iso 13 12 2               # is E_12 ~ E_2 over F_13?
    legendre-iso jinv 13 4                 # j, orbit and stratum of E_4

Field elements are integers in [0, q): the coefficients c_i of
c_0 + c_1 x + ... in F_p[x]/(m) encode as sum(c_i * p**i).  With ``--coeffs``
they are given as comma-separated coefficient lists instead ("3,1" is 3 + x).

Exit status: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Sequence

import click

from .census import CensusReport, admissible_q, h_stratify, sweep as run_sweep, run_census
from .curves import LegendreCurve, j_legendre, lambda_orbit
from .gf import FieldElement, FieldError, FieldSpec, field_of_order
from .iso import corollary32_iso, simplified_iso_witness

__all__ = ["cli", "main", "CENSUS_FIELDS", "SWEEP_FIELDS"]

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

SWEEP_FIELDS = (
    "q", "p", "k", "q_mod_24",
    "observed_Nq", "expected_Nq", "observed_fqbar", "expected_fqbar",
    "match",
)
CENSUS_FIELDS = SWEEP_FIELDS[:-1] + (
    "observed_h1", "observed_h2", "observed_h3", "observed_h4",
    "expected_h1", "expected_h2", "expected_h3", "expected_h4",
    "observed_NqH1", "observed_NqH23", "observed_NqH4",
    "expected_NqH1", "expected_NqH23", "expected_NqH4",
    "representatives", "all_match",
)
ISO_FIELDS = ("q", "lambda1", "lambda2", "isomorphic", "u", "r", "matched_case", "j1", "j2", "equal_j")
JINV_FIELDS = ("q", "lambda", "j", "orbit", "orbit_size", "stratum")

FORMATS = ("human", "csv", "json-lines")
format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="human", show_default=True,
    help="Output format; csv and json-lines keep a fixed field order.",
)


def census_record(report: CensusReport) -> dict:
    rec = {name: getattr(report, name) for name in SWEEP_FIELDS[:-1]}
    for prefix, values in (
        ("observed_h", report.observed_h_sizes),
        ("expected_h", report.expected_h_sizes),
    ):
        for i in range(4):
            rec[f"{prefix}{i + 1}"] = None if values is None else values[i]
    for prefix, values in (
        ("observed_NqH", report.observed_h_counts),
        ("expected_NqH", report.expected_h_counts),
    ):
        for i, suffix in enumerate(("1", "23", "4")):
            rec[prefix + suffix] = None if values is None else values[i]
    rec["representatives"] = list(report.representatives)
    rec["all_match"] = report.all_match
    return rec


def sweep_record(report: CensusReport) -> dict:
    rec = {name: getattr(report, name) for name in SWEEP_FIELDS[:-1]}
    rec["match"] = report.all_match
    return rec


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


class Emitter:
    """Writes records in one of the supported formats."""

    def __init__(self, fmt: str, fields: Sequence[str], out=None, rows: bool = False):
        self.fmt = fmt
        self.rows = rows
        self.fields = tuple(fields)
        self.out = out or sys.stdout
        self._header_done = False

    def emit(self, rec: dict) -> None:
        if self.fmt == "json-lines":
            self.out.write(json.dumps({f: rec[f] for f in self.fields}) + "\n")
        elif self.fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            if not self._header_done:
                writer.writerow(self.fields)
                self._header_done = True
            writer.writerow([_cell(rec[f]) for f in self.fields])
            self.out.write(buf.getvalue())
        elif self.rows:
            if not self._header_done:
                self.out.write("  ".join(f"{f:>{max(len(f), 5)}}" for f in self.fields) + "\n")
                self._header_done = True
            self.out.write("  ".join(f"{_cell(rec[f]):>{max(len(f), 5)}}" for f in self.fields) + "\n")
        else:
            width = max(len(f) for f in self.fields)
            for f in self.fields:
                self.out.write(f"{f:<{width}}  {_cell(rec[f])}\n")
            self.out.write("\n")


def _field(q: str) -> FieldSpec:
    try:
        n = int(q)
    except ValueError:
        raise click.UsageError(f"q must be an integer, got {q!r}")
    try:
        return field_of_order(n)
    except FieldError as exc:
        raise click.UsageError(f"inadmissible q = {n}: {exc}")


def _element(F: FieldSpec, text: str, coeffs: bool) -> FieldElement:
    try:
        if coeffs:
            return F.from_coeffs([int(c) for c in text.split(",")])
        return F.decode(int(text))
    except (ValueError, FieldError) as exc:
        raise click.UsageError(f"bad field element {text!r} for F_{F.q}: {exc}")


def _legendre(F: FieldSpec, text: str, coeffs: bool) -> LegendreCurve:
    lam = _element(F, text, coeffs)
    if not lam or lam == 1:
        raise click.UsageError(f"lambda = {text} is 0 or 1; the curve is singular")
    return LegendreCurve.of(lam)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli() -> None:
    """Isomorphism classes of Legendre curves y^2 = x(x-1)(x-lambda) over F_q."""


@cli.command()
@click.argument("q")
@format_option
def census(q: str, fmt: str) -> None:
    """Brute-force class census over F_q, compared with every closed form."""
    F = _field(q)
    report = run_census(F)
    Emitter(fmt, CENSUS_FIELDS).emit(census_record(report))
    sys.exit(EXIT_OK if report.all_match else EXIT_MISMATCH)


def _sweep(q_min: int, q_max: int, emitter: Emitter | None) -> int:
    if q_min > q_max:
        raise click.UsageError(f"empty range {q_min}..{q_max}")
    rows = mismatches = 0
    for report in run_sweep(admissible_q(q_min, q_max)):
        rows += 1
        mismatches += not report.all_match
        if emitter is not None:
            emitter.emit(sweep_record(report))
    summary = f"# {rows} fields checked, {mismatches} mismatches"
    click.echo(summary, err=emitter is not None and emitter.fmt != "human")
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


@cli.command()
@click.argument("q_min", type=int)
@click.argument("q_max", type=int)
@format_option
def sweep(q_min: int, q_max: int, fmt: str) -> None:
    """Census every prime power q in [Q_MIN, Q_MAX] with characteristic > 3."""
    emitter = Emitter(fmt, SWEEP_FIELDS, rows=True)
    sys.exit(_sweep(q_min, q_max, emitter))


@cli.command()
@click.argument("q_min", type=int)
@click.argument("q_max", type=int)
def verify(q_min: int, q_max: int) -> None:
    """Like sweep, but only prints the summary; the exit status is the result."""
    sys.exit(_sweep(q_min, q_max, None))


@cli.command()
@click.argument("q")
@click.argument("lambda1")
@click.argument("lambda2")
@click.option("--coeffs", is_flag=True, help="Read lambdas as comma-separated coefficient lists.")
@format_option
def iso(q: str, lambda1: str, lambda2: str, coeffs: bool, fmt: str) -> None:
    """Decide whether E_LAMBDA1 and E_LAMBDA2 are isomorphic over F_q."""
    F = _field(q)
    E1, E2 = _legendre(F, lambda1, coeffs), _legendre(F, lambda2, coeffs)
    oracle = simplified_iso_witness(E1, E2)
    criterion = corollary32_iso(E1, E2)
    j1, j2 = j_legendre(E1), j_legendre(E2)
    rec = {
        "q": F.q,
        "lambda1": int(E1.lam),
        "lambda2": int(E2.lam),
        "isomorphic": "yes" if oracle else "no",
        "u": int(oracle.params.u) if oracle else None,
        "r": int(oracle.params.r) if oracle else None,
        "matched_case": criterion.matched_case,
        "j1": int(j1),
        "j2": int(j2),
        "equal_j": "yes" if j1 == j2 else "no",
    }
    Emitter(fmt, ISO_FIELDS).emit(rec)
    sys.exit(EXIT_OK if bool(oracle) == bool(criterion) else EXIT_MISMATCH)


@cli.command()
@click.argument("q")
@click.argument("lam", metavar="LAMBDA")
@click.option("--coeffs", is_flag=True, help="Read lambda as a comma-separated coefficient list.")
@format_option
def jinv(q: str, lam: str, coeffs: bool, fmt: str) -> None:
    """j-invariant, lambda-orbit and H-stratum of E_LAMBDA over F_q."""
    F = _field(q)
    E = _legendre(F, lam, coeffs)
    orbit = [int(v) for v in lambda_orbit(E)]
    stratum = None
    if F.q % 4 == 1:
        stratum = f"H{h_stratify(F).stratum(int(E.lam))}"
    rec = {
        "q": F.q,
        "lambda": int(E.lam),
        "j": int(j_legendre(E)),
        "orbit": orbit,
        "orbit_size": len(orbit),
        "stratum": stratum,
    }
    Emitter(fmt, JINV_FIELDS).emit(rec)


def main(argv: Sequence[str] | None = None) -> None:
    cli.main(args=argv, prog_name="legendre-iso")


if __name__ == "__main__":
    main()
