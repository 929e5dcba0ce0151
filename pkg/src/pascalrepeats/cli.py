"""Command-line surface: the only module with side effects.

Subcommands: zeta, search, family, curve, census, intersect, verify,
plot. Output goes to standard output in json, csv, or text form;
diagnostics go to standard error; exit status is 0 on success and
nonzero on domain or cache errors. Identical configuration produces
byte-identical output regardless of worker count. Any number that may
exceed 64 bits is serialized as a decimal string.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import TextIO

from . import census as census_mod
from . import curves as curves_mod
from .combinatorics import binomial
from .errors import CacheError, PreconditionError, ZeroPolynomialError
from .polynomials import format_bipoly
from .ratios import ShiftPair, isolate_zeta
from .search import Solution, equality_check, family_member, search

FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class RunConfig:
    """Parsed and validated invocation; every field the dispatcher needs."""

    command: str
    a: int | None = None
    b: int | None = None
    a2: int | None = None
    b2: int | None = None
    y_max: int | None = None
    x_max: int | None = None
    i_max: int | None = None
    t: int | None = None
    t_max: int | None = None
    m_min: int | None = None
    precision: Fraction | None = None
    fmt: str = "text"
    cache: str | None = None
    workers: int = 1
    with_certificate: bool = False
    y_lo: int | None = None
    y_hi: int | None = None
    y_step: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        if self.workers < 1:
            raise PreconditionError(f"workers must be >= 1, got {self.workers}")
        if self.precision is not None and self.precision <= 0:
            raise PreconditionError("precision must be a positive rational")
        if self.fmt not in FORMATS:
            raise PreconditionError(f"unknown format {self.fmt!r}")


def _parse_fraction(text: str) -> Fraction:
    try:
        if "/" in text:
            return Fraction(text)
        return Fraction(Decimal(text))
    except (ValueError, ArithmeticError) as exc:
        raise PreconditionError(f"cannot parse {text!r} as a rational") from exc


def _decimal_sig(q: Fraction, digits: int = 15) -> str:
    """Decimal rendering with the given significant digits (display only)."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def _decimal_fixed(q: Fraction, places: int = 12) -> str:
    """Fixed-point decimal rendering, exact rational rounding to even."""
    scale = 10**places
    scaled = round(q * scale)
    sign = "-" if scaled < 0 else ""
    mag = abs(scaled)
    return f"{sign}{mag // scale}.{mag % scale:0{places}d}"


# ---------------------------------------------------------------------------
# Solution serialization and the JSON-lines cache.
# ---------------------------------------------------------------------------


def solution_to_dict(s: Solution) -> dict:
    return {
        "a": s.shift.a,
        "b": s.shift.b,
        "x": str(s.x),
        "y": str(s.y),
        "value": str(s.value),
        "trivial": s.trivial,
    }


def _solution_from_dict(record: object, line: int) -> Solution:
    if not isinstance(record, dict):
        raise CacheError("record is not a JSON object", line)
    expected = {"a", "b", "x", "y", "value", "trivial"}
    if set(record) != expected:
        raise CacheError(f"record keys {sorted(record)} != {sorted(expected)}", line)
    try:
        shift = ShiftPair(record["a"], record["b"])
        x, y, value = int(record["x"]), int(record["y"]), int(record["value"])
        trivial = record["trivial"]
    except (PreconditionError, ValueError, TypeError) as exc:
        raise CacheError(f"malformed record fields: {exc}", line) from exc
    if not isinstance(trivial, bool):
        raise CacheError("trivial field must be a boolean", line)
    try:
        ok = equality_check(x, y, shift)
    except PreconditionError as exc:
        raise CacheError(f"record outside the solution domain: {exc}", line) from exc
    if not ok:
        raise CacheError(f"C({x},{y}) != C({x - shift.a},{y + shift.b}): not a solution", line)
    if binomial(x, y) != value:
        raise CacheError(f"stored value does not equal C({x},{y})", line)
    if trivial != (value <= 1):
        raise CacheError("trivial flag contradicts the value", line)
    return Solution(shift, x, y, value, trivial)


def append_solutions(path: str, solutions: list[Solution]) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for s in solutions:
            fh.write(json.dumps(solution_to_dict(s)) + "\n")


def read_solutions(path: str) -> list[Solution]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text:
                continue
            try:
                record = json.loads(text)
            except json.JSONDecodeError as exc:
                raise CacheError(f"invalid JSON: {exc.msg}", line_no) from exc
            out.append(_solution_from_dict(record, line_no))
    return out


def cache_roundtrip(path: str, solutions: list[Solution]) -> list[Solution]:
    """Append the solutions as JSON lines, then read back and re-verify."""
    append_solutions(path, solutions)
    return read_solutions(path)


# ---------------------------------------------------------------------------
# Output helpers.
# ---------------------------------------------------------------------------


def _emit_json(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _emit_csv(header: list[str], rows: list[list[str]], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _no_csv(command: str) -> None:
    raise PreconditionError(f"csv output is not supported for {command!r}")


def _emit_solutions(solutions: list[Solution], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        _emit_json([solution_to_dict(s) for s in solutions], out)
    elif fmt == "csv":
        rows = [
            [str(s.shift.a), str(s.shift.b), str(s.x), str(s.y), str(s.value), str(s.trivial).lower()]
            for s in solutions
        ]
        _emit_csv(["a", "b", "x", "y", "value", "trivial"], rows, out)
    else:
        for s in solutions:
            suffix = " (trivial)" if s.trivial else ""
            out.write(f"x={s.x} y={s.y} value={s.value}{suffix}\n")
        out.write(f"{len(solutions)} solution(s)\n")


# ---------------------------------------------------------------------------
# Per-command execution.
# ---------------------------------------------------------------------------


def _shift_of(config: RunConfig) -> ShiftPair:
    if config.a is None or config.b is None:
        raise PreconditionError("this command needs --a and --b")
    return ShiftPair(config.a, config.b)


def _run_zeta(config: RunConfig, out: TextIO) -> None:
    shift = _shift_of(config)
    eps = config.precision if config.precision is not None else Fraction(1, 10**12)
    interval = isolate_zeta(shift, eps)
    decimal = _decimal_sig(interval.midpoint)
    if config.fmt == "json":
        _emit_json(
            {
                "a": shift.a,
                "b": shift.b,
                "lo": f"{interval.lo.numerator}/{interval.lo.denominator}",
                "hi": f"{interval.hi.numerator}/{interval.hi.denominator}",
                "decimal": decimal,
            },
            out,
        )
    elif config.fmt == "csv":
        _no_csv("zeta")
    else:
        out.write(f"lo = {interval.lo}\n")
        out.write(f"hi = {interval.hi}\n")
        out.write(f"decimal = {decimal}\n")


def _run_search(config: RunConfig, out: TextIO) -> None:
    shift = _shift_of(config)
    if config.y_max is None:
        raise PreconditionError("search needs --y-max")
    solutions = search(shift, config.y_max, workers=config.workers)
    if config.cache is not None:
        append_solutions(config.cache, solutions)
    _emit_solutions(solutions, config.fmt, out)


def _run_family(config: RunConfig, out: TextIO) -> None:
    if config.i_max is None or config.i_max < 1:
        raise PreconditionError("family needs --i-max >= 1")
    members = [family_member(i) for i in range(1, config.i_max + 1)]
    if config.fmt == "json":
        _emit_json(
            [{"i": m.i, "n": str(m.n), "k": str(m.k), "value": str(m.value)} for m in members],
            out,
        )
    elif config.fmt == "csv":
        rows = [[str(m.i), str(m.n), str(m.k), str(m.value)] for m in members]
        _emit_csv(["i", "n", "k", "value"], rows, out)
    else:
        for m in members:
            out.write(f"i={m.i} n={m.n} k={m.k} value={m.value}\n")


def _run_curve(config: RunConfig, out: TextIO) -> None:
    shift = _shift_of(config)
    curve = curves_mod.build_curve(shift)
    top = curves_mod.top_form(shift)
    base = {
        "a": shift.a,
        "b": shift.b,
        "degree": shift.degree,
        "curve": format_bipoly(curve),
        "top_form": format_bipoly(top),
        "finiteness": curves_mod.classify_finiteness(shift).value,
    }
    if config.fmt == "csv":
        _no_csv("curve")
    if not config.with_certificate:
        if config.fmt == "json":
            _emit_json(base, out)
        else:
            out.write(f"F(x,y) = {base['curve']}\n")
            out.write(f"top form = {base['top_form']}\n")
            out.write(f"degree = {base['degree']}\n")
            out.write(f"finiteness = {base['finiteness']}\n")
        return
    cert = curves_mod.certify(shift)
    if config.fmt == "json":
        payload = {"curve": base["curve"], **cert.to_json_dict()}
        _emit_json(payload, out)
    else:
        out.write(f"F(x,y) = {base['curve']}\n")
        out.write(f"degree = {cert.degree}\n")
        out.write(f"affine_nonsingular = {cert.affine_nonsingular.value}\n")
        out.write(f"infinity_nonsingular = {cert.infinity_nonsingular.value}\n")
        out.write(f"genus = {cert.genus}\n")
        out.write(f"irreducible = {cert.irreducible}\n")
        out.write(f"finiteness = {cert.finiteness.value}\n")


def _run_census(config: RunConfig, out: TextIO) -> None:
    single = config.t is not None
    ranged = config.t_max is not None or config.m_min is not None
    if single == ranged:
        raise PreconditionError("census needs either --t, or both --t-max and --m-min")
    if single:
        records = [census_mod.multiplicity(config.t)]
    else:
        if config.t_max is None or config.m_min is None:
            raise PreconditionError("census scan needs both --t-max and --m-min")
        records = census_mod.scan_high_multiplicity(config.t_max, config.m_min)
    if config.fmt == "json":
        payload = [r.to_json_dict() for r in records]
        _emit_json(payload[0] if single else payload, out)
    elif config.fmt == "csv":
        rows = [[str(r.t), str(r.count)] for r in records]
        _emit_csv(["t", "count"], rows, out)
    else:
        for r in records:
            occ = " ".join(f"({n},{k})" for n, k in r.occurrences)
            out.write(f"t={r.t} count={r.count} occurrences: {occ}\n")


def _run_intersect(config: RunConfig, out: TextIO) -> None:
    if None in (config.a, config.b, config.a2, config.b2):
        raise PreconditionError("intersect needs --a1 --b1 --a2 --b2")
    if config.x_max is None:
        raise PreconditionError("intersect needs --x-max")
    s1 = ShiftPair(config.a, config.b)
    s2 = ShiftPair(config.a2, config.b2)
    points = census_mod.intersect_curves(s1, s2, config.x_max)
    if config.fmt == "json":
        _emit_json([{"x": str(x), "y": str(y)} for x, y in points], out)
    elif config.fmt == "csv":
        _emit_csv(["x", "y"], [[str(x), str(y)] for x, y in points], out)
    else:
        for x, y in points:
            out.write(f"x={x} y={y}\n")
        out.write(f"{len(points)} intersection point(s)\n")


def _run_verify(config: RunConfig, out: TextIO) -> None:
    if config.cache is None:
        raise PreconditionError("verify needs --cache")
    solutions = read_solutions(config.cache)
    if config.fmt == "json":
        _emit_json({"verified": len(solutions)}, out)
    elif config.fmt == "csv":
        _no_csv("verify")
    else:
        out.write(f"ok: {len(solutions)} record(s) verified\n")


def _run_plot(config: RunConfig, out: TextIO) -> None:
    shift = _shift_of(config)
    if config.y_lo is None or config.y_hi is None:
        raise PreconditionError("plot needs --y-min and --y-max")
    if config.y_step <= 0:
        raise PreconditionError("plot needs a positive --y-step")
    width = config.precision if config.precision is not None else Fraction(1, 10**13)
    ys = []
    y = Fraction(config.y_lo)
    while y <= config.y_hi:
        ys.append(y)
        y += config.y_step
    branches = curves_mod.real_branches(shift, ys, width=width)
    rows = []
    for y0, enclosures in branches:
        for enc in enclosures:
            rows.append([_decimal_fixed(y0), _decimal_fixed(enc.midpoint)])
    if config.fmt == "json":
        _emit_json([{"y": r[0], "x": r[1]} for r in rows], out)
    else:
        # text and csv coincide: plot data is CSV by nature
        _emit_csv(["y", "x"], rows, out)


_RUNNERS = {
    "zeta": _run_zeta,
    "search": _run_search,
    "family": _run_family,
    "curve": _run_curve,
    "census": _run_census,
    "intersect": _run_intersect,
    "verify": _run_verify,
    "plot": _run_plot,
}


def dispatch(config: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Route a validated config to its module operation.

    Returns the process exit status; domain and cache failures print a
    one-line diagnostic to the error stream and return 1.
    """
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    runner = _RUNNERS.get(config.command)
    if runner is None:
        err.write(f"error: unknown command {config.command!r}\n")
        return 2
    try:
        runner(config, out)
    except (PreconditionError, ZeroPolynomialError, CacheError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


# ---------------------------------------------------------------------------
# Argument parsing.
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pascalrepeats",
        description="Exact search and certification for repeated binomial coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser, default: str = "text") -> None:
        p.add_argument("--format", choices=FORMATS, default=default)

    p = sub.add_parser("zeta", help="isolate the limiting ratio for a shift")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--precision", type=str, default=None, help="enclosure width, e.g. 1e-12")
    add_format(p)

    p = sub.add_parser("search", help="all solutions with y up to a bound")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--y-max", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache", type=str, default=None, help="append solutions to this JSON-lines file")
    add_format(p)

    p = sub.add_parser("family", help="the Fibonacci family members")
    p.add_argument("--i-max", type=int, required=True)
    add_format(p)

    p = sub.add_parser("curve", help="the shift's plane curve, optionally certified")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--certify", action="store_true")
    add_format(p)

    p = sub.add_parser("census", help="multiplicity of one value or a high-multiplicity scan")
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--t-max", type=int, default=None)
    p.add_argument("--m-min", type=int, default=None)
    add_format(p)

    p = sub.add_parser("intersect", help="common solutions of two shift equations")
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--b1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--b2", type=int, required=True)
    p.add_argument("--x-max", type=int, required=True)
    add_format(p)

    p = sub.add_parser("verify", help="re-verify a solution cache")
    p.add_argument("--cache", type=str, required=True)
    add_format(p)

    p = sub.add_parser("plot", help="branch data of the curve as y,x rows")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--y-min", type=int, required=True)
    p.add_argument("--y-max", type=int, required=True)
    p.add_argument("--y-step", type=str, default="1")
    p.add_argument("--precision", type=str, default=None, help="enclosure width, e.g. 1e-13")
    add_format(p, default="csv")

    return parser


def parse_config(argv: list[str]) -> RunConfig:
    ns = build_parser().parse_args(argv)
    precision = _parse_fraction(ns.precision) if getattr(ns, "precision", None) else None
    return RunConfig(
        command=ns.command,
        a=getattr(ns, "a", None) if ns.command != "intersect" else ns.a1,
        b=getattr(ns, "b", None) if ns.command != "intersect" else ns.b1,
        a2=getattr(ns, "a2", None),
        b2=getattr(ns, "b2", None),
        y_max=getattr(ns, "y_max", None) if ns.command != "plot" else None,
        x_max=getattr(ns, "x_max", None),
        i_max=getattr(ns, "i_max", None),
        t=getattr(ns, "t", None),
        t_max=getattr(ns, "t_max", None),
        m_min=getattr(ns, "m_min", None),
        precision=precision,
        fmt=ns.format,
        cache=getattr(ns, "cache", None),
        workers=getattr(ns, "workers", 1),
        with_certificate=getattr(ns, "certify", False),
        y_lo=getattr(ns, "y_min", None) if ns.command == "plot" else None,
        y_hi=getattr(ns, "y_max", None) if ns.command == "plot" else None,
        y_step=_parse_fraction(getattr(ns, "y_step", "1")) if ns.command == "plot" else Fraction(1),
    )


def main(argv: list[str] | None = None) -> int:
    config = parse_config(argv if argv is not None else sys.argv[1:])
    return dispatch(config)


if __name__ == "__main__":
    sys.exit(main())
