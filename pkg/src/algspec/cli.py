"""Command-line front end: parse an expression, route it to the spectrum,
operational-form, instantaneous-frequency, or contrast machinery, and render
text or JSON.

Exit codes: 0 success, 1 input error (syntax, unsupported signal, bad
parameters, unreadable CSV), 2 numerical failure (root finding or partial
fractions did not converge).  All output is deterministic: floats are
rendered with 12 significant digits and JSON keys are fixed.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from .fouriercontrast import contrast_report
from .instfreq import PhiTrace, SampledSignal, phi_fitted, phi_symbolic
from .pipeline import SpectrumAnalysis, analyze
from .ratfield import RootFindingError
from .sigexpr import ExpressionError, SignalClass, classify, parse
from .weylode import format_equation

__all__ = ["CliConfig", "run", "main"]


@dataclass(frozen=True)
class CliConfig:
    command: str                 # spectrum | opform | instfreq | contrast | selftest
    expr: str | None = None
    csv_path: str | None = None
    window: int = 11
    degree: int = 3
    output: str = "text"         # text | json
    explain: bool = False
    at: float | None = None      # evaluation time for symbolic instfreq


# ---------------------------------------------------------------------------
# Rendering helpers


def _g12(x: float) -> str:
    if x == 0:
        return "0"
    return format(float(x), ".12g")


def _c12(z: complex) -> str:
    re, im = z.real, z.imag
    if im == 0:
        return _g12(re)
    itxt = "i" if abs(im) == 1 else f"{_g12(abs(im))}i"
    if re == 0:
        return itxt if im > 0 else "-" + itxt
    sign = "+" if im > 0 else "-"
    return f"{_g12(re)} {sign} {itxt}"


def _json_value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return _g12(v)
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_json_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ",".join(f"{json.dumps(k)}:{_json_value(x)}"
                              for k, x in v.items()) + "}"
    raise TypeError(f"unrenderable value {v!r}")


def _freq_line(freqs) -> str:
    if not freqs:
        return "frequencies: (none)"
    return "frequencies: " + " ".join(_g12(f) for f in freqs)


# ---------------------------------------------------------------------------
# Subcommands


def _spectrum_json(a: SpectrumAnalysis) -> str:
    spec = a.spectrum
    return _json_value({
        "frequencies": list(spec.frequencies),
        "sources": [{"re": s.location.real, "im": s.location.imag,
                     "kind": s.kind, "order": s.order}
                    for s in spec.sources],
        "infinite_singularity": spec.infinite_singularity,
    })


def _spectrum_text(a: SpectrumAnalysis, explain: bool) -> str:
    lines = []
    if explain:
        lines.append(f"class: {a.signal_class.value}")
        if a.system is not None:
            lines.append(f"equation: {format_equation(a.system)}")
            for pt in a.finite_points:
                lines.append(f"singular point {_c12(pt.location)}: "
                             f"{pt.kind}, {pt.refinement}")
            if a.infinity is None:
                lines.append("point at infinity: ordinary")
            else:
                lines.append(f"point at infinity: {a.infinity.kind}, "
                             f"{a.infinity.refinement}")
        elif a.rational is not None:
            lines.append(f"operational image: {a.rational.format()}")
            if a.spectrum.sources:
                for s in a.spectrum.sources:
                    lines.append(f"pole {_c12(s.location)}: order {s.order}")
            else:
                lines.append("poles: (none)")
    lines.append(_freq_line(a.spectrum.frequencies))
    lines.append("infinite singularity: "
                 + ("yes" if a.spectrum.infinite_singularity else "no"))
    return "\n".join(lines)


def _cmd_spectrum(cfg: CliConfig) -> str:
    a = analyze(parse(cfg.expr))
    if cfg.output == "json":
        return _spectrum_json(a)
    return _spectrum_text(a, cfg.explain)


def _cmd_opform(cfg: CliConfig) -> str:
    e = parse(cfg.expr)
    kind = classify(e)
    if kind not in (SignalClass.EXP_POLYNOMIAL, SignalClass.DIRAC):
        raise ExpressionError(
            "opform requires an exponential polynomial or the impulse")
    r = analyze(e).rational
    if cfg.output == "json":
        return _json_value({
            "numerator": r.num.format(),
            "denominator": r.den.format(),
            "strictly_proper": r.is_strictly_proper,
        })
    return r.format()


def _read_csv(path: str) -> SampledSignal:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or [c.strip() for c in rows[0]] != ["t", "x"]:
        raise ValueError("csv must start with a 't,x' header row")
    times, values = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 2:
            raise ValueError(f"csv line {lineno}: expected two columns")
        try:
            times.append(float(row[0]))
            values.append(float(row[1]))
        except ValueError:
            raise ValueError(f"csv line {lineno}: non-numeric value") from None
    return SampledSignal(tuple(times), tuple(values))


def _trace_text(trace: PhiTrace) -> str:
    lines = [f"method: {trace.method}", "t phi"]
    for t, p in zip(trace.times, trace.phi):
        lines.append(f"{_g12(t)} {'none' if p is None else _g12(p)}")
    return "\n".join(lines)


def _cmd_instfreq(cfg: CliConfig) -> str:
    if cfg.csv_path is not None:
        sig = _read_csv(cfg.csv_path)
        trace = phi_fitted(sig, window=cfg.window, degree=cfg.degree)
    else:
        e = parse(cfg.expr)
        value = phi_symbolic(e, cfg.at)
        trace = PhiTrace((cfg.at,), (value,), "symbolic")
    if cfg.output == "json":
        return _json_value(trace.as_dict())
    return _trace_text(trace)


def _cmd_contrast(cfg: CliConfig) -> str:
    report = contrast_report(parse(cfg.expr))
    if cfg.output == "json":
        return _json_value(report.as_dict())
    return report.to_text()


def _cmd_selftest(cfg: CliConfig) -> tuple[int, str]:
    from . import selftest
    lines, failures = selftest.run_all()
    return (0 if failures == 0 else 1), "\n".join(lines)


def run(config: CliConfig) -> tuple[int, str, str]:
    """Execute one command; returns (exit status, stdout, stderr)."""
    try:
        if config.command == "selftest":
            status, out = _cmd_selftest(config)
            return status, out, ""
        handler = {"spectrum": _cmd_spectrum, "opform": _cmd_opform,
                   "instfreq": _cmd_instfreq, "contrast": _cmd_contrast}
        return 0, handler[config.command](config), ""
    except RootFindingError as exc:
        return 2, "", f"error: numerical: {exc}"
    except (ValueError, OSError) as exc:
        return 1, "", f"error: input: {exc}"


# ---------------------------------------------------------------------------
# Argument parsing


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="algspec",
                description="Algebraic signal spectra via operational "
                            "calculus, with classical Fourier contrasts.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="frequency set of an expression")
    sp.add_argument("expr")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--explain", action="store_true",
                    help="show the defining equation or operational image "
                         "and the singularity classification")

    op = sub.add_parser("opform", help="rational operational image")
    op.add_argument("expr")
    op.add_argument("--json", action="store_true")

    pf = sub.add_parser("instfreq", help="instantaneous frequency")
    pf.add_argument("expr", nargs="?")
    pf.add_argument("--csv", metavar="FILE",
                    help="uniformly sampled data with a 't,x' header")
    pf.add_argument("--window", type=int, default=11)
    pf.add_argument("--degree", type=int, default=3)
    pf.add_argument("--at", type=float, metavar="T",
                    help="evaluation time for an expression input")
    pf.add_argument("--json", action="store_true")

    ct = sub.add_parser("contrast",
                        help="algebraic spectrum next to the Fourier view")
    ct.add_argument("expr")
    ct.add_argument("--json", action="store_true")

    sub.add_parser("selftest", help="run the built-in oracle checks")
    return p


def _config_from(ns: argparse.Namespace) -> CliConfig:
    if ns.command == "instfreq":
        if (ns.csv is None) == (ns.expr is None):
            raise _UsageError(
                "instfreq needs exactly one of an expression or --csv FILE")
        if ns.expr is not None and ns.at is None:
            raise _UsageError("expression input needs --at T")
    return CliConfig(
        command=ns.command,
        expr=getattr(ns, "expr", None),
        csv_path=getattr(ns, "csv", None),
        window=getattr(ns, "window", 11),
        degree=getattr(ns, "degree", 3),
        output="json" if getattr(ns, "json", False) else "text",
        explain=getattr(ns, "explain", False),
        at=getattr(ns, "at", None),
    )


def main(argv=None) -> int:
    try:
        ns = _build_parser().parse_args(argv)
        config = _config_from(ns)
    except _UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 1
    status, out, err = run(config)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
