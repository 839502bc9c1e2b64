"""Command-line entry point.

Exit codes: 0 success, 1 hypothesis violation, 2 parse error, 3 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import analysis, complexes, homology, io, mv
from .errors import CohomDimError, HypothesisError, InvariantBreach, ParseError, UsageError
from .fields import as_field
from .groebner import buchberger
from .ideals import Ideal
from .poly import GREVLEX, LEX, polynomial_ring

EXIT_OK, EXIT_HYPOTHESIS, EXIT_PARSE, EXIT_BREACH = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(data: bytes):
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


def _ideals(problem: io.ProblemFile):
    ring = problem.ring
    primes = [Ideal(ring, gens, name=name) for name, gens in problem.ideals.items()]
    bases = [Ideal(ring, gens, name=name) for name, gens in problem.bases.items()]
    return primes, bases


def _run_analysis(problem: io.ProblemFile, chars, dim_cap, machine: bool) -> bytes:
    primes, bases = _ideals(problem)
    chars = chars or problem.coeff_chars or (problem.characteristic,)
    dim_cap = dim_cap if dim_cap is not None else problem.dim_cap
    workers = complexes.default_workers()
    fmt = "machine" if machine else "text"
    if len(bases) > 1:
        verdict = analysis.analyze_multi_base(primes, bases, chars, dim_cap, workers)
        return io.emit_multi(verdict, fmt)
    report = analysis.analyze(primes, bases[0] if bases else None, chars, dim_cap, workers)
    return io.emit_report(report, fmt)


def cmd_analyze(args) -> int:
    problem = io.parse_problem(_read(args.file))
    _write(_run_analysis(problem, args.coeff_chars, args.dim_cap, args.machine))
    return EXIT_OK


def cmd_homology(args) -> int:
    if args.complex:
        cx = complexes.parse_complex(_read(args.complex))
    else:
        cx = complexes.stock_complex(args.builtin)
    degrees = args.degrees if args.degrees is not None else homology.default_degrees(cx)
    prof = homology.reduced_betti(cx, args.char, degrees)
    lines = [f"H~_{s}({'QQ' if args.char == 0 else f'GF({args.char})'}) = {b}"
             for s, b in prof.reduced.items()]
    _write(("\n".join(lines) + "\n").encode())
    return EXIT_OK


def _parse_a(text: str):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"--a expects an integer or p/q, got {text!r}")


def cmd_example_hl(args) -> int:
    F = as_field(args.char)
    a = args.a
    ring = polynomial_ring(F, 6)
    primes = analysis.example_hl(a, ring)
    problem = io.ProblemFile(F.characteristic, ring.variable_names,
                             {p.name: p.generators for p in primes},
                             coeff_chars=tuple(args.coeff_chars) if args.coeff_chars else None)
    text = io.print_problem(problem)
    if args.emit:
        Path(args.emit).write_text(text, encoding="utf-8")
    if args.analyze:
        chars = args.coeff_chars or _dedupe([2, 0, F.characteristic])
        _write(_run_analysis(problem, chars, None, args.machine))
    elif not args.emit:
        _write(text.encode())
    return EXIT_OK


def _dedupe(xs):
    out = []
    for x in xs:
        if x not in out:
            out.append(x)
    return out


def cmd_bounds(args) -> int:
    d, c = args.d, args.c
    lines = [f"faltings  d - floor((d-1)/c)     = {mv.bound_faltings(d, c)}",
             f"hl        d - 1 - floor((d-2)/c) = {mv.bound_hl(d, c)}"]
    if args.p is not None:
        lines.append(f"sum       ... + p               = {mv.bound_sum(d, c, args.p)}")
        lines.append(f"main      ... + p               = {mv.bound_main(d, c, args.p)}")
    _write(("\n".join(lines) + "\n").encode())
    return EXIT_OK


def cmd_gb(args) -> int:
    problem = io.parse_problem(_read(args.file))
    gens = problem.ideals.get(args.ideal, problem.bases.get(args.ideal))
    if gens is None:
        raise UsageError(f"no ideal named {args.ideal!r}")
    order = LEX if args.order == "lex" else GREVLEX
    G = buchberger(gens, order, ring=problem.ring)
    _write(("\n".join(g.to_str(order) for g in G.elements) + "\n").encode())
    return EXIT_OK


def cmd_search(args) -> int:
    outcome = analysis.search_char_dependence(
        args.vars, args.height, args.primes, args.trials, args.seed,
        args.coeff_chars, base_char=args.char, workers=complexes.default_workers())
    _write(io.emit_search(outcome, "text" if args.text else "machine"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cohomdim", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a problem file")
    p.add_argument("file")
    p.add_argument("--coeff-chars", type=_int_list)
    p.add_argument("--dim-cap", type=int)
    p.add_argument("--machine", action="store_true", help="emit JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("homology", help="reduced Betti numbers of a complex")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--complex")
    g.add_argument("--builtin", help="full:N, sphere:N or rp2")
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--degrees", type=_int_list)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("example-hl", help="the six-prime RP^2 configuration")
    p.add_argument("--a", type=_parse_a, required=True)
    p.add_argument("--char", type=int, required=True)
    p.add_argument("--emit")
    p.add_argument("--analyze", action="store_true")
    p.add_argument("--coeff-chars", type=_int_list)
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_example_hl)

    p = sub.add_parser("bounds", help="evaluate the vanishing bounds")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--p", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gb", help="reduced Groebner basis of a named ideal")
    p.add_argument("file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("search", help="hunt for characteristic-dependent configurations")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--primes", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--coeff-chars", type=_int_list, default=[0, 2, 3, 5, 7])
    p.add_argument("--char", type=int, default=7, help="base field characteristic")
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=cmd_search)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantBreach as exc:
        print(f"internal invariant breach (bug): {exc}", file=sys.stderr)
        return EXIT_BREACH
    except HypothesisError as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (CohomDimError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
