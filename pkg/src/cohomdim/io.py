"""Problem files and report serialization.

Problem file grammar (one declaration per line, ``#`` starts a comment)::

    ring: char=7 vars=[X1, X2, X3, X4]
    ideal I1: X1, X2
    ideal I2: X3 + 2*X4^2, X4
    base P: X1 - X3
    coeff-chars: 0, 2, 7
    dim-cap: 3

Polynomials use integers, variable names, ``+ - * ^``, parentheses and
rational literals ``p/q`` (characteristic 0 only).
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .fields import as_field
from .poly import Polynomial, RingContext

MAX_EXPONENT = 1000

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^()/,=\[\]:])
""", re.VERBOSE | re.ASCII)

MAX_DIGITS = 1000


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str, line: int, offset: int) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, offset + pos + 1,
                             ("integer", "name", "operator"))
        kind = m.lastgroup
        if kind == "int" and len(m.group()) > MAX_DIGITS:
            raise ParseError(f"integer literal longer than {MAX_DIGITS} digits", line, offset + pos + 1)
        if kind != "ws":
            out.append(Token(kind, m.group(), line, offset + pos + 1))
        pos = m.end()
    out.append(Token("eol", "", line, offset + len(text) + 1))
    return out


class _Cursor:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "name") and self.tok.text == text

    def take(self) -> Token:
        t = self.tok
        if t.kind != "eol":
            self.i += 1
        return t

    def fail(self, message: str, expected: tuple[str, ...]):
        t = self.tok
        found = "end of line" if t.kind == "eol" else repr(t.text)
        raise ParseError(f"{message}, found {found}", t.line, t.col, expected)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}", (repr(text),))
        return self.take()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            self.fail(f"expected {what}", (what,))
        return self.take()


_TERM_START = ("integer", "name", "'('", "'-'")


class _PolyParser:
    def __init__(self, cur: _Cursor, ring: RingContext):
        self.cur = cur
        self.ring = ring

    def expr(self) -> Polynomial:
        cur = self.cur
        result = self.term()
        while cur.at("+") or cur.at("-"):
            op = cur.take().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        cur = self.cur
        result = self.unary()
        while cur.at("*"):
            cur.take()
            result = result * self.unary()
        return result

    def unary(self) -> Polynomial:
        if self.cur.at("-"):
            self.cur.take()
            return -self.unary()
        if self.cur.at("+"):
            self.cur.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        cur = self.cur
        base = self.primary()
        if cur.at("^"):
            cur.take()
            t = cur.expect_kind("int", "integer exponent")
            e = int(t.text)
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} exceeds {MAX_EXPONENT}", t.line, t.col)
            if len(base) > 1 and e > 64:
                raise ParseError(f"exponent {e} too large for a non-monomial base", t.line, t.col)
            base = base ** e
        return base

    def primary(self) -> Polynomial:
        cur = self.cur
        t = cur.tok
        F = self.ring.field
        if t.kind == "int":
            cur.take()
            value = Fraction(int(t.text))
            if cur.at("/"):
                cur.take()
                den = cur.expect_kind("int", "integer denominator")
                if F.characteristic:
                    raise ParseError(f"rational literal in characteristic {F.characteristic}",
                                     t.line, t.col)
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.line, den.col)
                value = Fraction(int(t.text), int(den.text))
            return self.ring.constant(value if not F.characteristic else int(value))
        if t.kind == "name":
            cur.take()
            if t.text not in self.ring.variable_names:
                raise ParseError(f"unknown variable {t.text!r}", t.line, t.col,
                                 tuple(self.ring.variable_names))
            return self.ring.var(t.text)
        if cur.at("("):
            cur.take()
            inner = self.expr()
            cur.expect(")")
            return inner
        cur.fail("expected a term", _TERM_START)


@dataclass
class ProblemFile:
    characteristic: int
    variables: tuple[str, ...]
    ideals: dict[str, tuple[Polynomial, ...]] = field(default_factory=dict)
    bases: dict[str, tuple[Polynomial, ...]] = field(default_factory=dict)
    coeff_chars: tuple[int, ...] | None = None
    dim_cap: int | None = None

    @property
    def ring(self) -> RingContext:
        return RingContext(as_field(self.characteristic), self.variables)


_DECL = re.compile(r"\s*(ring|ideal|base|coeff-chars|dim-cap)\b", re.ASCII)


def _int_list(cur: _Cursor) -> list[int]:
    out = [int(cur.expect_kind("int", "integer").text)]
    while cur.at(","):
        cur.take()
        out.append(int(cur.expect_kind("int", "integer").text))
    return out


def _end(cur: _Cursor):
    if cur.tok.kind != "eol":
        cur.fail("unexpected trailing input", ("end of line",))


def parse_problem(text) -> ProblemFile:
    """Parse a problem file; every failure is a positioned :class:`ParseError`."""
    try:
        return _parse_problem(text)
    except RecursionError:
        raise ParseError("expression nested too deeply", 0, 0) from None


def _parse_problem(text) -> ProblemFile:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"invalid UTF-8 at byte {exc.start}", 0, 0) from None
    problem: ProblemFile | None = None
    ring: RingContext | None = None
    names: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _DECL.match(line)
        if m is None:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected a declaration", lineno, col,
                             ("ring:", "ideal NAME:", "base NAME:", "coeff-chars:", "dim-cap:"))
        keyword = m.group(1)
        cur = _Cursor(_tokenize(line[m.end():], lineno, m.end()))

        if keyword == "ring":
            if problem is not None:
                raise ParseError("ring declared twice", lineno, m.start(1) + 1)
            cur.expect(":")
            if not cur.at("char"):
                cur.fail("expected char=", ("char",))
            cur.take()
            cur.expect("=")
            ct = cur.expect_kind("int", "characteristic")
            try:
                F = as_field(int(ct.text))
            except ValueError as exc:
                raise ParseError(str(exc), ct.line, ct.col) from None
            if not cur.at("vars"):
                cur.fail("expected vars=", ("vars",))
            cur.take()
            cur.expect("=")
            cur.expect("[")
            vars_: list[str] = []
            while True:
                v = cur.expect_kind("name", "variable name")
                if v.text in vars_:
                    raise ParseError(f"duplicate variable {v.text!r}", v.line, v.col)
                vars_.append(v.text)
                if cur.at(","):
                    cur.take()
                    continue
                break
            cur.expect("]")
            _end(cur)
            ring = RingContext(F, tuple(vars_))
            problem = ProblemFile(F.characteristic, tuple(vars_))
            continue

        if problem is None or ring is None:
            raise ParseError("the ring must be declared first", lineno, m.start(1) + 1, ("ring:",))

        if keyword in ("ideal", "base"):
            nt = cur.expect_kind("name", "ideal name")
            if nt.text in names:
                raise ParseError(f"duplicate ideal name {nt.text!r}", nt.line, nt.col)
            names.add(nt.text)
            cur.expect(":")
            gens = []
            if cur.tok.kind != "eol":
                pp = _PolyParser(cur, ring)
                gens.append(pp.expr())
                while cur.at(","):
                    cur.take()
                    gens.append(pp.expr())
            _end(cur)
            target = problem.ideals if keyword == "ideal" else problem.bases
            target[nt.text] = tuple(gens)
        elif keyword == "coeff-chars":
            cur.expect(":")
            first = cur.tok
            chars = _int_list(cur)
            _end(cur)
            for k in chars:
                try:
                    as_field(k)
                except ValueError as exc:
                    raise ParseError(str(exc), first.line, first.col) from None
            problem.coeff_chars = tuple(chars)
        else:
            cur.expect(":")
            problem.dim_cap = int(cur.expect_kind("int", "integer").text)
            _end(cur)

    if problem is None:
        raise ParseError("missing ring declaration", 1, 1, ("ring:",))
    return problem


def print_problem(problem: ProblemFile) -> str:
    """Canonical text; ``parse_problem(print_problem(p)) == p``."""
    lines = [f"ring: char={problem.characteristic} vars=[{', '.join(problem.variables)}]"]
    for name, gens in problem.ideals.items():
        lines.append(f"ideal {name}: " + ", ".join(g.to_str() for g in gens))
    for name, gens in problem.bases.items():
        lines.append(f"base {name}: " + ", ".join(g.to_str() for g in gens))
    if problem.coeff_chars is not None:
        lines.append("coeff-chars: " + ", ".join(map(str, problem.coeff_chars)))
    if problem.dim_cap is not None:
        lines.append(f"dim-cap: {problem.dim_cap}")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def problem_digest(problem: ProblemFile) -> str:
    return hashlib.sha256(print_problem(problem).encode("utf-8")).hexdigest()


# reports

def _tool_version() -> str:
    from . import __version__
    return __version__


def report_to_dict(report) -> dict:
    """The machine schema, keys in fixed order."""
    keyed = lambda d: {str(k): v for k, v in d.items()}  # noqa: E731
    return {
        "ring": {"field": report.ring, "n_vars": report.n_vars, "base": report.base},
        "heights": {name: h for name, h in zip(report.prime_names, report.heights)},
        "c": report.c,
        "d": report.d,
        "t": report.t,
        "v": report.v,
        "n_primes": report.n_primes,
        "delta": {
            "counts": {str(s): n for s, n in enumerate(report.delta_counts)},
            "lambda_t": [list(x) for x in report.lambda_t],
            "lambda_t1": [list(x) for x in report.lambda_t1],
        },
        "w": keyed(report.w),
        "phi_coker": keyed(report.phi_coker),
        "bounds": {
            "faltings": report.bounds["faltings"],
            "hl": report.bounds["hl"],
            "sum": keyed(report.bounds["sum"]),
            "main": keyed(report.bounds["main"]),
        },
        "verdicts": {str(k): {"w": vd.w, "cd_le_v": vd.cd_le_v, "cd": vd.cd,
                              "conclusion": vd.conclusion, "statement": vd.statement}
                     for k, vd in report.verdicts.items()},
        "caveats": list(report.caveats),
        "tool_version": _tool_version(),
        "input_digest": report.input_digest,
    }


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _fmt_simplices(xs) -> str:
    return ", ".join("{" + ",".join(map(str, x)) + "}" for x in xs) or "(none)"


def report_text(report) -> str:
    out = []
    out.append("== hypotheses")
    out.append(f"ring        {report.ring}")
    if report.base:
        out.append(f"base prime  {report.base}  (d = dim R/P)")
    out.append(f"primes      {report.n_primes}: " +
               ", ".join(f"{n} (height {h})" for n, h in zip(report.prime_names, report.heights)))
    out.append(f"d = {report.d}, c = {report.c}, t = {report.t}, v = {report.v}")
    for cav in report.caveats:
        out.append(f"caveat      {cav}")
    out.append("== complex")
    out.append("simplices   " + ", ".join(f"dim {s}: {n}" for s, n in enumerate(report.delta_counts)))
    out.append(f"m-primary ({report.t + 1}-subsets)  " + _fmt_simplices(report.lambda_t))
    out.append(f"m-primary ({report.t + 2}-subsets)  " + _fmt_simplices(report.lambda_t1))
    out.append("== verdicts")
    for k, vd in report.verdicts.items():
        out.append(f"char {k}: w = {vd.w} (coker Φ = {report.phi_coker[k]})  {vd.statement}")
    for note in report.notes:
        out.append(f"note        {note}")
    out.append("== bounds")
    b = report.bounds
    out.append(f"all ideals     cd ≤ {b['faltings']}")
    out.append(f"prime ideals   cd ≤ {b['hl']}")
    for p, val in b["sum"].items():
        out.append(f"sums of {p + 1}      all: cd ≤ {val}" +
                   (f"   primes: cd ≤ {b['main'][p]}" if p in b["main"] else ""))
    return "\n".join(out) + "\n"


def emit_report(report, format: str = "text") -> bytes:
    if format == "machine":
        return (_dumps(report_to_dict(report)) + "\n").encode("utf-8")
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    return report_text(report).encode("utf-8")


def emit_multi(verdict, format: str = "text") -> bytes:
    if format == "machine":
        doc = {
            "d": verdict.d,
            "bases": [report_to_dict(r) for r in verdict.reports],
            "overall": {str(k): ("cd <= v" if ok else "cd > v") for k, ok in verdict.overall.items()},
        }
        return (_dumps(doc) + "\n").encode("utf-8")
    parts = [report_text(r) for r in verdict.reports]
    parts.append("== overall\n" + "".join(
        f"char {k}: {'cd ≤ v' if ok else 'cd > v'}\n" for k, ok in verdict.overall.items()))
    return "\n".join(parts).encode("utf-8")


def emit_search(outcome, format: str = "machine") -> bytes:
    doc = {
        "trials": outcome.trials,
        "skipped": outcome.skipped,
        "findings": [{"trial": f.trial, "seed": f.seed, "w": {str(k): v for k, v in f.w.items()},
                      "ideals": f.ideals} for f in outcome.findings],
    }
    if format == "machine":
        return (_dumps(doc) + "\n").encode("utf-8")
    lines = [f"{outcome.trials} trials, {outcome.skipped} skipped, "
             f"{len(outcome.findings)} findings"]
    for f in outcome.findings:
        lines.append(f"trial {f.trial} seed {f.seed}: w = {f.w}")
        lines.extend("    (" + ", ".join(g) + ")" for g in f.ideals)
    return ("\n".join(lines) + "\n").encode("utf-8")
