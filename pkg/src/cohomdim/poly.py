"""Sparse multivariate polynomials over an exact field.

A polynomial is a dict from exponent tuples to nonzero raw coefficients.
Term order is not a property of the polynomial; it is supplied wherever
ordering matters (leading terms, printing, Groebner work).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, UsageError
from .fields import FieldElement, FieldSpec, Raw, as_field

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Monomial:
    exponents: Exponents

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))


def _grevlex_key(e: Exponents) -> tuple:
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex``, ``lex`` or ``elim`` (elimination of the first ``k`` variables).

    ``key(exponents)`` returns a tuple that sorts ascending in the order, so
    ``max(..., key=order.key)`` is the leading monomial.
    """

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise UsageError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.k < 1:
            raise UsageError("elimination order needs k >= 1")

    def key(self, e: Exponents) -> tuple:
        if self.kind == "grevlex":
            return _grevlex_key(e)
        if self.kind == "lex":
            return e
        return (_grevlex_key(e[:self.k]), _grevlex_key(e[self.k:]))

    def compare(self, a: Exponents, b: Exponents) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        return f"elim({self.k})" if self.kind == "elim" else self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


@dataclass(frozen=True)
class RingContext:
    field: FieldSpec
    variable_names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "field", as_field(self.field))
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        if not names:
            raise UsageError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names in {names}")
        if any(not n for n in names):
            raise UsageError("variable names must be nonempty")

    @property
    def n_vars(self) -> int:
        return len(self.variable_names)

    def index(self, name: str) -> int:
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise UsageError(f"unknown variable {name!r}") from None

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def constant(self, c) -> Polynomial:
        return Polynomial.from_terms(self, [((0,) * self.n_vars, c)])

    def var(self, i) -> Polynomial:
        """The variable with index ``i`` (0-based) or name ``i``."""
        if isinstance(i, str):
            i = self.index(i)
        e = [0] * self.n_vars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one()})

    def gens(self) -> list[Polynomial]:
        return [self.var(i) for i in range(self.n_vars)]

    def linear_form(self, coeffs: Sequence) -> Polynomial:
        """sum(coeffs[i] * x_i)."""
        if len(coeffs) != self.n_vars:
            raise UsageError("coefficient vector length differs from n_vars")
        terms = []
        for i, c in enumerate(coeffs):
            e = [0] * self.n_vars
            e[i] = 1
            terms.append((tuple(e), c))
        return Polynomial.from_terms(self, terms)

    def __str__(self):
        return f"{self.field}[{', '.join(self.variable_names)}]"


def polynomial_ring(characteristic, names: Iterable[str] | int) -> RingContext:
    """``polynomial_ring(7, 6)`` gives GF(7)[X1..X6]."""
    if isinstance(names, int):
        names = [f"X{i + 1}" for i in range(names)]
    return RingContext(as_field(characteristic), tuple(names))


class Polynomial:
    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingContext, terms: Mapping[Exponents, Raw]):
        # trusted constructor: terms already normalized, nonzero, reduced
        self.ring = ring
        self._terms = dict(terms)
        self._hash = None

    @classmethod
    def from_terms(cls, ring: RingContext, terms: Iterable[tuple]) -> Polynomial:
        """Normalize (exponents, coefficient) pairs: coerce, merge, drop zeros."""
        F = ring.field
        out: dict[Exponents, Raw] = {}
        for e, c in terms:
            if isinstance(e, Monomial):
                e = e.exponents
            e = tuple(int(x) for x in e)
            if len(e) != ring.n_vars or any(x < 0 for x in e):
                raise UsageError(f"bad exponent vector {e} for {ring}")
            c = F.coerce(c)
            if e in out:
                c = F.add(out[e], c)
            if c == 0:
                out.pop(e, None)
            else:
                out[e] = c
        return cls(ring, out)

    # basic views

    @property
    def terms(self) -> dict[Exponents, Raw]:
        return self._terms

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Exponents, Raw]]:
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(self.degrees())

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_linear_form(self) -> bool:
        return self.degrees() <= {1}

    def support(self) -> set[int]:
        """Indices of variables that occur."""
        return {i for e in self._terms for i, x in enumerate(e) if x}

    def leading_term(self, order: MonomialOrder = GREVLEX) -> tuple[Monomial, FieldElement]:
        if not self._terms:
            raise DomainError("the zero polynomial has no leading term")
        e = max(self._terms, key=order.key)
        return Monomial(e), FieldElement(self.ring.field, self._terms[e])

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Exponents:
        if not self._terms:
            raise DomainError("the zero polynomial has no leading term")
        return max(self._terms, key=order.key)

    def coefficient(self, e: Exponents) -> Raw:
        return self._terms.get(tuple(e), self.ring.field.zero())

    # arithmetic

    def _check(self, other: Polynomial):
        if not isinstance(other, Polynomial):
            raise UsageError(f"expected a Polynomial, got {type(other).__name__}")
        if other.ring != self.ring:
            raise UsageError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _lift(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = self.ring.field
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = F.add(out[e], c) if e in out else c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = self.ring.field
        out: dict[Exponents, Raw] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = F.mul(c1, c2)
                if e in out:
                    c = F.add(out[e], c)
                    if c == 0:
                        del out[e]
                        continue
                out[e] = c
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not polynomials")
        result = self.ring.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Raw) -> Polynomial:
        F = self.ring.field
        c = F.coerce(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {e: F.mul(x, c) for e, x in self._terms.items()})

    def mul_term(self, m: Exponents, c: Raw) -> Polynomial:
        F = self.ring.field
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(e, m)): F.mul(x, c)
                                      for e, x in self._terms.items()})

    def monic(self, order: MonomialOrder = GREVLEX) -> Polynomial:
        if not self._terms:
            return self
        F = self.ring.field
        lc = self._terms[self.leading_monomial(order)]
        return self.scale(F.inv(lc))

    def normalized(self) -> Polynomial:
        """Re-normalize from scratch. Identity on any valid polynomial."""
        return Polynomial.from_terms(self.ring, self._terms.items())

    def change_ring(self, ring: RingContext, index_map: Sequence[int]) -> Polynomial:
        """Move into ``ring``, sending variable i to variable ``index_map[i]``."""
        out = []
        for e, c in self._terms.items():
            new = [0] * ring.n_vars
            for i, x in enumerate(e):
                if x:
                    new[index_map[i]] += x
            out.append((tuple(new), c))
        return Polynomial.from_terms(ring, out)

    # comparison / display

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        """Canonical text form, parseable by the problem-file grammar."""
        if not self._terms:
            return "0"
        names = self.ring.variable_names
        F = self.ring.field
        p = F.characteristic
        pieces = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
            negative = False
            if p == 0 and c < 0:
                negative, c = True, -c
            if c == 1 and mono:
                body = mono
            else:
                body = f"{c}*{mono}" if mono else f"{c}"
            pieces.append(("- " if negative else "+ ") + body)
        s = " ".join(pieces)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r} in {self.ring})"


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f * g


def leading_term(f: Polynomial, order: MonomialOrder = GREVLEX) -> tuple[Monomial, FieldElement]:
    return f.leading_term(order)


def is_homogeneous(f: Polynomial) -> bool:
    return f.is_homogeneous()
