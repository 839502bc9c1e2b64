"""Exact coefficient arithmetic over GF(p) and Q.

Raw values are plain Python objects: ``int`` residues in ``[0, p)`` for
prime fields, :class:`fractions.Fraction` for the rationals.  Polynomial
and matrix code works on raw values through a :class:`FieldSpec`;
:class:`FieldElement` is the checked, operator-overloaded wrapper for
callers who want type safety across fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import UsageError

MAX_BITS = 62

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


Raw = Union[int, Fraction]


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p), or Q when ``characteristic == 0``."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if not isinstance(p, int) or isinstance(p, bool) or p < 0:
            raise UsageError(f"characteristic must be a non-negative integer, got {p!r}")
        if p != 0:
            if p.bit_length() > MAX_BITS:
                raise UsageError(f"characteristic {p} exceeds {MAX_BITS} bits")
            if not is_prime(p):
                raise UsageError(f"characteristic {p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __str__(self):
        return "QQ" if self.is_rational else f"GF({self.characteristic})"

    # raw-value arithmetic

    def zero(self) -> Raw:
        return Fraction(0) if self.is_rational else 0

    def one(self) -> Raw:
        return Fraction(1) if self.is_rational else 1

    def coerce(self, value) -> Raw:
        """Map an int, Fraction, FieldElement or ``"p/q"`` string into the field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise UsageError(f"element of {value.field} used in {self}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value)
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes in {self}")
            return value.numerator * pow(den, -1, p) % p
        if isinstance(value, int):
            return value % p
        raise UsageError(f"cannot coerce {value!r} into {self}")

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.characteristic:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        if self.characteristic:
            return (a - b) % self.characteristic
        return a - b

    def neg(self, a: Raw) -> Raw:
        if self.characteristic:
            return -a % self.characteristic
        return -a

    def mul(self, a: Raw, b: Raw) -> Raw:
        if self.characteristic:
            return a * b % self.characteristic
        return a * b

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        if self.characteristic:
            return _inverse_mod(a, self.characteristic)
        return 1 / a

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def element(self, value) -> FieldElement:
        return FieldElement(self, self.coerce(value))

    def format(self, a: Raw) -> str:
        return str(a)


def _inverse_mod(a: int, p: int) -> int:
    # extended Euclid; pow(a, -1, p) does the same in C but this keeps the
    # algorithm visible for the small-prime tests
    r0, r1 = p, a % p
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise ZeroDivisionError(f"{a} is not invertible modulo {p}")
    return s0 % p


@lru_cache(maxsize=None)
def field(characteristic: int) -> FieldSpec:
    """Cached constructor, so repeated lookups skip the primality test."""
    return FieldSpec(characteristic)


QQ = field(0)


def as_field(spec) -> FieldSpec:
    if isinstance(spec, FieldSpec):
        return spec
    return field(int(spec))


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: Raw

    def __post_init__(self):
        p = self.field.characteristic
        v = self.value
        if p:
            if not isinstance(v, int) or not 0 <= v < p:
                raise UsageError(f"{v!r} is not a reduced residue modulo {p}")
        elif not isinstance(v, Fraction):
            object.__setattr__(self, "value", Fraction(v))

    def _other(self, other) -> Raw:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise UsageError(f"cannot combine {self.field} and {other.field} elements")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if self.field.characteristic:
            return FieldElement(self.field, pow(self.value, e, self.field.characteristic))
        return FieldElement(self.field, self.value ** e)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field}({self.value})"


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_neg(a: FieldElement) -> FieldElement:
    return -a


def field_inverse(a: FieldElement) -> FieldElement:
    return a.inverse()
