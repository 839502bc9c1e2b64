"""Homogeneous ideals: sums, intersections, dimension, height, m-primarity.

The ambient ring is the polynomial ring standing in for the power-series
ring at the origin. Generators must be homogeneous, so all the dimension
statements below agree with the local ones. ``m`` is always
``(X_1, ..., X_n)``.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from typing import Sequence

from .errors import HypothesisError, InhomogeneousError, InvariantBreach, UsageError
from .groebner import GroebnerBasis, buchberger, ideal_membership
from .poly import GREVLEX, MonomialOrder, Polynomial, RingContext, elimination

EMPTY_DIM = -1
"""Krull dimension reported for the unit ideal, whose variety is empty."""


class Ideal:
    """A homogeneous ideal given by generators, with per-order basis caches."""

    def __init__(self, ring: RingContext, generators: Sequence[Polynomial], name: str | None = None):
        self.ring = ring
        self.name = name
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise UsageError(f"generator {g!r} is not a Polynomial")
            if g.ring != ring:
                raise UsageError(f"generator {g} lives in {g.ring}, not {ring}")
            if not g.is_homogeneous():
                label = f" of {name}" if name else ""
                raise InhomogeneousError(
                    f"generator{label} '{g}' is not homogeneous "
                    f"(degrees {sorted(g.degrees())}); only homogeneous ideals are supported")
            if g and g not in gens:
                gens.append(g)
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._bases: dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_basis(cls, basis: GroebnerBasis, name: str | None = None) -> Ideal:
        ideal = cls(basis.ring, basis.elements, name)
        ideal._bases[basis.order] = basis
        return ideal

    def __getstate__(self):
        # locks do not pickle; process pools get a cache-free copy
        return {"ring": self.ring, "name": self.name, "generators": self.generators}

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._bases = {}
        self._lock = threading.Lock()

    def basis(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        b = self._bases.get(order)
        if b is None:
            with self._lock:
                b = self._bases.get(order)
                if b is None:
                    b = buchberger(self.generators, order, ring=self.ring)
                    self._bases[order] = b
        return b

    def contains(self, f: Polynomial) -> bool:
        return ideal_membership(f, self.basis())

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def issubset(self, other: Ideal) -> bool:
        return all(other.contains(g) for g in self.generators)

    def __le__(self, other: Ideal) -> bool:
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.basis().elements == other.basis().elements

    def __hash__(self):
        return hash((self.ring, self.basis().elements))

    def __add__(self, other: Ideal) -> Ideal:
        return ideal_sum([self, other])

    def __mul__(self, other: Ideal) -> Ideal:
        return ideal_product(self, other)

    def is_unit(self) -> bool:
        return self.basis().is_unit()

    def is_zero(self) -> bool:
        return not self.generators

    def is_linear(self) -> bool:
        """Generated by linear forms, hence a prime (linear subspace) over every field."""
        return all(g.is_linear_form() for g in self.generators)

    def __repr__(self):
        label = f"{self.name} = " if self.name else ""
        return f"{label}({', '.join(map(str, self.generators))})"


def unit_ideal(ring: RingContext) -> Ideal:
    return Ideal(ring, [ring.constant(1)])


def maximal_ideal(ring: RingContext) -> Ideal:
    return Ideal(ring, ring.gens(), name="m")


def _check_rings(parts: Sequence[Ideal]) -> RingContext:
    if not parts:
        raise UsageError("need at least one ideal")
    ring = parts[0].ring
    for p in parts[1:]:
        if p.ring != ring:
            raise UsageError(f"ring mismatch: {p.ring} vs {ring}")
    return ring


def ideal_sum(parts: Sequence[Ideal]) -> Ideal:
    """Concatenate generators (duplicates dropped). No basis is computed."""
    ring = _check_rings(parts)
    if len(parts) == 1:
        return parts[0]
    gens = [g for p in parts for g in p.generators]
    return Ideal(ring, gens)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    ring = _check_rings([a, b])
    return Ideal(ring, [f * g for f in a.generators for g in b.generators])


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    """a ∩ b by eliminating T from T*a + (1 - T)*b.

    Every returned generator is re-checked for membership in both inputs.
    """
    ring = _check_rings([a, b])
    tname = "T"
    while tname in ring.variable_names:
        tname = "_" + tname
    big = RingContext(ring.field, (tname,) + ring.variable_names)
    shift = list(range(1, ring.n_vars + 1))
    T = big.var(0)
    one_minus_t = big.constant(1) - T
    gens = [T * f.change_ring(big, shift) for f in a.generators]
    gens += [one_minus_t * g.change_ring(big, shift) for g in b.generators]
    if not gens:
        return Ideal(ring, [])
    G = buchberger(gens, elimination(1), ring=big)
    kept = []
    for g in G.elements:
        if all(e[0] == 0 for e in g.terms):
            kept.append(Polynomial.from_terms(ring, [(e[1:], c) for e, c in g.terms.items()]))
    result = Ideal(ring, kept)
    for g in result.generators:
        if not (a.contains(g) and b.contains(g)):
            raise InvariantBreach(f"intersection generator {g} escapes an input ideal")
    return result


def krull_dimension(a: Ideal) -> int:
    """dim R/a from the grevlex leading-term ideal.

    The largest set S of variables such that no leading monomial is
    supported inside S. Returns :data:`EMPTY_DIM` for the unit ideal.
    """
    G = a.basis(GREVLEX)
    if G.is_unit():
        return EMPTY_DIM
    n = a.ring.n_vars
    supports = [frozenset(i for i, x in enumerate(m) if x) for m in G.leading_monomials]
    # only minimal supports matter
    supports = [s for s in supports if not any(t < s for t in supports)]
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            S = frozenset(S)
            if not any(s <= S for s in supports):
                return size
    return 0


def is_m_primary(a: Ideal) -> bool:
    """True iff dim R/a <= 0, i.e. a is m-primary or the unit ideal."""
    G = a.basis(GREVLEX)
    if G.is_unit():
        return True
    pure = set()
    for m in G.leading_monomials:
        nz = [i for i, x in enumerate(m) if x]
        if len(nz) == 1:
            pure.add(nz[0])
    return len(pure) == a.ring.n_vars


def height(a: Ideal) -> int:
    d = krull_dimension(a)
    if d == EMPTY_DIM:
        raise HypothesisError("the unit ideal has no height", kind="unit")
    return a.ring.n_vars - d


@dataclass(frozen=True)
class HeightProfile:
    dimensions: tuple[int, ...]
    heights: tuple[int, ...]
    c: int = field(init=False)
    min_dim: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "c", max(self.heights))
        object.__setattr__(self, "min_dim", min(self.dimensions))


def height_profile(primes: Sequence[Ideal]) -> HeightProfile:
    """Per-ideal dimension and height; ``c`` is the maximal height."""
    ring = _check_rings(primes)
    dims = []
    for idx, p in enumerate(primes):
        d = krull_dimension(p)
        if d == EMPTY_DIM:
            label = p.name or f"#{idx + 1}"
            raise HypothesisError(f"ideal {label} is the unit ideal", kind="unit")
        dims.append(d)
    n = ring.n_vars
    return HeightProfile(tuple(dims), tuple(n - d for d in dims))


def check_irredundant(primes: Sequence[Ideal]) -> list[tuple[int, int]]:
    """Pairs (i, j), 1-based and i != j, with I_i contained in I_j."""
    if primes:
        _check_rings(primes)
    bad = []
    for i, j in itertools.permutations(range(len(primes)), 2):
        if primes[i].issubset(primes[j]):
            bad.append((i + 1, j + 1))
    return sorted(bad)
