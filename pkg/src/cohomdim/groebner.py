"""Buchberger's algorithm, normal forms and reduced Groebner bases."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import UsageError
from .poly import GREVLEX, Exponents, MonomialOrder, Polynomial, RingContext


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


class _Reducer:
    """A monic basis element with its leading monomial precomputed."""

    __slots__ = ("lm", "terms")

    def __init__(self, lm, terms):
        self.lm = lm
        self.terms = terms


def _reduce(terms: dict, reducers: Sequence[_Reducer], order: MonomialOrder, F,
            choose: Callable | None = None) -> dict:
    """Full reduction of ``terms`` by monic ``reducers``.

    ``choose`` picks among the reducers whose leading monomial divides the
    current term; the default takes the first. Any choice gives the same
    result when the reducers form a Groebner basis.
    """
    p = dict(terms)
    r = {}
    keys: dict = {}

    def key(e):
        k = keys.get(e)
        if k is None:
            k = keys[e] = order.key(e)
        return k

    while p:
        m = max(p, key=key)
        c = p[m]
        candidates = [g for g in reducers if _divides(g.lm, m)]
        if not candidates:
            r[m] = c
            del p[m]
            continue
        g = candidates[0] if choose is None else choose(candidates)
        q = _sub(m, g.lm)
        for e, x in g.terms.items():
            e2 = tuple(a + b for a, b in zip(q, e))
            v = F.sub(p[e2], F.mul(c, x)) if e2 in p else F.neg(F.mul(c, x))
            if v == 0:
                p.pop(e2, None)
            else:
                p[e2] = v
    return r


def _monic(terms: dict, order: MonomialOrder, F) -> tuple[Exponents, dict]:
    lm = max(terms, key=order.key)
    inv = F.inv(terms[lm])
    return lm, {e: F.mul(c, inv) for e, c in terms.items()}


def _spoly_terms(f: _Reducer, g: _Reducer, F) -> dict:
    L = _lcm(f.lm, g.lm)
    qf, qg = _sub(L, f.lm), _sub(L, g.lm)
    out = {}
    for e, c in f.terms.items():
        out[tuple(a + b for a, b in zip(e, qf))] = c
    for e, c in g.terms.items():
        e2 = tuple(a + b for a, b in zip(e, qg))
        v = F.sub(out[e2], c) if e2 in out else F.neg(c)
        if v == 0:
            out.pop(e2, None)
        else:
            out[e2] = v
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingContext
    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    @property
    def leading_monomials(self) -> list[Exponents]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit(self) -> bool:
        """True iff the basis generates the whole ring."""
        return any(sum(m) == 0 for m in self.leading_monomials)

    def _reducers(self) -> list[_Reducer]:
        return [_Reducer(g.leading_monomial(self.order), g.terms) for g in self.elements]

    def normal_form(self, f: Polynomial, choose: Callable | None = None) -> Polynomial:
        return normal_form(f, self, choose)

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_membership(f, self)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self):
        return "{" + ", ".join(g.to_str(self.order) for g in self.elements) + "}"


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    F = f.ring.field
    lf, tf = _monic(f.terms, order, F)
    lg, tg = _monic(g.terms, order, F)
    return Polynomial(f.ring, _spoly_terms(_Reducer(lf, tf), _Reducer(lg, tg), F))


def normal_form(f: Polynomial, basis: GroebnerBasis,
                choose: Callable | None = None) -> Polynomial:
    """Unique remainder of ``f`` modulo the ideal of ``basis``."""
    if f.ring != basis.ring:
        raise UsageError(f"ring mismatch: {f.ring} vs {basis.ring}")
    F = f.ring.field
    return Polynomial(f.ring, _reduce(f.terms, basis._reducers(), basis.order, F, choose))


def ideal_membership(f: Polynomial, basis: GroebnerBasis) -> bool:
    return normal_form(f, basis).is_zero()


def reduce_by(f: Polynomial, polys: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
              choose: Callable | None = None) -> Polynomial:
    """Multivariate division remainder of ``f`` by an arbitrary list (not necessarily a basis)."""
    F = f.ring.field
    reducers = []
    for g in polys:
        if g:
            lm, t = _monic(g.terms, order, F)
            reducers.append(_Reducer(lm, t))
    return Polynomial(f.ring, _reduce(f.terms, reducers, order, F, choose))


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
               ring: RingContext | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Pairs are processed by the normal strategy (smallest lcm first) with
    the product and chain criteria. Output elements are monic and sorted
    by descending leading monomial.
    """
    gens = list(generators)
    if ring is None:
        if not gens:
            raise UsageError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise UsageError(f"ring mismatch: {g.ring} vs {ring}")
    F = ring.field

    G: list[_Reducer] = []
    active: list[_Reducer] = []
    pairs: set[tuple[int, int]] = set()

    def add(terms):
        lm, t = _monic(terms, order, F)
        g = _Reducer(lm, t)
        G.append(g)
        # a reducer whose leading monomial the new one divides is never needed
        active[:] = [a for a in active if not _divides(lm, a.lm)] + [g]
        j = len(G) - 1
        pairs.update((i, j) for i in range(j))

    for g in gens:
        if g:
            add(g.terms)

    def pair_key(ij):
        L = _lcm(G[ij[0]].lm, G[ij[1]].lm)
        return (order.key(L), ij)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        fi, fj = G[i], G[j]
        L = _lcm(fi.lm, fj.lm)
        # product criterion: coprime leading monomials
        if all(a == 0 or b == 0 for a, b in zip(fi.lm, fj.lm)):
            continue
        # chain criterion
        if any(k != i and k != j and _divides(G[k].lm, L)
               and (min(i, k), max(i, k)) not in pairs
               and (min(j, k), max(j, k)) not in pairs
               for k in range(len(G))):
            continue
        h = _reduce(_spoly_terms(fi, fj, F), active, order, F)
        if h:
            add(h)

    return GroebnerBasis(ring, order, tuple(_interreduce(G, order, F, ring)))


def _interreduce(G: list[_Reducer], order: MonomialOrder, F, ring) -> list[Polynomial]:
    minimal: list[_Reducer] = []
    for idx, g in enumerate(G):
        dominated = False
        for jdx, h in enumerate(G):
            if jdx == idx or not _divides(h.lm, g.lm):
                continue
            # among equal leading monomials keep the earliest
            if h.lm != g.lm or jdx < idx:
                dominated = True
                break
        if not dominated:
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = _reduce(g.terms, others, order, F)
        lm, t = _monic(r, order, F)
        reduced.append((order.key(lm), Polynomial(ring, t)))
    reduced.sort(key=lambda kp: kp[0], reverse=True)
    return [p for _, p in reduced]


def is_groebner_basis(basis: GroebnerBasis) -> bool:
    """Every S-polynomial reduces to zero against the basis."""
    els = basis.elements
    for a in range(len(els)):
        for b in range(a + 1, len(els)):
            s = s_polynomial(els[a], els[b], basis.order)
            if not normal_form(s, basis).is_zero():
                return False
    return True


def is_reduced(basis: GroebnerBasis) -> bool:
    """Monic, and no term of any element divisible by another element's leading monomial."""
    order = basis.order
    lms = basis.leading_monomials
    for idx, g in enumerate(basis.elements):
        if g.terms[lms[idx]] != 1:
            return False
        for jdx, lm in enumerate(lms):
            if jdx != idx and any(_divides(lm, e) for e in g.terms):
                return False
    return True
