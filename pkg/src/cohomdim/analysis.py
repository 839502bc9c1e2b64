"""Hypothesis checks and the verdict on the top nonvanishing local cohomology.

Given homogeneous primes ``I_1..I_n`` of height at most ``c`` in a
d-dimensional regular ring, put ``t = (d-2)//c`` and ``v = d-1-t``.  Then
``H^{v+1}_I(M)`` is a direct sum of ``w`` copies of ``H^d_m(M)`` with
``w = dim H~_{t-1}(Δ; k)``.  :func:`analyze` computes ``w`` twice (reduced
homology of Δ and the cokernel of the signed incidence map) and refuses to
report if the two disagree.
"""

from __future__ import annotations

import hashlib
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .complexes import SimplicialComplex, build_delta, non_simplex_layer
from .errors import HypothesisError, InvariantBreach, ParameterError, UsageError
from .fields import FieldElement, FieldSpec, as_field
from .homology import matrix_rank, reduced_betti_number, relative_betti_pair
from .ideals import EMPTY_DIM, Ideal, check_irredundant, krull_dimension
from .mv import bound_faltings, bound_hl, bound_main, bound_sum, phi_cokernel_dim, phi_map
from .poly import RingContext, polynomial_ring

log = logging.getLogger(__name__)

CAVEAT_PRIMALITY = "primality user-asserted"
CAVEAT_GEOMETRIC = "geometric irreducibility unverified for nonlinear inputs"


@dataclass
class Validation:
    ring: RingContext
    d: int
    dimensions: list[int]
    heights: list[int]
    c: int
    caveats: list[str] = field(default_factory=list)


def _label(ideal: Ideal, idx: int) -> str:
    return ideal.name or f"#{idx + 1}"


def validate_hypotheses(primes: Sequence[Ideal], base: Ideal | None = None) -> Validation:
    """Check the criterion's hypotheses and collect caveats.

    Raises :class:`HypothesisError` with ``kind`` one of ``"empty"``,
    ``"ring"``, ``"unit"``, ``"height"``, ``"dimension"``, ``"containment"``.
    Inhomogeneous generators are rejected earlier, when the :class:`Ideal`
    is built.
    """
    if not primes:
        raise HypothesisError("no prime ideals given", kind="empty")
    ring = primes[0].ring
    for p in list(primes) + ([base] if base is not None else []):
        if p.ring != ring:
            raise HypothesisError(f"ideal {p!r} lives in a different ring", kind="ring")

    dims = []
    for idx, p in enumerate(primes):
        dim = krull_dimension(p)
        if dim == EMPTY_DIM:
            raise HypothesisError(f"ideal {_label(p, idx)} is the unit ideal", kind="unit")
        dims.append(dim)
    n = ring.n_vars
    heights = [n - dim for dim in dims]

    if base is None:
        d = n
    else:
        d = krull_dimension(base)
        if d == EMPTY_DIM:
            raise HypothesisError("base ideal is the unit ideal", kind="unit")
    if d < 2:
        raise HypothesisError(f"d = {d}; the criterion needs d >= 2", kind="dimension")

    c = max(heights)
    for idx, (p, h) in enumerate(zip(primes, heights)):
        if h >= d:
            raise HypothesisError(
                f"ideal {_label(p, idx)} has height {h} >= d = {d} "
                f"(height = d means it is m-primary); every height must be < d",
                kind="height")

    bad = check_irredundant(primes)
    if bad:
        pairs = ", ".join(f"{_label(primes[i - 1], i - 1)} ⊆ {_label(primes[j - 1], j - 1)}"
                          for i, j in bad)
        raise HypothesisError(f"inputs are not irredundant minimal primes: {pairs}",
                              kind="containment")

    caveats = []
    if not all(p.is_linear() for p in primes) or (base is not None and not base.is_linear()):
        caveats = [CAVEAT_PRIMALITY, CAVEAT_GEOMETRIC]
    return Validation(ring, d, dims, heights, c, caveats)


@dataclass
class Verdict:
    characteristic: int
    w: int
    vanishes: bool
    cd_le_v: bool
    cd: int | None
    conclusion: str
    statement: str


@dataclass
class AnalysisReport:
    ring: str
    n_vars: int
    d: int
    base: str | None
    prime_names: list[str]
    heights: list[int]
    c: int
    n_primes: int
    t: int
    v: int
    dim_cap: int
    characteristics: list[int]
    w: dict[int, int]
    phi_coker: dict[int, int]
    relative: dict[int, int]
    verdicts: dict[int, Verdict]
    bounds: dict
    caveats: list[str]
    notes: list[str]
    delta_counts: list[int]
    lambda_t: list[tuple[int, ...]]
    lambda_t1: list[tuple[int, ...]]
    complex: SimplicialComplex = field(repr=False)
    input_digest: str = ""


def bounds_table(d: int, c: int) -> dict:
    ps = range(0, max((d - 1) // c, 1))
    main = {}
    for p in ps:
        if d > (p + 1) * c:
            main[p] = bound_main(d, c, p)
    return {
        "faltings": bound_faltings(d, c),
        "hl": bound_hl(d, c),
        "sum": {p: bound_sum(d, c, p) for p in ps},
        "main": main,
    }


def _verdict(k: int, w: int, d: int, c: int, v: int, base: bool) -> Verdict:
    scope = "every M supported on V(P)" if base else "every module M"
    divides = (d - 1) % c == 0
    if w == 0:
        conclusion = f"H^{v + 1}_I = 0"
        if divides:
            statement = (f"H^{v + 1}_I(M) = 0 for {scope}; cd ≤ {v} unconditionally "
                         f"(c divides d-1)")
        else:
            statement = f"H^{v + 1}_I(M) = 0 for {scope}; cd ≤ {v}"
        return Verdict(k, w, True, True, None, conclusion, statement)
    conclusion = f"H^{v + 1}_I ≅ (H^{d}_m)^{w}"
    statement = (f"H^{v + 1}_I(M) ≅ (H^{d}_m(M))^{w} for {scope}; "
                 f"cd = {v + 1}")
    return Verdict(k, w, False, False, v + 1, conclusion, statement)


def analyze(primes: Sequence[Ideal], base: Ideal | None = None,
            characteristics: Sequence = (0,), dim_cap: int | None = None,
            workers: int = 1) -> AnalysisReport:
    """Validate, build Δ, and compute w over each coefficient characteristic."""
    val = validate_hypotheses(primes, base)
    d, c, n = val.d, val.c, len(primes)
    t = (d - 2) // c
    v = d - 1 - t
    if dim_cap is None:
        dim_cap = t + 1
    if dim_cap < t + 1:
        raise UsageError(f"dim_cap must be at least t + 1 = {t + 1}")
    chars = []
    for k in characteristics:
        k = as_field(k).characteristic
        if k not in chars:
            chars.append(k)
    if not chars:
        raise UsageError("no coefficient characteristics requested")

    delta = build_delta(primes, base, dim_cap, workers=workers)
    if not delta.is_downward_closed():
        raise InvariantBreach("Δ is not closed under faces")
    if not delta.contains_skeleton(t - 1):
        raise InvariantBreach(f"Δ lacks part of its ({t - 1})-skeleton; a sum of {t} primes "
                              f"of height ≤ {c} cannot be m-primary when d = {d}")

    phi = phi_map(delta, t)
    w, coker, rel, verdicts = {}, {}, {}, {}
    for k in chars:
        w[k] = reduced_betti_number(delta, k, t - 1)
        coker[k] = phi_cokernel_dim(phi, k)
        rel[k] = relative_betti_pair(delta, k, t)
        if not w[k] == coker[k] == rel[k]:
            raise InvariantBreach(f"char {k}: reduced H_{t - 1} = {w[k]}, "
                                  f"relative H_{t} = {rel[k]}, coker Φ = {coker[k]}")
        if n * c < d and w[k]:
            raise InvariantBreach(f"char {k}: w = {w[k]} although n_primes * c < d")
        if (d - 1) % c == 0 and w[k]:
            raise InvariantBreach(f"char {k}: w = {w[k]} although c divides d - 1")
        verdicts[k] = _verdict(k, w[k], d, c, v, base is not None)

    F = val.ring.field
    caveats = list(val.caveats)
    if any(k != F.characteristic for k in chars):
        caveats.append(f"coefficient characteristics other than {F.characteristic} "
                       f"reuse the complex built over {F}")
    notes = []
    if t == 0:
        notes.append("t = 0: H~_{-1}(Δ) = 0 because Δ has vertices, so w = 0 and "
                     f"the verdict is the bound cd ≤ {bound_hl(d, c)}")
    if n * c < d:
        notes.append(f"n_primes * c < d: Δ contains the full simplex through dimension {dim_cap}")
    if (d - 1) % c == 0:
        notes.append(f"c divides d - 1: Δ contains the full {t}-skeleton")

    return AnalysisReport(
        ring=str(val.ring), n_vars=val.ring.n_vars, d=d,
        base=(base.name or "P") if base is not None else None,
        prime_names=[_label(p, i) for i, p in enumerate(primes)],
        heights=val.heights, c=c, n_primes=n, t=t, v=v, dim_cap=dim_cap,
        characteristics=chars, w=w, phi_coker=coker, relative=rel, verdicts=verdicts,
        bounds=bounds_table(d, c), caveats=caveats, notes=notes,
        delta_counts=delta.counts(),
        lambda_t=list(non_simplex_layer(delta, t)),
        lambda_t1=list(non_simplex_layer(delta, t + 1)),
        complex=delta,
        input_digest=_digest(primes, base, chars, dim_cap),
    )


def _digest(primes, base, chars, dim_cap) -> str:
    h = hashlib.sha256()
    h.update(str(primes[0].ring).encode())
    for i, p in enumerate(list(primes) + ([base] if base is not None else [])):
        h.update(f"\n{_label(p, i)}:".encode())
        h.update(", ".join(str(g) for g in p.generators).encode())
    h.update(f"\n{chars} {dim_cap}".encode())
    return h.hexdigest()


@dataclass
class MultiPrimeVerdict:
    d: int
    reports: list[AnalysisReport]
    overall: dict[int, bool]

    @property
    def cd_le_v(self) -> bool:
        return all(self.overall.values())


def analyze_multi_base(primes: Sequence[Ideal], bases: Sequence[Ideal],
                       characteristics: Sequence = (0,), dim_cap: int | None = None,
                       workers: int = 1) -> MultiPrimeVerdict:
    """One complex per d-dimensional prime P_i; cd ≤ v iff every w_i vanishes."""
    if not bases:
        raise UsageError("no base primes given")
    dims = []
    for b in bases:
        dim = krull_dimension(b)
        dims.append(dim)
    if len(set(dims)) != 1:
        raise UsageError(f"base primes have unequal dimensions {dims}")
    reports = [analyze(primes, b, characteristics, dim_cap, workers) for b in bases]
    chars = reports[0].characteristics
    overall = {k: all(r.w[k] == 0 for r in reports) for k in chars}
    return MultiPrimeVerdict(dims[0], reports, overall)


def example_hl(a, ring: RingContext | int | FieldSpec = 0) -> list[Ideal]:
    """Six height-two linear primes in six variables whose complex is the RP^2 triangulation.

    ``a`` must avoid 0, 1, -1 and the roots of a^2 + a - 1.
    """
    if not isinstance(ring, RingContext):
        ring = polynomial_ring(ring, 6)
    if ring.n_vars != 6:
        raise UsageError("the six-prime configuration lives in six variables")
    F = ring.field
    try:
        a = F.coerce(a)
    except ZeroDivisionError as exc:
        raise ParameterError(f"a = {a} is not defined in {F}: {exc}") from None
    checks = [
        (a == F.zero(), "a ≠ 0"),
        (a == F.one(), "a ≠ 1"),
        (a == F.neg(F.one()), "a ≠ -1"),
        (F.sub(F.add(F.mul(a, a), a), F.one()) == 0, "a^2 + a - 1 ≠ 0"),
    ]
    for failed, condition in checks:
        if failed:
            raise ParameterError(f"parameter a = {a} violates {condition} in {F}")
    inv_a = F.inv(a)
    inv_q = F.inv(F.sub(F.add(F.mul(a, a), a), F.one()))
    L = ring.linear_form
    gens = [
        [L([1, 0, 0, 0, 0, 0]), L([0, 1, 0, 0, 0, 0])],
        [L([0, 0, 1, 0, 0, 0]), L([0, 0, 0, 1, 0, 0])],
        [L([0, 0, 0, 0, 1, 0]), L([0, 0, 0, 0, 0, 1])],
        [L([1, 0, 1, 0, 0, 1]), L([inv_q, 0, 0, 1, 0, inv_a])],
        [L([1, 0, 1, 0, 1, 0]), L([0, 1, a, 0, 1, 0])],
        [L([0, 1, 0, 1, 1, 0]), L([0, inv_a, 0, a, 0, 1])],
    ]
    return [Ideal(ring, g, name=f"I{i + 1}") for i, g in enumerate(gens)]


# randomized search

def _random_coefficients(F: FieldSpec, rng: np.random.Generator, size) -> np.ndarray:
    if F.characteristic:
        # draw below min(p, 2**62) and reduce; exact for every supported p
        hi = min(F.characteristic, 1 << 62)
        return rng.integers(0, hi, size=size)
    return rng.integers(-5, 6, size=size)


def random_linear_prime(ring: RingContext, c: int, rng: np.random.Generator,
                        name: str | None = None) -> Ideal | None:
    """Ideal of c random linear forms, or None when they are dependent."""
    F = ring.field
    M = _random_coefficients(F, rng, (c, ring.n_vars))
    if matrix_rank(M.tolist(), F) < c:
        return None
    return Ideal(ring, [ring.linear_form([int(x) for x in row]) for row in M], name=name)


def random_linear_arrangement(ring: RingContext, c: int, n_primes: int,
                              rng: np.random.Generator) -> list[Ideal] | None:
    primes = []
    for i in range(n_primes):
        p = random_linear_prime(ring, c, rng, name=f"I{i + 1}")
        if p is None:
            return None
        primes.append(p)
    return primes


@dataclass
class Finding:
    trial: int
    seed: int | None
    w: dict[int, int]
    ideals: list[list[str]]


@dataclass
class SearchOutcome:
    findings: list[Finding]
    trials: int
    skipped: int

    def __iter__(self):
        return iter(self.findings)

    def __len__(self):
        return len(self.findings)


def _trial(args):
    idx, trial_seed, n_vars, c, n_primes, base_char, chars = args
    ring = polynomial_ring(base_char, n_vars)
    rng = np.random.default_rng(trial_seed)
    primes = random_linear_arrangement(ring, c, n_primes, rng)
    if primes is None:
        return idx, trial_seed, None
    return idx, trial_seed, _w_profile(primes, chars)


def _w_profile(primes, chars):
    try:
        report = analyze(primes, characteristics=chars)
    except HypothesisError:
        return None
    return report.w, [[str(g) for g in p.generators] for p in primes]


def trial_seeds(seed: int, trials: int) -> list[int]:
    """Per-trial seeds derived deterministically from the master seed."""
    children = np.random.SeedSequence(seed).spawn(trials)
    return [int(ch.generate_state(1, dtype=np.uint64)[0]) for ch in children]


def search_char_dependence(n_vars: int, c: int, n_primes: int, trials: int, seed: int,
                           characteristics: Sequence = (0, 2, 3, 5, 7), base_char: int = 7,
                           inject: Sequence[Ideal] | None = None,
                           workers: int = 1) -> SearchOutcome:
    """Random linear arrangements whose w depends on the coefficient characteristic.

    ``inject`` is analyzed first as trial ``-1``; its finding (if any) has
    no seed.
    """
    if n_vars < 1 or c < 1 or n_primes < 1 or trials < 0:
        raise UsageError("parameters must be positive")
    chars = [as_field(k).characteristic for k in characteristics]
    findings: list[Finding] = []
    skipped = 0

    if inject is not None:
        prof = _w_profile(list(inject), chars)
        if prof is None:
            skipped += 1
        elif len(set(prof[0].values())) > 1:
            findings.append(Finding(-1, None, prof[0], prof[1]))

    jobs = [(i, s, n_vars, c, n_primes, base_char, chars)
            for i, s in enumerate(trial_seeds(seed, trials))]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_trial, jobs, chunksize=4))
    else:
        results = [_trial(job) for job in jobs]
    for idx, trial_seed, prof in results:
        if prof is None:
            skipped += 1
            continue
        if len(set(prof[0].values())) > 1:
            findings.append(Finding(idx, trial_seed, prof[0], prof[1]))
    log.info("search: %d trials, %d skipped, %d findings", trials, skipped, len(findings))
    return SearchOutcome(findings, trials, skipped)
