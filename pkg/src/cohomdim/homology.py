"""Reduced and relative simplicial homology over GF(p) or Q.

Simplicial homology of a simplicial complex is canonically its singular
homology, so these Betti numbers are the ones the vanishing criterion asks
for.  All ranks are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from .complexes import Simplex, SimplicialComplex, non_simplex_layer
from .errors import UsageError
from .fields import as_field

# modular elimination runs in int64 below this bound (products stay < 2**62)
_NUMPY_PRIME_LIMIT = 1 << 31


def incidence_matrix(rows: Sequence[Simplex], cols: Sequence[Simplex]) -> np.ndarray:
    """Signed incidence: entry (row, col) is (-1)**j when row is col without its j-th vertex.

    Faces of a column that are not listed among ``rows`` are dropped, which
    is exactly the relative (quotient) boundary when ``rows`` is a subset.
    """
    index = {sigma: i for i, sigma in enumerate(rows)}
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, sigma in enumerate(cols):
        for j in range(len(sigma)):
            r = index.get(sigma[:j] + sigma[j + 1:])
            if r is not None:
                M[r, c] = -1 if j % 2 else 1
    return M


def _chains(complex_: SimplicialComplex, s: int) -> Sequence[Simplex]:
    # augmented complex: the empty simplex spans degree -1 even for the empty complex
    if s == -1:
        return ((),)
    if s < -1:
        return ()
    return complex_.simplices(s)


def boundary_matrix(complex_: SimplicialComplex, s: int) -> np.ndarray:
    """∂_s : C_s -> C_{s-1} of the augmented chain complex (∂_0 is the augmentation)."""
    return incidence_matrix(_chains(complex_, s - 1), _chains(complex_, s))


def _rank_mod_p_numpy(A: np.ndarray, p: int) -> int:
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    rank = 0
    for col in range(n):
        if rank == m:
            break
        nz = np.nonzero(A[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), -1, p)
        A[rank] = A[rank] * inv % p
        below = rank + 1 + np.nonzero(A[rank + 1:, col])[0]
        if below.size:
            A[below] = (A[below] - np.outer(A[below, col], A[rank])) % p
        rank += 1
    return rank


def _rank_mod_p_python(rows: list[list[int]], p: int) -> int:
    M = [[x % p for x in r] for r in rows]
    m = len(M)
    n = len(M[0]) if M else 0
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, m) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], -1, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for r in range(rank + 1, m):
            f = M[r][col]
            if f:
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free elimination over Z; every division below is exact."""
    M = [list(r) for r in rows]
    m = len(M)
    n = len(M[0]) if M else 0
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        piv = next((r for r in range(rank, m) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pr = M[rank]
        a = pr[col]
        for r in range(rank + 1, m):
            row = M[r]
            b = row[col]
            M[r] = [0] * (col + 1) + [(a * row[k] - b * pr[k]) // prev for k in range(col + 1, n)]
        prev = a
        rank += 1
    return rank


def _integer_rows(matrix) -> list[list[int]]:
    out = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def matrix_rank(matrix, characteristic=0) -> int:
    """Exact rank over GF(p), or over Q when the characteristic is 0."""
    F = as_field(characteristic)
    if isinstance(matrix, np.ndarray) and matrix.dtype != object:
        if matrix.size == 0:
            return 0
        rows = matrix.tolist()
    else:
        rows = [list(r) for r in matrix]
        if not rows or not rows[0]:
            return 0
    p = F.characteristic
    if p == 0:
        return _rank_bareiss(_integer_rows(rows))
    if any(isinstance(x, Fraction) for r in rows for x in r):
        rows = [[F.coerce(x) for x in r] for r in rows]
    if p < _NUMPY_PRIME_LIMIT:
        return _rank_mod_p_numpy(np.array(rows, dtype=object) % p, p)
    return _rank_mod_p_python(rows, p)


@dataclass(frozen=True)
class BettiProfile:
    characteristic: int
    reduced: dict[int, int] = field(default_factory=dict)
    relative: dict[int, int] = field(default_factory=dict)


def _need(complex_: SimplicialComplex, s: int, what: str):
    if not complex_.covers(s):
        raise UsageError(f"{what} needs simplices of dimension {s}; "
                         f"rebuild with dim_cap >= {s} (have {complex_.dim_cap})")


def reduced_betti_number(complex_: SimplicialComplex, characteristic, s: int) -> int:
    F = as_field(characteristic)
    if s < -1:
        return 0
    _need(complex_, s + 1, f"reduced H_{s}")
    cs = len(_chains(complex_, s))
    r_out = matrix_rank(boundary_matrix(complex_, s), F) if s >= 0 else 0
    r_in = matrix_rank(boundary_matrix(complex_, s + 1), F)
    return cs - r_out - r_in


def default_degrees(complex_: SimplicialComplex) -> list[int]:
    top = complex_.n_vertices - 1 if complex_.is_complete else complex_.dim_cap - 1
    return list(range(-1, top + 1))


def reduced_betti(complex_: SimplicialComplex, characteristic,
                  degrees: Sequence[int] | None = None) -> BettiProfile:
    F = as_field(characteristic)
    if degrees is None:
        degrees = default_degrees(complex_)
    return BettiProfile(F.characteristic,
                        {s: reduced_betti_number(complex_, F, s) for s in degrees})


def relative_chains(complex_: SimplicialComplex, s: int) -> tuple[Simplex, ...]:
    """Basis of C_s(S, Δ): s-subsets of the vertex set that are not simplices."""
    return non_simplex_layer(complex_, s)


def relative_betti_pair(complex_: SimplicialComplex, characteristic, t: int) -> int:
    """dim H_t(S, Δ) where S is the full simplex on the same vertices."""
    F = as_field(characteristic)
    if t < 0:
        return 0
    _need(complex_, t + 1, f"relative H_{t}")
    lam_t = relative_chains(complex_, t)
    lam_up = relative_chains(complex_, t + 1)
    r_in = matrix_rank(incidence_matrix(lam_t, lam_up), F)
    r_out = 0
    if t >= 1:
        r_out = matrix_rank(incidence_matrix(relative_chains(complex_, t - 1), lam_t), F)
    return len(lam_t) - r_out - r_in


def relative_betti(complex_: SimplicialComplex, characteristic, degrees: Sequence[int]) -> BettiProfile:
    F = as_field(characteristic)
    return BettiProfile(F.characteristic,
                        relative={t: relative_betti_pair(complex_, F, t) for t in degrees})


def euler_identity_holds(complex_: SimplicialComplex, characteristic) -> bool:
    """Alternating simplex count equals alternating reduced Betti sum (complete complexes)."""
    if not complex_.is_complete:
        raise UsageError("Euler characteristic needs a fully materialized complex")
    prof = reduced_betti(complex_, characteristic)
    betti = sum(-b if s % 2 else b for s, b in prof.reduced.items())
    return betti == complex_.reduced_euler_characteristic()
