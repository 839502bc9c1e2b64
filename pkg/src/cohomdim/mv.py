"""The degree-d row of the Mayer-Vietoris spectral sequence, and the bound formulas.

The nonzero terms of that row are copies of the top local cohomology
module, one per index tuple whose prime sum is m-primary.  The map between
consecutive terms acts on the copies by a signed 0/±1 incidence matrix, so
the multiplicity ``w`` is the cokernel dimension of a scalar matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import Simplex, SimplicialComplex, non_simplex_layer
from .errors import HypothesisError, UsageError
from .homology import incidence_matrix, matrix_rank


@dataclass(frozen=True)
class PhiMap:
    """Signed incidence from (t+2)-tuples to (t+1)-tuples with m-primary sums."""

    t: int
    source_index: tuple[Simplex, ...]
    target_index: tuple[Simplex, ...]
    matrix: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.target_index), len(self.source_index))


def phi_map(complex_: SimplicialComplex, t: int) -> PhiMap:
    if not complex_.covers(t + 1):
        raise UsageError(f"phi map at t={t} needs dim_cap >= {t + 1} (have {complex_.dim_cap})")
    target = non_simplex_layer(complex_, t)
    source = non_simplex_layer(complex_, t + 1)
    return PhiMap(t, source, target, incidence_matrix(target, source))


def phi_cokernel_dim(phi: PhiMap, characteristic) -> int:
    return len(phi.target_index) - matrix_rank(phi.matrix, characteristic)


def row_differentials_compose_to_zero(complex_: SimplicialComplex, t: int) -> bool:
    """The map into Λ_{t+1} followed by Φ vanishes (the row is a complex)."""
    phi = phi_map(complex_, t)
    nxt = phi_map(complex_, t + 1)
    if phi.matrix.size == 0 or nxt.matrix.size == 0:
        return True
    return not np.any(phi.matrix @ nxt.matrix)


# bound formulas; integer floor division is exact for the non-negative arguments here

def _check(d: int, c: int):
    if d < 0 or c < 1:
        raise UsageError(f"need d >= 0 and c >= 1, got d={d}, c={c}")


def bound_faltings(d: int, c: int) -> int:
    """d - floor((d-1)/c): vanishing above this holds for every ideal."""
    _check(d, c)
    return d - (d - 1) // c


def bound_sum(d: int, c: int, p: int) -> int:
    """d - floor((d-1)/c) + p, for sums of p+1 ideals."""
    _check(d, c)
    if p < 0:
        raise UsageError("p must be non-negative")
    return d - (d - 1) // c + p


def bound_hl(d: int, c: int) -> int:
    """d - 1 - floor((d-2)/c): the sharper bound, valid for primes."""
    _check(d, c)
    return d - 1 - (d - 2) // c


def bound_main(d: int, c: int, p: int) -> int:
    """d - 1 - floor((d-2)/c) + p; needs d > (p+1)c, which cannot be dropped."""
    _check(d, c)
    if p < 0:
        raise UsageError("p must be non-negative")
    if d <= (p + 1) * c:
        raise HypothesisError(f"bound_main needs d > (p+1)c, got d={d}, c={c}, p={p}",
                              kind="bound")
    return d - 1 - (d - 2) // c + p
