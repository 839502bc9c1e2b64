import random

import numpy as np
import pytest

from cohomdim.complexes import SimplicialComplex, full_simplex, rp2_six_vertex
from cohomdim.errors import HypothesisError, UsageError
from cohomdim.homology import reduced_betti_number, relative_betti_pair
from cohomdim.mv import (bound_faltings, bound_hl, bound_main, bound_sum, phi_cokernel_dim,
                         phi_map, row_differentials_compose_to_zero)

from .conftest import fraction_rank, random_skeletal_complex


def test_phi_examples():
    phi = phi_map(full_simplex(3), 1)
    assert phi.shape == (0, 0) and phi_cokernel_dim(phi, 0) == 0
    two_points = SimplicialComplex(2, 1, (((1,), (2,)), ()))
    phi = phi_map(two_points, 1)
    assert phi.target_index == ((1, 2),) and phi.source_index == ()
    assert phi.shape == (1, 0) and phi_cokernel_dim(phi, 0) == 1
    phi = phi_map(rp2_six_vertex(), 2)
    assert phi.shape == (10, 15) and phi.matrix.shape == (10, 15)
    assert [phi_cokernel_dim(phi, p) for p in (2, 0, 7)] == [1, 0, 0]


def test_phi_signs():
    phi = phi_map(rp2_six_vertex(), 2)
    for c, big in enumerate(phi.source_index):
        for r, small in enumerate(phi.target_index):
            if set(small) < set(big):
                j = next(i for i, v in enumerate(big) if v not in small)
                assert phi.matrix[r, c] == (-1) ** j
            else:
                assert phi.matrix[r, c] == 0


def test_phi_needs_cap():
    with pytest.raises(UsageError):
        phi_map(rp2_six_vertex().truncated(2), 2)


@pytest.mark.parametrize("seed", range(30))
def test_triple_equality_random(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 7)
    t = rng.randint(1, min(3, n - 2))
    cx = random_skeletal_complex(rng, n, t, rng.uniform(0.2, 0.9))
    phi = phi_map(cx, t)
    for p in (0, 2, 3, 5, 7):
        w = phi_cokernel_dim(phi, p)
        assert w == relative_betti_pair(cx, p, t) == reduced_betti_number(cx, p, t - 1)
        if phi.matrix.size:
            assert w == len(phi.target_index) - fraction_rank(phi.matrix.tolist(), p)
    if cx.covers(t + 2):
        assert row_differentials_compose_to_zero(cx, t)


def test_row_composition_on_complete_complexes():
    rp2 = rp2_six_vertex()
    for t in range(0, 4):
        assert row_differentials_compose_to_zero(rp2, t)
    phi, nxt = phi_map(rp2, 2), phi_map(rp2, 3)
    assert not np.any(phi.matrix @ nxt.matrix)


def test_bound_examples():
    assert bound_faltings(6, 2) == 4
    assert bound_faltings(1, 1) == 1
    assert bound_faltings(7, 3) == 5
    assert bound_sum(6, 2, 0) == bound_faltings(6, 2)
    assert bound_sum(6, 2, 1) == 5
    assert bound_sum(9, 4, 2) == 9
    assert bound_hl(6, 2) == 3
    assert bound_hl(4, 2) == 2
    assert bound_hl(7, 3) == 5 == bound_faltings(7, 3)
    assert bound_main(6, 2, 0) == bound_hl(6, 2)
    assert bound_main(6, 2, 1) == 4
    with pytest.raises(HypothesisError):
        bound_main(4, 2, 1)
    with pytest.raises(UsageError):
        bound_faltings(3, 0)


def test_bound_grid():
    for d in range(2, 21):
        for c in range(1, d):
            lo, hi = bound_hl(d, c), bound_faltings(d, c)
            assert lo <= hi <= lo + 1
            assert (lo == hi) == ((d - 1) % c == 0)
            for p in range(4):
                assert bound_sum(d, c, p) == hi + p
                if d > (p + 1) * c:
                    assert bound_main(d, c, p) == lo + p
                else:
                    with pytest.raises(HypothesisError):
                        bound_main(d, c, p)
