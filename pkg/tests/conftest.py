import itertools
import random
from fractions import Fraction

import pytest

from cohomdim.complexes import SimplicialComplex
from cohomdim.poly import polynomial_ring

# criterion number -> (passed, detail); filled by test_acceptance, printed at the end
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")


# oracles independent of the Groebner and homology code paths

def fraction_rank(rows, p=0):
    """Plain Gauss-Jordan over Q (p = 0) or GF(p), on Fractions / ints."""
    M = [[Fraction(x) if p == 0 else int(x) % p for x in r] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        lead = M[rank][col]
        for r in range(len(M)):
            if r != rank and M[r][col] != 0:
                f = M[r][col]
                if p == 0:
                    M[r] = [a - f / lead * b for a, b in zip(M[r], M[rank])]
                else:
                    inv = pow(lead, -1, p)
                    M[r] = [(a - f * inv * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def linear_coefficients(ideal):
    """Coefficient rows of a linearly generated ideal."""
    n = ideal.ring.n_vars
    rows = []
    for g in ideal.generators:
        row = [0] * n
        for e, c in g.terms.items():
            row[e.index(1)] = c
        rows.append(row)
    return rows


def linear_sum_is_m_primary(ideals):
    """For linear ideals: the sum is m-primary iff the stacked forms span all n coordinates."""
    ring = ideals[0].ring
    rows = [r for I in ideals for r in linear_coefficients(I)]
    return fraction_rank(rows, ring.field.characteristic) == ring.n_vars


def random_skeletal_complex(rng: random.Random, n: int, t: int, density: float = 0.5):
    """Complex on n vertices with the full (t-1)-skeleton, random t- and (t+1)-layers."""
    verts = range(1, n + 1)
    layers = [list(itertools.combinations(verts, r + 1)) for r in range(t)]
    top = [s for s in itertools.combinations(verts, t + 1) if rng.random() < density]
    top_set = set(top)
    above = [s for s in itertools.combinations(verts, t + 2)
             if all(s[:j] + s[j + 1:] in top_set for j in range(t + 2)) and rng.random() < density]
    layers += [top, above]
    return SimplicialComplex(n, t + 1, tuple(tuple(layer) for layer in layers))


@pytest.fixture
def ring6_gf7():
    return polynomial_ring(7, 6)


@pytest.fixture
def ring6_qq():
    return polynomial_ring(0, 6)
