"""Simplicial complexes on vertices 1..n, and the complex of non-m-primary sums.

Simplices are strictly increasing tuples of 1-based vertex labels.  A
complex only materializes simplices up to ``dim_cap``; layers above the
cap are "not computed", not empty.
"""

from __future__ import annotations

import itertools
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import HypothesisError, ParseError, UsageError
from .ideals import Ideal, ideal_sum, is_m_primary

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    dim_cap: int
    layers: tuple[tuple[Simplex, ...], ...]

    def __post_init__(self):
        if self.n_vertices < 0:
            raise UsageError("n_vertices must be non-negative")
        if self.dim_cap < -1:
            raise UsageError("dim_cap must be at least -1")
        layers = tuple(tuple(sorted(set(layer))) for layer in self.layers)
        layers = layers + ((),) * (self.dim_cap + 1 - len(layers))
        if len(layers) != self.dim_cap + 1:
            raise UsageError(f"{len(layers)} layers exceed dim_cap {self.dim_cap}")
        for s, layer in enumerate(layers):
            for sigma in layer:
                if len(sigma) != s + 1:
                    raise UsageError(f"{sigma} stored in layer {s}")
                if any(b <= a for a, b in zip(sigma, sigma[1:])):
                    raise UsageError(f"{sigma} is not strictly increasing")
                if sigma[0] < 1 or sigma[-1] > self.n_vertices:
                    raise UsageError(f"{sigma} has a vertex outside 1..{self.n_vertices}")
        object.__setattr__(self, "layers", layers)
        object.__setattr__(self, "_sets", tuple(frozenset(layer) for layer in layers))

    @property
    def is_complete(self) -> bool:
        """Every possible dimension is materialized."""
        return self.dim_cap >= self.n_vertices - 1

    def covers(self, s: int) -> bool:
        """Layer ``s`` is known (possibly empty)."""
        return s <= self.dim_cap or self.is_complete

    def simplices(self, s: int) -> tuple[Simplex, ...]:
        """The s-simplices; s = -1 gives the empty simplex when the complex is nonempty."""
        if s == -1:
            return ((),) if self.n_vertices and self.layers and self.layers[0] else ()
        if s < -1:
            return ()
        if s > self.dim_cap:
            if self.is_complete:
                return ()
            raise UsageError(f"dimension {s} not materialized (dim_cap = {self.dim_cap})")
        return self.layers[s]

    def __contains__(self, sigma) -> bool:
        sigma = tuple(sorted(sigma))
        s = len(sigma) - 1
        if s == -1:
            return not self.is_empty()
        if s > self.dim_cap:
            if self.is_complete:
                return False
            raise UsageError(f"dimension {s} not materialized (dim_cap = {self.dim_cap})")
        return sigma in self._sets[s]

    def is_empty(self) -> bool:
        return not (self.layers and self.layers[0])

    def counts(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def dimension(self) -> int:
        """Largest materialized nonempty layer, -1 for the empty complex."""
        nonempty = [s for s, layer in enumerate(self.layers) if layer]
        return max(nonempty) if nonempty else -1

    def is_downward_closed(self) -> bool:
        for s in range(1, self.dim_cap + 1):
            below = self._sets[s - 1]
            for sigma in self.layers[s]:
                for j in range(len(sigma)):
                    if sigma[:j] + sigma[j + 1:] not in below:
                        return False
        return True

    def contains_skeleton(self, s: int) -> bool:
        """Every subset of size <= s + 1 is a simplex."""
        return all(len(self.simplices(r)) == comb(self.n_vertices, r + 1) for r in range(s + 1))

    def facets(self) -> list[Simplex]:
        out = []
        for s, layer in enumerate(self.layers):
            above = self._sets[s + 1] if s + 1 <= self.dim_cap else frozenset()
            for sigma in layer:
                if not any(tuple(sorted(sigma + (v,))) in above
                           for v in range(1, self.n_vertices + 1) if v not in sigma):
                    out.append(sigma)
        return out

    def truncated(self, dim_cap: int) -> SimplicialComplex:
        if dim_cap > self.dim_cap and not self.is_complete:
            raise UsageError(f"cannot extend dim_cap {self.dim_cap} to {dim_cap}")
        layers = [self.simplices(s) for s in range(dim_cap + 1)]
        return SimplicialComplex(self.n_vertices, dim_cap, tuple(layers))

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** s * len(layer) for s, layer in enumerate(self.layers)) - 1


def _close(n_vertices: int, facets: Iterable[Sequence[int]], dim_cap: int | None) -> SimplicialComplex:
    facets = [tuple(sorted(set(f))) for f in facets]
    for f in facets:
        if not f:
            raise UsageError("empty facet")
        if f[0] < 1 or f[-1] > n_vertices:
            raise UsageError(f"facet {f} has a vertex outside 1..{n_vertices}")
    top = max((len(f) - 1 for f in facets), default=-1)
    if dim_cap is None:
        dim_cap = max(top, n_vertices - 1)
    layers: list[set] = [set() for _ in range(dim_cap + 1)]
    for f in facets:
        for r in range(1, min(len(f), dim_cap + 1) + 1):
            layers[r - 1].update(itertools.combinations(f, r))
    return SimplicialComplex(n_vertices, dim_cap, tuple(tuple(layer) for layer in layers))


def from_facets(facets: Iterable[Sequence[int]], n_vertices: int | None = None,
                dim_cap: int | None = None) -> SimplicialComplex:
    facets = [list(f) for f in facets]
    for f in facets:
        if len(set(f)) != len(f):
            raise UsageError(f"facet {f} repeats a vertex")
        if any(not isinstance(v, int) for v in f):
            raise UsageError(f"facet {f} has a non-integer vertex")
    if n_vertices is None:
        n_vertices = max((max(f) for f in facets if f), default=0)
    return _close(n_vertices, facets, dim_cap)


def full_simplex(n: int) -> SimplicialComplex:
    if n < 1:
        raise UsageError("full simplex needs n >= 1")
    return _close(n, [range(1, n + 1)], None)


def sphere_boundary(n: int) -> SimplicialComplex:
    """All proper nonempty subsets of {1..n}: a (n-2)-sphere."""
    if n < 1:
        raise UsageError("sphere boundary needs n >= 1")
    if n == 1:
        return SimplicialComplex(1, 0, ((),))
    return _close(n, itertools.combinations(range(1, n + 1), n - 1), n - 1)


RP2_FACETS = ((1, 2, 4), (1, 2, 5), (1, 3, 5), (1, 3, 6), (1, 4, 6),
              (2, 3, 4), (2, 3, 6), (3, 4, 5), (4, 5, 6), (2, 5, 6))


def rp2_six_vertex() -> SimplicialComplex:
    """The six-vertex real projective plane."""
    return _close(6, RP2_FACETS, 5)


def stock_complex(kind: str, facets: Iterable[Sequence[int]] | None = None) -> SimplicialComplex:
    """``"full:N"``, ``"sphere:N"``, ``"rp2"``, or ``"facets"`` with ``facets``."""
    name, _, arg = kind.partition(":")
    if name == "rp2":
        return rp2_six_vertex()
    if name in ("full", "sphere"):
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"{kind!r}: expected {name}:N") from None
        return full_simplex(n) if name == "full" else sphere_boundary(n)
    if name == "facets":
        if facets is None:
            raise UsageError("facets kind needs a facet list")
        return from_facets(facets)
    raise UsageError(f"unknown stock complex {kind!r}")


@dataclass(frozen=True)
class NonSimplexLayer:
    s: int
    tuples: tuple[Simplex, ...]


def non_simplex_layer(complex_: SimplicialComplex, s: int) -> tuple[Simplex, ...]:
    if s > complex_.dim_cap and not complex_.is_complete:
        raise UsageError(f"dimension {s} beyond dim_cap {complex_.dim_cap}")
    if s < 0:
        return ()
    present = set(complex_.simplices(s))
    return tuple(t for t in itertools.combinations(range(1, complex_.n_vertices + 1), s + 1)
                 if t not in present)


def non_simplex_layers(complex_: SimplicialComplex, s_values: Sequence[int]) -> list[NonSimplexLayer]:
    return [NonSimplexLayer(s, non_simplex_layer(complex_, s)) for s in s_values]


# building the complex from ideals

def _tuple_is_simplex(args) -> bool:
    parts, = args
    return not is_m_primary(ideal_sum(parts))


def default_workers() -> int:
    """Worker cap from COHOMDIM_WORKERS, else the CPU count."""
    env = os.environ.get("COHOMDIM_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


_PARALLEL_THRESHOLD = 64


def build_delta(primes: Sequence[Ideal], base: Ideal | None = None, dim_cap: int | None = None,
                workers: int = 1) -> SimplicialComplex:
    """Simplices are index tuples whose prime sum (plus ``base``) is not m-primary.

    A tuple is tested only if all its facets are simplices; supersets of an
    m-primary tuple are m-primary too.
    """
    n = len(primes)
    if dim_cap is None:
        dim_cap = n - 1
    for idx, p in enumerate(primes):
        if p.is_unit():
            raise HypothesisError(f"ideal #{idx + 1} is the unit ideal", kind="unit")
    if base is not None and base.is_unit():
        raise HypothesisError("base ideal is the unit ideal", kind="unit")
    extra = [base] if base is not None and base.generators else []

    layers: list[list[Simplex]] = []
    previous: set[Simplex] = {()}
    for s in range(min(dim_cap, n - 1) + 1):
        candidates = [sigma for sigma in itertools.combinations(range(1, n + 1), s + 1)
                      if all(sigma[:j] + sigma[j + 1:] in previous for j in range(s + 1))]
        jobs = [([primes[v - 1] for v in sigma] + extra,) for sigma in candidates]
        if workers > 1 and len(jobs) >= _PARALLEL_THRESHOLD:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                flags = list(pool.map(_tuple_is_simplex, jobs, chunksize=8))
        else:
            flags = [_tuple_is_simplex(job) for job in jobs]
        layer = [sigma for sigma, ok in zip(candidates, flags) if ok]
        layers.append(layer)
        previous = set(layer)
    return SimplicialComplex(n, dim_cap, tuple(tuple(layer) for layer in layers))


# text format: one simplex per line, comma separated, '#' comments

def format_complex(complex_: SimplicialComplex) -> str:
    lines = [f"# vertices: {complex_.n_vertices}"]
    for layer in complex_.layers:
        lines.extend(",".join(map(str, sigma)) for sigma in layer)
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    """Read the one-simplex-per-line format; the result is closed under faces.

    An optional ``# vertices: N`` comment fixes the vertex count, which
    otherwise is the largest label seen.
    """
    n_vertices = None
    simplices = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            key, _, value = stripped[1:].partition(":")
            if key.strip() == "vertices":
                try:
                    n_vertices = int(value)
                except ValueError:
                    raise ParseError("bad vertex count", lineno, line.index(":") + 2,
                                     ("integer",)) from None
            continue
        if not stripped:
            continue
        sigma = []
        col = line.index(stripped[0]) + 1
        for piece in stripped.split(","):
            token = piece.strip()
            if not re.fullmatch(r"[0-9]{1,9}", token) or int(token) < 1:
                raise ParseError(f"bad vertex label {token!r}", lineno, col, ("positive integer",))
            sigma.append(int(token))
            col += len(piece) + 1
        if len(set(sigma)) != len(sigma):
            raise ParseError(f"repeated vertex in {stripped!r}", lineno, 1)
        simplices.append(sigma)
    top = max((max(s) for s in simplices), default=0)
    if n_vertices is None:
        n_vertices = top
    elif top > n_vertices:
        raise ParseError(f"vertex {top} exceeds declared count {n_vertices}", 0, 0)
    return from_facets(simplices, n_vertices)
