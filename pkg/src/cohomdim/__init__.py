"""Exact tools for the combinatorial criterion on the top local cohomology of
an arrangement of homogeneous primes: Groebner-based m-primarity tests, the
complex of non-m-primary sums, its homology over any prime field, and the
signed incidence map whose cokernel gives the same multiplicity.
"""

__version__ = "0.1.0"

from .analysis import (AnalysisReport, MultiPrimeVerdict, analyze, analyze_multi_base,
                       example_hl, search_char_dependence, validate_hypotheses)
from .complexes import (SimplicialComplex, build_delta, from_facets, full_simplex,
                        non_simplex_layers, rp2_six_vertex, sphere_boundary, stock_complex)
from .errors import (CohomDimError, DomainError, HypothesisError, InhomogeneousError,
                     InvariantBreach, ParameterError, ParseError, UsageError)
from .fields import QQ, FieldElement, FieldSpec, field
from .groebner import GroebnerBasis, buchberger, ideal_membership, normal_form
from .homology import BettiProfile, matrix_rank, reduced_betti, relative_betti_pair
from .ideals import (EMPTY_DIM, HeightProfile, Ideal, check_irredundant, height_profile,
                     ideal_intersection, ideal_sum, is_m_primary, krull_dimension)
from .mv import PhiMap, bound_faltings, bound_hl, bound_main, bound_sum, phi_cokernel_dim, phi_map
from .poly import (GREVLEX, LEX, Monomial, MonomialOrder, Polynomial, RingContext, elimination,
                   polynomial_ring)
