"""krull: exact computational commutative algebra.

Groebner bases over Q and F_p, ideal operations (colon, intersection,
saturation, elimination), monomial-ideal decompositions and dimension
filtrations, Hilbert and irreducible coefficients, socles, and parameter
ideal predicates, with a CLI (``krull --help``).
"""

from .errors import (AlgebraError, NotStabilizedError, ParseError,
                     ResourceLimitError, RingMismatchError, SamplingError,
                     UnitIdealError, UnsupportedInputError)
from .field import GF, QQ, is_prime
from .poly import (GREVLEX, LEX, Monomial, MonomialOrder, Polynomial,
                   RingSpec, monomials_of_degree)
from .parse import parse_poly, parse_poly_list, parse_ring
from .groebner import (DEFAULT_PAIR_LIMIT, Ideal, ReducedGB, buchberger,
                       clear_gb_cache, colon, eliminate, hilbert_function,
                       intersect, is_m_primary, krull_dim, maximal_ideal,
                       normal_form, saturate, std_monomials_by_degree,
                       vdim_artinian)
from .monomial_ideal import (FiltrationChain, IrreducibleComponent,
                             associated_primes, dimension_filtration,
                             irreducible_decomposition, is_monomial_ideal,
                             minimal_monomial_gens, primary_decomposition,
                             unmixed_component)
from .invariants import (BinomialPolynomial, IntegerSeries, QuotientModule,
                         clear_invariant_caches, fit_binomial, h0m,
                         hilbert_coeffs, hilbert_fit, hs_series, ir_series,
                         irreducible_coeffs, irreducible_fit, socle_dim,
                         socle_lifts)
from .sop import (CMVerdict, GPredicate, ParameterSystem, SampleRecord,
                  SopCheck, TheoremReport, cm_test, g_predicate,
                  is_d_sequence, is_distinguished, sample_distinguished_sop,
                  sample_sop, theorem_report, verify_sop)

__version__ = "0.1.0"


def clear_caches():
    """Drop all process-wide memoized Groebner bases and series values."""
    clear_gb_cache()
    clear_invariant_caches()
