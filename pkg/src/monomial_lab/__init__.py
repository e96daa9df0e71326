"""Exact computations on monomial ideals: integral closure, Hilbert series,
associated primes, analytic spread and the Freiman property, with brute-force
cross-checks for the family ``M_{n,t}``."""

from .closure import (
    integral_closure,
    is_integrally_closed,
    is_normal_up_to,
    np_membership,
    power_witness,
)
from .core import (
    ExpVec,
    FamilyParams,
    MonomialIdeal,
    contains,
    equigenerated_degree,
    family_mnt,
    make_ideal,
    mu,
    power,
    product,
    squarefree_veronese,
    veronese_type,
)
from .errors import (
    ConsistencyError,
    DimensionError,
    DomainError,
    MonomialLabError,
    ParseError,
    ResourceError,
)
from .freiman import FreimanReport, analytic_spread_equigen, freiman_family_check, freiman_test
from .hilbert import (
    HilbertSeries,
    a_coeffs,
    h_numerator,
    hilbert_series,
    lemma_inclusion_exclusion_check,
    lemma_series_identity_check,
    multiplicity_formula,
    multiplicity_oracle,
    roots_of_unity_sum,
    toric_hilbert_formula,
    toric_hilbert_oracle,
)
from .lp import LPCertificate, LPProblem
from .poly import DensePolynomial
from .primdec import (
    AssProfile,
    IrreducibleComponent,
    MonomialPrime,
    ass_profile,
    associated_primes,
    has_embedded_primes,
    irreducible_decomposition,
    is_unmixed,
    primary_closure_ass_check,
)
from .textio import format_ideal, parse_ideal
from .verify import VerificationReport, verify_family

__version__ = "0.1.0"
