"""Exact graded commutative algebra for indices of reducibility of parameter ideals."""

from .field import FieldCtx
from .ring import ModuleOrder, MonomialOrder, ParseError, Polynomial, RingCtx, format_poly, parse_poly
from .groebner import (
    NEG_INF,
    BasisNotComputed,
    FreeSubmodule,
    GroebnerLimitError,
    Ideal,
    Limits,
    buchberger,
    hilbert_series,
    kbasis,
    module_dimension,
    normal_form,
    quotient_length,
    standard_monomials,
    staircase,
)
from .idealops import (
    PresentedModule,
    annihilator,
    colon,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    maximal_ideal,
    saturate,
)
from .homology import (
    CohomologyDualSummary,
    Resolution,
    all_ext_duals,
    ext_dual,
    free_resolution,
    koszul_homology_lengths,
    minimize_presentation,
    syzygies,
)
from .sop import (
    NotASystemOfParameters,
    ParameterSystem,
    RearrangeError,
    deep_sop,
    filter_regular_rearrange,
    is_filter_regular,
    is_sop,
    random_sop,
)
from .finite import BruteForceLimit, FiniteModule, c_bruteforce
from .invariants import (
    BoundReport,
    DifferenceGrid,
    bound_report,
    difference_grid,
    difference_value,
    index_of_reducibility,
    irreducible_decomposition_monomial,
    length_quotient,
    min_gens,
    multiplicity,
    polynomial_type_empirical,
    polynomial_type_exact,
    r_upper,
    sequence_quotient_check,
    socle_dimension,
)
from .fixtures import all_fixtures, fixture

__version__ = "0.1.0"
