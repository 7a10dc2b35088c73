"""Exact computation of complemented subalgebra intervals, chief series and
prefrattini subalgebras for solvable Lie algebras over GF(p), p <= 13.

Quick tour:

    >>> from lieprefrat import truncated_weyl_algebra, zero_space, prefrattini_set
    >>> L = truncated_weyl_algebra(2)
    >>> [b.rows for b in prefrattini_set(L, zero_space(L)).members]
    [((0, 0, 1, 0, 0),), ((0, 1, 1, 0, 0),), ((1, 0, 1, 0, 0),), ((1, 1, 1, 0, 0),)]
"""

from .algebra import (
    LieAlgebra,
    QuotientPresentation,
    SubalgebraPresentation,
    bracket,
    centraliser,
    centre,
    derived_series,
    full_space,
    generated_subalgebra,
    ideal_closure,
    is_completely_solvable,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    lower_central_series,
    nilpotency_class,
    nilpotent_residual,
    product_space,
    quotient,
    restriction,
    subalgebra_closure,
    validate_structure,
    zero_space,
)
from .chief import (
    ChiefSeries,
    FactorClassification,
    all_chief_series,
    chief_series,
    classify_factor,
    classify_series,
    jordan_profile,
    minimal_ideals,
)
from .conjugacy import (
    InnerAutomorphism,
    ad_matrix,
    are_conjugate,
    exp_ad,
    inner_group,
    verify_conjugacy_theorem,
)
from .corpus import (
    CorpusEntry,
    abelian_algebra,
    affine_line_algebra,
    diagonal_action_algebra,
    heisenberg_algebra,
    scaled_heisenberg_algebra,
    standard_corpus,
    truncated_weyl_algebra,
)
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    FileFormatError,
    HypothesisNotMet,
    InvalidStructure,
    LiePrefratError,
    NotAnIdeal,
    NotASubalgebra,
    NotExponentiable,
    UnsupportedPrime,
)
from .fileformat import parse_algebra, serialize_algebra
from .gfp import Subspace, galois_number, gaussian_binomial
from .intervals import (
    IntervalReport,
    complement_in_interval,
    interval,
    omega,
    omega_min,
    phi_of,
)
from .prefrattini import (
    PrefrattiniResult,
    avoids,
    covers,
    dimension_formula_check,
    phi_intersection_check,
    prefrattini_set,
    verify_prefrat_theorem,
)
from .verify import CHECKS, Guards, run_verification

__version__ = "0.1.0"
