"""Exact pure-gap computation on quotients of Hermitian curves.

The package studies Weierstrass pure gaps at the totally ramified
places of y^m = x^q + x over GF(q^2), with m dividing q + 1, along
three deliberately independent routes:

* `membership` decides pure-gap membership by explicit ceiling
  inequalities and enumerates whole pure-gap sets,
* `counting` evaluates the closed-form and recursive counts,
* `riemann_roch` recomputes everything from scratch via exact
  Riemann-Roch dimensions on the cyclic-cover decomposition.

Agreement between the routes is enforced by the test suite and the
`puregaps verify` command.
"""

from .counting import (
    SnAContext,
    binom_solutions,
    count_pure_gaps_hermitian,
    count_pure_gaps_quotient,
    gap_set_single,
    gaps_pair_via_homma,
    hermitian_pair_closed,
    pair_closed_gaps,
    pair_closed_pure,
    s_n_A,
    s_n_hermitian,
    sum_gaps_single,
)
from .curves import (
    CountBreakdown,
    CountTerm,
    CurveParams,
    Divisor,
    GapTuple,
    KummerShape,
    P_INFINITY,
    PlaceId,
    PureGapSet,
    bezout_for,
    canonical_shape,
    finite_place,
    hermitian,
    make_curve,
)
from .errors import (
    BadArity,
    BoxTooLarge,
    NotCoprime,
    NotDivisor,
    NotInteger,
    NotPrimePower,
    ParameterError,
    PreconditionFailed,
    PureGapsError,
    TooSmall,
    UnsupportedSupport,
)
from .membership import (
    BoxCounts,
    classify_box,
    count_in_box,
    decompose,
    enumerate_pure_gaps,
    is_pure_gap_kummer,
    is_pure_gap_kummer_inf,
    is_pure_gap_quotient,
    is_pure_gap_quotient_inf,
)
from .riemann_roch import (
    RamificationData,
    brute_force_pure_gaps,
    ell,
    gap_set_oracle,
    is_pure_gap_oracle,
    is_semigroup_member,
    ramification_data,
)

__version__ = "0.1.0"

__all__ = [
    "BadArity",
    "BoxCounts",
    "BoxTooLarge",
    "CountBreakdown",
    "CountTerm",
    "CurveParams",
    "Divisor",
    "GapTuple",
    "KummerShape",
    "NotCoprime",
    "NotDivisor",
    "NotInteger",
    "NotPrimePower",
    "P_INFINITY",
    "ParameterError",
    "PlaceId",
    "PreconditionFailed",
    "PureGapSet",
    "PureGapsError",
    "RamificationData",
    "SnAContext",
    "TooSmall",
    "UnsupportedSupport",
    "bezout_for",
    "binom_solutions",
    "brute_force_pure_gaps",
    "canonical_shape",
    "classify_box",
    "count_in_box",
    "count_pure_gaps_hermitian",
    "count_pure_gaps_quotient",
    "decompose",
    "ell",
    "enumerate_pure_gaps",
    "finite_place",
    "gap_set_oracle",
    "gap_set_single",
    "gaps_pair_via_homma",
    "hermitian",
    "hermitian_pair_closed",
    "is_pure_gap_kummer",
    "is_pure_gap_kummer_inf",
    "is_pure_gap_oracle",
    "is_pure_gap_quotient",
    "is_pure_gap_quotient_inf",
    "is_semigroup_member",
    "make_curve",
    "pair_closed_gaps",
    "pair_closed_pure",
    "ramification_data",
    "s_n_A",
    "s_n_hermitian",
    "sum_gaps_single",
]
