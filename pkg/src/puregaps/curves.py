"""Domain types: curves, places, divisors, gap tuples, and count records.

Everything in this package works on the plane curves

    y^m = x^q + x     over GF(q^2),  m >= 2,  m | q + 1,

which arise as quotients of the Hermitian curve (m = q + 1 gives the
Hermitian curve itself, in the form y^(q+1) = x^q + x).  Writing
N = (q + 1) / m, the genus is (q - 1)(m - 1) / 2.  The q affine points
with y = 0 sit under totally ramified places P_1, ..., P_q, and there is
a single totally ramified place at infinity; those q + 1 places are the
only ones this package ever needs to name.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .errors import NotCoprime, NotDivisor, NotPrimePower, TooSmall
from .intmath import bezout_pair, exact_div, is_prime_power


@dataclass(frozen=True)
class CurveParams:
    """Parameters of the quotient curve y^m = x^q + x.

    Invariants: m * N == q + 1 and genus == (q - 1)(m - 1) / 2.
    Construct through make_curve or hermitian, which validate.
    """

    q: int
    m: int
    N: int
    genus: int

    @property
    def is_hermitian(self) -> bool:
        return self.N == 1

    @property
    def coordinate_bound(self) -> int:
        """Largest value any gap coordinate can take: 2g - 1."""
        return 2 * self.genus - 1

    def __str__(self) -> str:
        return f"y^{self.m} = x^{self.q} + x (N={self.N}, genus={self.genus})"


def make_curve(q: int, m: int, *, unchecked: bool = False) -> CurveParams:
    """Validate (q, m) and build the curve parameters.

    q must be a prime power (trial division; pass unchecked=True to skip
    this and explore the combinatorial formulas for arbitrary q), m >= 2
    must divide q + 1.

    Raises:
        TooSmall: q < 2 or m < 2.
        NotDivisor: m does not divide q + 1.
        NotPrimePower: q is not a prime power and unchecked is False.
    """
    if q < 2:
        raise TooSmall(f"need q >= 2, got {q}")
    if m < 2:
        raise TooSmall(f"need m >= 2, got {m}")
    if (q + 1) % m != 0:
        raise NotDivisor(f"m = {m} does not divide q + 1 = {q + 1}")
    if not unchecked and not is_prime_power(q):
        raise NotPrimePower(f"q = {q} is not a prime power (use unchecked to bypass)")
    genus = exact_div((q - 1) * (m - 1), 2, "genus")
    return CurveParams(q=q, m=m, N=(q + 1) // m, genus=genus)


def hermitian(q: int, *, unchecked: bool = False) -> CurveParams:
    """The Hermitian curve y^(q+1) = x^q + x, i.e. the quotient with m = q + 1."""
    return make_curve(q, q + 1, unchecked=unchecked)


@dataclass(frozen=True)
class KummerShape:
    """Arithmetic shape (m, r, a, b) of a degree-m Kummer cover with r
    totally ramified affine places, where a*r + b*m = 1.

    The membership tests in `membership` are stated for any such shape;
    the quotient curves use r = q with the canonical pair a = -1, b = N.
    """

    m: int
    r: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise TooSmall(f"need m >= 2, got {self.m}")
        if self.a * self.r + self.b * self.m != 1:
            raise NotCoprime(
                f"a*r + b*m = {self.a * self.r + self.b * self.m} != 1 "
                f"for (m, r, a, b) = ({self.m}, {self.r}, {self.a}, {self.b})"
            )


def bezout_for(m: int, r: int) -> KummerShape:
    """Shape with the canonical Bezout pair for coprime (m, r)."""
    a, b = bezout_pair(m, r)
    return KummerShape(m=m, r=r, a=a, b=b)


def canonical_shape(curve: CurveParams) -> KummerShape:
    """The quotient curve viewed as a Kummer cover: r = q, a = -1, b = N."""
    return KummerShape(m=curve.m, r=curve.q, a=-1, b=curve.N)


@dataclass(frozen=True)
class PlaceId:
    """A named place: finite index 1..q, or None for the place at infinity."""

    index: int | None = None

    def is_infinite(self) -> bool:
        return self.index is None

    def __str__(self) -> str:
        return "P_inf" if self.index is None else f"P_{self.index}"


P_INFINITY = PlaceId()


def finite_place(index: int) -> PlaceId:
    """The place above x = alpha_index; indices start at 1."""
    if index < 1:
        raise ValueError(f"finite place index must be >= 1, got {index}")
    return PlaceId(index)


@dataclass(frozen=True)
class GapTuple:
    """A candidate pure gap (t_1, ..., t_n), all coordinates >= 1.

    When includes_infinity is set, the last coordinate belongs to the
    place at infinity; the others always belong to distinct finite
    places.
    """

    coords: tuple[int, ...]
    includes_infinity: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(self.coords))
        if not self.coords:
            raise ValueError("gap tuple must have at least one coordinate")
        if any(t < 1 for t in self.coords):
            raise ValueError(f"gap coordinates must be >= 1, got {self.coords}")

    @property
    def n(self) -> int:
        return len(self.coords)


class Divisor:
    """Formal integer combination of the places P_1..P_q and infinity.

    Finite places are keyed by index; absent keys mean coefficient zero.
    Instances are value objects: every operation returns a new divisor.
    """

    __slots__ = ("finite_coeffs", "infinity_coeff")

    def __init__(
        self,
        finite_coeffs: Mapping[int, int] | None = None,
        infinity_coeff: int = 0,
    ) -> None:
        cleaned = {i: c for i, c in sorted((finite_coeffs or {}).items()) if c != 0}
        self.finite_coeffs: dict[int, int] = cleaned
        self.infinity_coeff: int = infinity_coeff

    @classmethod
    def from_places(cls, places: Sequence[PlaceId], coeffs: Sequence[int]) -> Divisor:
        """Divisor sum(coeffs[i] * places[i]); repeated places accumulate."""
        if len(places) != len(coeffs):
            raise ValueError(f"{len(places)} places but {len(coeffs)} coefficients")
        finite: dict[int, int] = {}
        infinity = 0
        for place, c in zip(places, coeffs):
            if place.is_infinite():
                infinity += c
            else:
                assert place.index is not None
                finite[place.index] = finite.get(place.index, 0) + c
        return cls(finite, infinity)

    @property
    def degree(self) -> int:
        return sum(self.finite_coeffs.values()) + self.infinity_coeff

    def coefficient(self, place: PlaceId) -> int:
        if place.is_infinite():
            return self.infinity_coeff
        return self.finite_coeffs.get(place.index, 0)

    def minus(self, place: PlaceId) -> Divisor:
        """This divisor with the coefficient at one place lowered by 1."""
        if place.is_infinite():
            return Divisor(self.finite_coeffs, self.infinity_coeff - 1)
        assert place.index is not None
        finite = dict(self.finite_coeffs)
        finite[place.index] = finite.get(place.index, 0) - 1
        return Divisor(finite, self.infinity_coeff)

    def __add__(self, other: Divisor) -> Divisor:
        finite = dict(self.finite_coeffs)
        for i, c in other.finite_coeffs.items():
            finite[i] = finite.get(i, 0) + c
        return Divisor(finite, self.infinity_coeff + other.infinity_coeff)

    def __neg__(self) -> Divisor:
        return Divisor(
            {i: -c for i, c in self.finite_coeffs.items()}, -self.infinity_coeff
        )

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return (
            self.finite_coeffs == other.finite_coeffs
            and self.infinity_coeff == other.infinity_coeff
        )

    def __hash__(self) -> int:
        return hash((tuple(self.finite_coeffs.items()), self.infinity_coeff))

    def __repr__(self) -> str:
        return f"Divisor({self.finite_coeffs!r}, infinity_coeff={self.infinity_coeff})"


@dataclass(frozen=True)
class CountTerm:
    """One term of a pure-gap count: weight(A) * s_value at level A."""

    A: int
    weight: int
    s_value: int
    product: int


@dataclass(frozen=True)
class CountBreakdown:
    """A pure-gap count with its per-level terms; total == sum of products."""

    terms: tuple[CountTerm, ...]
    total: int

    @classmethod
    def from_terms(cls, terms: Sequence[CountTerm]) -> CountBreakdown:
        terms = tuple(terms)
        return cls(terms=terms, total=sum(term.product for term in terms))


@dataclass(frozen=True)
class PureGapSet:
    """Result of an exhaustive pure-gap search.

    tuples holds the coordinate tuples in lexicographic order; whether
    the last coordinate belongs to the place at infinity is recorded
    once, in includes_infinity.  bound is the per-coordinate search cap
    (always 2g - 1: larger coordinates cannot be gaps at a single
    place, hence never occur in pure gaps).
    """

    curve: CurveParams
    n: int
    includes_infinity: bool
    tuples: tuple[tuple[int, ...], ...]
    bound: int

    @property
    def count(self) -> int:
        return len(self.tuples)

    def as_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.tuples)

    def gap_tuples(self) -> list[GapTuple]:
        """The stored tuples wrapped as GapTuple values."""
        return [
            GapTuple(coords, includes_infinity=self.includes_infinity)
            for coords in self.tuples
        ]
