"""Riemann-Roch dimension oracle via the cyclic-cover decomposition.

Functions on y^m = x^q + x split as f = sum_{t=0}^{m-1} f_t(x) * y^t,
and for divisors supported on the totally ramified places the space
L(D) splits along the powers of y.  Component t contributes the
dimension of a divisor class on the projective line, so

    l(D) = sum_{t=0}^{m-1} max(0, deg_t + 1),
    deg_t = sum_i floor((a_i + t) / m) + floor((a_inf - t*q) / m)

for D = sum_i a_i * P_i + a_inf * P_infinity, using the principal
divisors (y) = P_1 + ... + P_q - q * P_infinity and
(x - alpha_i) = m * P_i - m * P_infinity.

This route computes dimensions only; it never evaluates the ceiling
inequalities in `membership`.  The two are compared in tests and by the
verify command.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .curves import CurveParams, Divisor, GapTuple, PlaceId, PureGapSet
from .errors import BadArity, PreconditionFailed, UnsupportedSupport
from .limits import charge, resolve_work_limit


@dataclass(frozen=True)
class RamificationData:
    """Recorded ramification constants behind the decomposition above."""

    curve: CurveParams
    div_y: Divisor
    e: int
    v_inf_x: int
    v_inf_y: int


def ramification_data(curve: CurveParams) -> RamificationData:
    """Principal divisor of y and the valuations the oracle relies on."""
    div_y = Divisor({i: 1 for i in range(1, curve.q + 1)}, -curve.q)
    return RamificationData(
        curve=curve, div_y=div_y, e=curve.m, v_inf_x=-curve.m, v_inf_y=-curve.q
    )


def _ell_values(m: int, q: int, finite_values, a_inf: int) -> int:
    total = 0
    for t in range(m):
        deg = (a_inf - t * q) // m
        for a in finite_values:
            deg += (a + t) // m
        if deg >= 0:
            total += deg + 1
    return total


def ell(curve: CurveParams, D: Divisor) -> int:
    """dim L(D) for a divisor supported on P_1..P_q and infinity.

    Raises UnsupportedSupport when a finite coefficient sits outside
    1..q.
    """
    for index in D.finite_coeffs:
        if not 1 <= index <= curve.q:
            raise UnsupportedSupport(
                f"finite place index {index} outside 1..{curve.q}"
            )
    return _ell_values(curve.m, curve.q, D.finite_coeffs.values(), D.infinity_coeff)


def _check_places(curve: CurveParams, places) -> None:
    if len(set(places)) != len(places):
        raise ValueError(f"places must be distinct, got {[str(p) for p in places]}")
    for position, place in enumerate(places):
        if place.is_infinite():
            if position != len(places) - 1:
                raise ValueError("the infinite place must come last")
        elif not 1 <= place.index <= curve.q:
            raise UnsupportedSupport(
                f"finite place index {place.index} outside 1..{curve.q}"
            )


def is_pure_gap_oracle(curve: CurveParams, places, t: GapTuple) -> bool:
    """Dimension test: (t_1..t_n) is a pure gap iff l(D) = l(D - all places).

    Lowering every coordinate by one must leave the dimension unchanged;
    that single comparison is equivalent to l(D) = l(D - Q_j) for each j.
    """
    places = tuple(places)
    if len(places) != t.n:
        raise BadArity(f"{len(places)} places for a {t.n}-tuple")
    if t.includes_infinity != any(p.is_infinite() for p in places):
        raise PreconditionFailed("includes_infinity must match the places")
    _check_places(curve, places)
    upper = Divisor.from_places(places, t.coords)
    lower = Divisor.from_places(places, [c - 1 for c in t.coords])
    return ell(curve, upper) == ell(curve, lower)


def is_semigroup_member(curve: CurveParams, places, s) -> bool:
    """Whether (s_1..s_n) lies in the Weierstrass semigroup of the places.

    True iff some function has pole divisor exactly sum s_i Q_i, i.e.
    l(D) > l(D - Q_j) for every j with s_j >= 1.  The all-zero tuple is
    a member.  Requires n <= q so that enough finite places exist for
    the pole-pattern argument to apply.
    """
    places = tuple(places)
    s = tuple(s)
    if len(places) != len(s):
        raise BadArity(f"{len(places)} places for a {len(s)}-tuple")
    if len(places) > curve.q:
        raise BadArity(f"need n <= q = {curve.q}, got {len(places)}")
    if any(v < 0 for v in s):
        raise ValueError(f"semigroup coordinates must be >= 0, got {s}")
    _check_places(curve, places)
    D = Divisor.from_places(places, s)
    full = ell(curve, D)
    for place, coeff in zip(places, s):
        if coeff >= 1 and ell(curve, D.minus(place)) >= full:
            return False
    return True


def brute_force_pure_gaps(
    curve: CurveParams, places, work_limit: int | None = None
) -> PureGapSet:
    """All pure gaps at the given places by exhaustive dimension tests.

    Scans the box [1, 2g-1]^n.  The infinite place, if present, must be
    last.  Raises BadArity unless 2 <= n <= q, and BoxTooLarge when the
    scan would exceed the work limit.
    """
    places = tuple(places)
    n = len(places)
    if not 2 <= n <= curve.q:
        raise BadArity(f"need 2 <= n <= q = {curve.q}, got {n}")
    _check_places(curve, places)
    bound = curve.coordinate_bound
    limit = resolve_work_limit(work_limit)
    with_infinity = places[-1].is_infinite()
    if with_infinity:
        found = _brute_infinite(curve, n, bound, limit)
    else:
        found = _brute_finite(curve, n, bound, limit)
    return PureGapSet(
        curve=curve,
        n=n,
        includes_infinity=with_infinity,
        tuples=tuple(sorted(found)),
        bound=bound,
    )


def _brute_finite(curve: CurveParams, n: int, bound: int, limit: int) -> list[tuple[int, ...]]:
    q, m = curve.q, curve.m
    charge(2 * math.comb(bound + n - 1, n), limit, f"dimension scan of [1, {bound}]^{n}")
    # l(D) depends only on the multiset of finite coefficients (the
    # degree formula sums over values), so scan sorted tuples once and
    # expand to their distinct orderings; which distinct finite places
    # carry the coordinates is immaterial as well.
    found: list[tuple[int, ...]] = []
    for tup in itertools.combinations_with_replacement(range(1, bound + 1), n):
        lowered = [v - 1 for v in tup]
        if _ell_values(m, q, tup, 0) == _ell_values(m, q, lowered, 0):
            found.extend(set(itertools.permutations(tup)))
    return found


def _brute_infinite(curve: CurveParams, n: int, bound: int, limit: int) -> list[tuple[int, ...]]:
    q, m = curve.q, curve.m
    charge(
        2 * (bound + 1) * math.comb(bound + n - 2, n - 1),
        limit,
        f"dimension scan of [1, {bound}]^{n} with infinity",
    )
    # Split deg_t into the finite-block part and the infinity part so the
    # innermost loop over the infinity coordinate only recombines per-t
    # partial degrees.  inf_part[t][a] = floor((a - t*q)/m) for a in [0, bound].
    inf_part = [[(a - t * q) // m for a in range(bound + 1)] for t in range(m)]
    found: list[tuple[int, ...]] = []
    for fin in itertools.combinations_with_replacement(range(1, bound + 1), n - 1):
        fin_perms = sorted(set(itertools.permutations(fin)))
        upper_part = [sum((a + t) // m for a in fin) for t in range(m)]
        lower_part = [sum((a - 1 + t) // m for a in fin) for t in range(m)]
        for t_inf in range(1, bound + 1):
            upper = 0
            lower = 0
            for t in range(m):
                du = upper_part[t] + inf_part[t][t_inf]
                if du >= 0:
                    upper += du + 1
                dl = lower_part[t] + inf_part[t][t_inf - 1]
                if dl >= 0:
                    lower += dl + 1
            if upper == lower:
                found.extend((*perm, t_inf) for perm in fin_perms)
    return found


def gap_set_oracle(curve: CurveParams, place: PlaceId) -> list[int]:
    """Gap sequence of one place: s in [1, 2g-1] with l(s*P) = l((s-1)*P)."""
    _check_places(curve, (place,))
    gaps = []
    for s in range(1, curve.coordinate_bound + 1):
        if place.is_infinite():
            same = _ell_values(curve.m, curve.q, (), s) == _ell_values(
                curve.m, curve.q, (), s - 1
            )
        else:
            same = _ell_values(curve.m, curve.q, (s,), 0) == _ell_values(
                curve.m, curve.q, (s - 1,), 0
            )
        if same:
            gaps.append(s)
    return gaps
