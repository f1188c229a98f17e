"""Pure-gap membership by ceiling inequalities, and exhaustive search.

A tuple (t_1, ..., t_n) of positive integers is a pure gap at places
(Q_1, ..., Q_n) when l(D) = l(D - Q_j) for D = sum t_i Q_i and every j.
On a degree-m Kummer cover of the projective line with r totally
ramified affine places this is decided by explicit ceiling inequalities
in the t_i alone; the functions here evaluate those inequalities and
nothing else.  The independent dimension route lives in
`riemann_roch` and shares no code with this module; the two are
compared in tests and by the verify command.
"""

from __future__ import annotations

import itertools
import math
from typing import NamedTuple

from .curves import CurveParams, GapTuple, KummerShape, PureGapSet, finite_place
from .errors import BadArity, PreconditionFailed
from .intmath import ceil_div
from .limits import charge, resolve_work_limit
from .riemann_roch import is_semigroup_member


def decompose(t_k: int, m: int) -> tuple[int, int]:
    """Split t_k >= 1 as t_k = m*i + j with i >= 0 and 1 <= j <= m.

    This is the coordinate decomposition behind the level counts: i is
    the level contribution and j the residue (j = m marks a multiple of
    m, which can never be a gap coordinate).
    """
    if t_k < 1:
        raise ValueError(f"need t_k >= 1, got {t_k}")
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    j = (t_k - 1) % m + 1
    return (t_k - j) // m, j


def _finite_ok(coords: tuple[int, ...], m: int, r: int) -> bool:
    # (t_1..t_n) is a pure gap at n finite places iff for every k:
    #   m * sum_{s != k} ceil((t_k - t_s)/m) + m*(r-n)*ceil(t_k/m) > r*t_k.
    # The s = k term is ceil(0/m) = 0, so the sum may run over all s.
    n = len(coords)
    w = m * (r - n)
    for tk in coords:
        lhs = w * ceil_div(tk, m)
        for ts in coords:
            lhs += m * ceil_div(tk - ts, m)
        if lhs <= r * tk:
            return False
    return True


def _infinite_ok(coords: tuple[int, ...], m: int, r: int, a: int, b: int) -> bool:
    # Variant with the infinite place carrying the last coordinate t_n.
    # Two families of strict inequalities must hold:
    #   m * sum_{i=2}^{n-1} ceil((-a*t_n - t_i)/m) + m*(r-n+1)*ceil(-a*t_n/m)
    #       > t_1 + (a + b*m)*t_n
    # and for each finite position j:
    #   m * sum_{i != j} ceil((t_j - t_i)/m) + m*(r-n+1)*ceil(t_j/m)
    #       > t_n + r*t_j.
    # The first finite coordinate t_1 is deliberately absent from the
    # first sum and enters only on its right-hand side; the test suite
    # pins this asymmetry against the dimension oracle.
    n = len(coords)
    tn = coords[-1]
    w = m * (r - n + 1)
    lhs = w * ceil_div(-a * tn, m)
    for ti in coords[1:-1]:
        lhs += m * ceil_div(-a * tn - ti, m)
    if lhs <= coords[0] + (a + b * m) * tn:
        return False
    finite = coords[:-1]
    for tj in finite:
        lhs = w * ceil_div(tj, m)
        for ti in finite:
            lhs += m * ceil_div(tj - ti, m)
        if lhs <= tn + r * tj:
            return False
    return True


def is_pure_gap_kummer(shape: KummerShape, t: GapTuple) -> bool:
    """Ceiling test at n distinct finite totally ramified places (2 <= n <= r)."""
    if t.includes_infinity:
        raise PreconditionFailed("finite-place test requires a tuple without infinity")
    if not 2 <= t.n <= shape.r:
        raise BadArity(f"need 2 <= n <= r = {shape.r}, got n = {t.n}")
    return _finite_ok(t.coords, shape.m, shape.r)


def is_pure_gap_kummer_inf(shape: KummerShape, t: GapTuple) -> bool:
    """Ceiling test with the infinite place last (2 <= n <= r + 1)."""
    if not t.includes_infinity:
        raise PreconditionFailed("infinite-place test requires includes_infinity")
    if not 2 <= t.n <= shape.r + 1:
        raise BadArity(f"need 2 <= n <= r + 1 = {shape.r + 1}, got n = {t.n}")
    return _infinite_ok(t.coords, shape.m, shape.r, shape.a, shape.b)


def is_pure_gap_quotient(curve: CurveParams, t: GapTuple) -> bool:
    """Ceiling test at n of the finite places of the quotient curve.

    Specialization of the finite-place Kummer test to r = q:

        m * sum_{s != k} ceil((t_k - t_s)/m) + m*(q-n)*ceil(t_k/m) > q*t_k
        for every k.
    """
    if t.includes_infinity:
        raise PreconditionFailed("finite-place test requires a tuple without infinity")
    if not 2 <= t.n <= curve.q:
        raise BadArity(f"need 2 <= n <= q = {curve.q}, got n = {t.n}")
    return _finite_ok(t.coords, curve.m, curve.q)


def is_pure_gap_quotient_inf(curve: CurveParams, t: GapTuple) -> bool:
    """Ceiling test at n - 1 finite places plus infinity on the quotient curve.

    Uses the canonical Bezout pair a = -1, b = N, under which the first
    inequality reads

        m * sum_{i=2}^{n-1} ceil((t_n - t_i)/m) + m*(q-n+1)*ceil(t_n/m)
            > t_1 + q*t_n.
    """
    if not t.includes_infinity:
        raise PreconditionFailed("infinite-place test requires includes_infinity")
    if not 2 <= t.n <= curve.q + 1:
        raise BadArity(f"need 2 <= n <= q + 1 = {curve.q + 1}, got n = {t.n}")
    return _infinite_ok(t.coords, curve.m, curve.q, -1, curve.N)


def _scan_finite(curve: CurveParams, n: int, bound: int, limit: int) -> list[tuple[int, ...]]:
    q, m = curve.q, curve.m
    charge(math.comb(bound + n - 1, n), limit, f"pure-gap scan of [1, {bound}]^{n}")
    # Each inequality weighs one coordinate value against the multiset of
    # all values, so membership is invariant under reordering; scanning
    # sorted tuples once and expanding to their distinct orderings visits
    # the same set an odometer over the full box would.
    ceil_block = [
        [m * ceil_div(u - v, m) for v in range(bound + 1)] for u in range(bound + 1)
    ]
    slack = [m * (q - n) * ceil_div(u, m) - q * u for u in range(bound + 1)]
    found: list[tuple[int, ...]] = []
    for tup in itertools.combinations_with_replacement(range(1, bound + 1), n):
        member = True
        for v in set(tup):
            row = ceil_block[v]
            if slack[v] + sum(row[u] for u in tup) <= 0:
                member = False
                break
        if member:
            found.extend(set(itertools.permutations(tup)))
    return found


def _scan_infinite(curve: CurveParams, n: int, bound: int, limit: int) -> list[tuple[int, ...]]:
    q, m = curve.q, curve.m
    charge(
        bound * bound * math.comb(bound + n - 3, n - 2),
        limit,
        f"pure-gap scan of [1, {bound}]^{n} with infinity",
    )
    # The first and last coordinates play special roles; only the middle
    # block (positions 2..n-1) is scanned as a sorted multiset and
    # expanded to its distinct orderings afterwards.
    ceil_block = [
        [m * ceil_div(u - v, m) for v in range(bound + 1)] for u in range(bound + 1)
    ]
    slack = [m * (q - n + 1) * ceil_div(u, m) - q * u for u in range(bound + 1)]
    found: list[tuple[int, ...]] = []
    for mid in itertools.combinations_with_replacement(range(1, bound + 1), n - 2):
        mid_perms = sorted(set(itertools.permutations(mid)))
        mid_vals = set(mid)
        mid_sum = [sum(ceil_block[u][v] for v in mid) for u in range(bound + 1)]
        for t1 in range(1, bound + 1):
            # Each finite-position inequality is an upper bound on t_n:
            # t_n < slack[v] + sum over the finite block of the ceil terms.
            cap = slack[t1] + mid_sum[t1]
            for v in mid_vals:
                cap_v = slack[v] + ceil_block[v][t1] + mid_sum[v]
                if cap_v < cap:
                    cap = cap_v
            for tn in range(1, min(bound, cap - 1) + 1):
                if slack[tn] + mid_sum[tn] > t1:
                    found.extend((t1, *perm, tn) for perm in mid_perms)
    return found


def enumerate_pure_gaps(
    curve: CurveParams,
    n: int,
    include_infinity: bool = False,
    work_limit: int | None = None,
) -> PureGapSet:
    """All pure gaps of the quotient curve by exhaustive ceiling tests.

    Scans the box [1, 2g-1]^n (no gap coordinate can exceed 2g - 1) at
    (P_1, ..., P_n), or at (P_1, ..., P_{n-1}, P_infinity) when
    include_infinity is set.  Output is lexicographically sorted.

    Raises BadArity unless 2 <= n <= q, and BoxTooLarge when the scan
    would exceed the work limit.
    """
    if not 2 <= n <= curve.q:
        raise BadArity(f"need 2 <= n <= q = {curve.q}, got {n}")
    bound = curve.coordinate_bound
    limit = resolve_work_limit(work_limit)
    if include_infinity:
        found = _scan_infinite(curve, n, bound, limit)
    else:
        found = _scan_finite(curve, n, bound, limit)
    return PureGapSet(
        curve=curve,
        n=n,
        includes_infinity=include_infinity,
        tuples=tuple(sorted(found)),
        bound=bound,
    )


class BoxCounts(NamedTuple):
    pure: int
    semigroup: int
    total: int


def classify_box(
    curve: CurveParams, t1_max: int, t2_max: int
) -> list[tuple[int, int, str]]:
    """Classify every lattice point of [0, t1_max] x [0, t2_max] at (P_1, P_2).

    Returns (t1, t2, class) triples in lexicographic order, class being
    "semigroup" (decided by the dimension oracle), "pure_gap" (decided
    by the ceiling test, coordinates >= 1 only), or "gap" for the rest.
    """
    if t1_max < 0 or t2_max < 0:
        raise ValueError("box corners must be nonnegative")
    limit = resolve_work_limit(None)
    charge(3 * (t1_max + 1) * (t2_max + 1), limit, f"box scan [0,{t1_max}]x[0,{t2_max}]")
    places = (finite_place(1), finite_place(2))
    out: list[tuple[int, int, str]] = []
    for t1 in range(t1_max + 1):
        for t2 in range(t2_max + 1):
            if is_semigroup_member(curve, places, (t1, t2)):
                cls = "semigroup"
            elif t1 >= 1 and t2 >= 1 and _finite_ok((t1, t2), curve.m, curve.q):
                cls = "pure_gap"
            else:
                cls = "gap"
            out.append((t1, t2, cls))
    return out


def count_in_box(curve: CurveParams, t1_max: int, t2_max: int) -> BoxCounts:
    """Pure-gap, semigroup and total lattice-point counts over the box (pairs only)."""
    classes = classify_box(curve, t1_max, t2_max)
    pure = sum(1 for _, _, cls in classes if cls == "pure_gap")
    members = sum(1 for _, _, cls in classes if cls == "semigroup")
    return BoxCounts(pure=pure, semigroup=members, total=(t1_max + 1) * (t2_max + 1))
