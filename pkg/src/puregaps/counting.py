"""Closed-form and recursive counts of gaps and pure gaps.

Pure gaps at n of the finite totally ramified places are counted level
by level: a tuple (t_1, ..., t_n) decomposes coordinatewise as
t_k = m*i_k + j_k with 1 <= j_k <= m - 1, the level A = i_1 + ... + i_n
contributes a stars-and-bars weight C(A + n - 1, n - 1), and the number
of admissible residue vectors (j_1, ..., j_n) at that level is an
integer s_value given by a closed recursion.  Everything here is exact
integer arithmetic; any division that must come out even is checked.

The two-place counts are tied together by the classical identity

    #G(Q1, Q2) = sum(G(Q1)) + sum(G(Q2)) - #G0(Q1, Q2)

relating the gap count of a pair to the single-place gap sums and the
pure-gap count (Homma's identity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .curves import CountBreakdown, CountTerm, CurveParams
from .errors import BadArity, PreconditionFailed, TooSmall
from .intmath import ceil_div, exact_div


def binom_solutions(A: int, n: int) -> int:
    """Number of (i_1, ..., i_n) with i_k >= 0 and sum i_k = A: C(A+n-1, n-1)."""
    if A < 0:
        raise ValueError(f"need A >= 0, got {A}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return math.comb(A + n - 1, n - 1)


def s_n_hermitian(n: int, t: int) -> int:
    """Residue-vector count at one level of the Hermitian curve.

    S_0(t) = 1, and for n >= 1:

        S_n(t) = (t - n) * t^(n-1)   if t >= n + 1, else 0.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n == 0:
        return 1
    if t <= n:
        return 0
    return (t - n) * t ** (n - 1)


def count_pure_gaps_hermitian(q: int, n: int) -> CountBreakdown:
    """Pure gaps at n finite places of the Hermitian curve (m = q + 1).

    #G0 = sum over A = 0..q-n-1 of C(A+n-1, n-1) * (q-A-n) * (q-A)^(n-1);
    the set is empty for n >= q.
    """
    if q < 2:
        raise TooSmall(f"need q >= 2, got {q}")
    if n < 2:
        raise BadArity(f"need n >= 2, got {n}")
    terms = []
    for A in range(0, max(0, q - n)):
        weight = binom_solutions(A, n)
        s_value = s_n_hermitian(n, q - A)
        terms.append(CountTerm(A=A, weight=weight, s_value=s_value, product=weight * s_value))
    return CountBreakdown.from_terms(terms)


def hermitian_pair_closed(q: int) -> int:
    """Closed form for the Hermitian two-place pure-gap count:

    #G0(P1, P2) = q(q-1)(q-2)(q+3) / 12.
    """
    if q < 2:
        raise TooSmall(f"need q >= 2, got {q}")
    return exact_div(q * (q - 1) * (q - 2) * (q + 3), 12, "hermitian pair count")


@dataclass(frozen=True)
class SnAContext:
    """Level context for the quotient-curve residue count.

    For level A write q - A = N*(t - 1) + beta with 1 <= beta <= N; then
    t = ceil((q - A) / N).  The thresholds lam(k) = ceil((k - beta)/N) + 1
    (so lam(1) = 1) drive the recursion in s_n_A.
    """

    q: int
    N: int
    A: int
    t: int
    beta: int

    @classmethod
    def from_parameters(cls, q: int, N: int, A: int) -> SnAContext:
        if N < 1:
            raise ValueError(f"need N >= 1, got {N}")
        if A < 0:
            raise ValueError(f"need A >= 0, got {A}")
        if q - A < 1:
            raise PreconditionFailed(f"need A <= q - 1, got A = {A} for q = {q}")
        t = ceil_div(q - A, N)
        beta = (q - A) - N * (t - 1)
        return cls(q=q, N=N, A=A, t=t, beta=beta)

    def lam(self, k: int) -> int:
        return ceil_div(k - self.beta, self.N) + 1


@lru_cache(maxsize=None)
def _s_quotient(n: int, t: int, beta: int, N: int) -> int:
    # The recursion depends on A only through beta (and N); caching on
    # (n, t, beta, N) therefore shares work across levels and curves.
    if n == 0:
        return 1
    if n <= beta:
        return (t - 1) ** n
    lam_n = ceil_div(n - beta, N) + 1
    if t <= lam_n:
        return 0
    return sum(
        math.comb(n, i) * _s_quotient(i, lam_n, beta, N) * (t - lam_n) ** (n - i)
        for i in range(n)
    )


def s_n_A(n: int, ctx: SnAContext) -> int:
    """Residue-vector count at level A of the quotient curve.

    S^A_0(t) = 1; S^A_n(t) = (t - 1)^n for 1 <= n <= beta; and for
    n > beta, with lam_n = ceil((n - beta)/N) + 1:

        S^A_n(t) = 0                                        if t <= lam_n,
        S^A_n(t) = sum_{i=0}^{n-1} C(n, i) * S^A_i(lam_n)
                                  * (t - lam_n)^(n - i)     otherwise,

    where the inner counts reuse the same beta and thresholds.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return _s_quotient(n, ctx.t, ctx.beta, ctx.N)


def count_pure_gaps_quotient(curve: CurveParams, n: int) -> CountBreakdown:
    """Pure gaps at n of the finite places P_1..P_q of the quotient curve.

    #G0 = sum over A = 0..q-n-N of C(A+n-1, n-1) * S^A_n(t_A); the set
    is empty for n > q - N.
    """
    if n < 2:
        raise BadArity(f"need n >= 2, got {n}")
    q, N = curve.q, curve.N
    terms = []
    for A in range(0, max(0, q - n - N + 1)):
        ctx = SnAContext.from_parameters(q, N, A)
        weight = binom_solutions(A, n)
        s_value = s_n_A(n, ctx)
        terms.append(CountTerm(A=A, weight=weight, s_value=s_value, product=weight * s_value))
    return CountBreakdown.from_terms(terms)


def _require_pair_preconditions(curve: CurveParams) -> None:
    if curve.q - 2 - curve.N < 0:
        raise PreconditionFailed(
            f"pair closed forms need q - 2 - N >= 0, got q = {curve.q}, N = {curve.N}"
        )


def pair_closed_pure(curve: CurveParams) -> int:
    """Closed form for the two-place pure-gap count on the quotient curve:

    #G0(P1, P2) = (q+1)(m-1)/12 * ((q+1)(m-1) - 2m + N + 7) - q(m-1),

    valid when q - 2 - N >= 0 (equivalently, when two-place pure gaps
    can exist at all).
    """
    _require_pair_preconditions(curve)
    q, m, N = curve.q, curve.m, curve.N
    value = exact_div(
        (q + 1) * (m - 1) * ((q + 1) * (m - 1) - 2 * m + N + 7), 12, "pair pure count"
    ) - q * (m - 1)
    return value


def pair_closed_gaps(curve: CurveParams) -> int:
    """Closed form for the two-place gap count on the quotient curve:

    #G(P1, P2) = (m-1)/12 * ((3m-1)q^2 - (6m+N+5)q + 3m - N - 4) + q(m-1),

    valid when q - 2 - N >= 0.
    """
    _require_pair_preconditions(curve)
    q, m, N = curve.q, curve.m, curve.N
    value = exact_div(
        (m - 1) * ((3 * m - 1) * q * q - (6 * m + N + 5) * q + 3 * m - N - 4),
        12,
        "pair gap count",
    ) + q * (m - 1)
    return value


def gap_set_single(curve: CurveParams) -> list[int]:
    """Gap set at one finite place: {m*k + j : 1 <= j <= m-1, 0 <= k <= q-1-N*j}.

    Sorted ascending; its cardinality is the genus.
    """
    q, m, N = curve.q, curve.m, curve.N
    gaps = {
        m * k + j
        for j in range(1, m)
        for k in range(0, q - N * j)
    }
    return sorted(gaps)


def sum_gaps_single(curve: CurveParams) -> int:
    """Sum of the gaps at one finite place:

    sum(G(P1)) = (m-1)(q-1)(2qm - m - q - 1) / 12.
    """
    q, m = curve.q, curve.m
    return exact_div((m - 1) * (q - 1) * (2 * q * m - m - q - 1), 12, "gap sum")


def gaps_pair_via_homma(sum1: int, sum2: int, pure_count: int) -> int:
    """Two-place gap count from the single-place gap sums and the pure count."""
    if sum1 < 0 or sum2 < 0 or pure_count < 0:
        raise ValueError("gap sums and pure count must be nonnegative")
    return sum1 + sum2 - pure_count
