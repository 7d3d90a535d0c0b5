"""The complementary symmetric function ``comp_n`` and its specialisations.

``comp_n(V)`` is the coefficient of ``t^n`` in ``prod_{x in V} (1 - x t)``
taken over a hybrid set of variables, so elements of negative multiplicity
contribute a geometric series.  Four independent evaluations are provided:

* :func:`comp_series` -- truncated power series product,
* :func:`comp_monomial` -- explicit monomial sum (square-free in the a's),
* :func:`comp_recursion` -- the two-term recursion peeling one a and one b,
* :func:`comp_incseq` -- sum over strictly increasing index sequences.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import TruncatedSeries, normalize_scalar, to_ring
from .hybrid_core import HybridSet, ellipsis

__all__ = [
    "as_variable_set",
    "comp_series",
    "comp",
    "elementary",
    "complete",
    "star",
    "comp_monomial",
    "comp_recursion",
    "comp_ellipsis",
    "comp_incseq",
]


def as_variable_set(V) -> HybridSet:
    """Coerce to a hybrid set whose elements are ring values (names become symbols)."""
    if not isinstance(V, HybridSet):
        V = HybridSet(V)
    return V.map(to_ring)


def comp_series(V, N: int) -> list:
    """``[comp_0(V), ..., comp_N(V)]``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    V = as_variable_set(V)
    num = TruncatedSeries.one(N)
    den = TruncatedSeries.one(N)
    for x, c in V.items():
        factor = TruncatedSeries([1, -x], N)
        for _ in range(abs(c)):
            if c > 0:
                num = num * factor
            else:
                den = den * factor
    return list(num * den.inverse())


def comp(V, n: int):
    """``comp_n(V)``; zero for negative n."""
    if n < 0:
        return Fraction(0)
    return comp_series(V, n)[n]


def elementary(values: Sequence, n: int):
    """``e_n(values) = comp_n(-values |)``."""
    return comp(HybridSet.from_sides(positive=[-to_ring(v) for v in values]), n)


def complete(values: Sequence, n: int):
    """``h_n(values) = comp_n(| values)``."""
    return comp(HybridSet.from_sides(negative=[to_ring(v) for v in values]), n)


def star(V) -> HybridSet:
    """Negate every variable and its multiplicity; an involution swapping e_n and h_n."""
    V = as_variable_set(V)
    return -V.map(lambda x: -x)


def comp_monomial(A: Sequence, B: Sequence, n: int):
    """``comp_n(A|B) = sum_j (-1)^j e_j(A) h_{n-j}(B)``, enumerating monomials directly."""
    if n < 0:
        return Fraction(0)
    A = [to_ring(a) for a in A]
    B = [to_ring(b) for b in B]
    total = Fraction(0)
    for j in range(min(n, len(A)) + 1):
        if n - j > 0 and not B:
            continue
        sign = -1 if j % 2 else 1
        for sub in itertools.combinations(A, j):
            ea = Fraction(sign)
            for a in sub:
                ea = ea * a
            for multi in itertools.combinations_with_replacement(B, n - j):
                term = ea
                for b in multi:
                    term = term * b
                total = total + term
    return normalize_scalar(total)


def comp_ellipsis(a: Callable[[int], object], b: Callable[[int], object], m: int, k: int, n: int):
    """``comp_n({a_1..a_m} - {b_1..b_k})`` for arbitrary integers m, k via recursion.

    Pairs ``(a_m, b_k)`` are peeled first, then lone a's, then lone b's; for
    negative m or k the ellipsis is grown back towards zero instead.
    """
    memo: dict = {}

    def go(m, k, n):
        if n < 0:
            return Fraction(0)
        if n == 0:
            return Fraction(1)
        key = (m, k, n)
        if key in memo:
            return memo[key]
        if m > 0 and k > 0:
            val = go(m - 1, k - 1, n) + (to_ring(b(k)) - to_ring(a(m))) * go(m - 1, k, n - 1)
        elif m > 0:
            val = go(m - 1, k, n) - to_ring(a(m)) * go(m - 1, k, n - 1)
        elif k > 0:
            val = go(m, k - 1, n) + to_ring(b(k)) * go(m, k, n - 1)
        elif m < 0:
            # {a_1..a_m} = {a_1..a_{m+1}} - {a_{m+1}|}
            val = go(m + 1, k, n) + to_ring(a(m + 1)) * go(m, k, n - 1)
        elif k < 0:
            val = go(m, k + 1, n) - to_ring(b(k + 1)) * go(m, k + 1, n - 1)
        else:
            val = Fraction(0)
        memo[key] = normalize_scalar(val)
        return memo[key]

    return go(m, k, n)


def comp_recursion(A: Sequence, B: Sequence, n: int):
    """``comp_n(a_1..a_m | b_1..b_k)`` by the two-term recursion, memoised."""
    A, B = list(A), list(B)
    return comp_ellipsis(lambda i: A[i - 1], lambda i: B[i - 1], len(A), len(B), n)


def comp_incseq(A: Sequence, B: Sequence, n: int):
    """``sum over 0 < α_1 < ... < α_n of prod_i (b_{α_i + 1 - i} - a_{α_i})``.

    Out-of-range a's and b's are zero; indices beyond ``|A| + |B| + n`` give
    vanishing factors and are not enumerated.
    """
    if n < 0:
        return Fraction(0)
    A = [to_ring(x) for x in A]
    B = [to_ring(x) for x in B]

    def a(i):
        return A[i - 1] if 1 <= i <= len(A) else Fraction(0)

    def b(i):
        return B[i - 1] if 1 <= i <= len(B) else Fraction(0)

    cutoff = len(A) + len(B) + n
    total = Fraction(0)
    for alpha in itertools.combinations(range(1, cutoff + 1), n):
        term = Fraction(1)
        for i, ai in enumerate(alpha, start=1):
            f = b(ai + 1 - i) - a(ai)
            if f == 0:
                term = Fraction(0)
                break
            term = term * f
        total = total + term
    return normalize_scalar(total)


def comp_of_ellipsis(seq: Callable[[int], object], i: int, j: int, n: int):
    """``comp_n`` over the ellipsis ``{seq_i..seq_j}``."""
    return comp(ellipsis(seq, i, j), n)
