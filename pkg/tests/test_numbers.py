import itertools
from fractions import Fraction
from math import comb

import pytest
import sympy as sp

from hybridset.algebra import LaurentPoly, TruncatedSeries
from hybridset.errors import UnsupportedRegionError
from hybridset.numbers import (
    Region,
    binomial,
    binomial_series,
    gaussian,
    region,
    stirling1,
    stirling1_pq,
    stirling1_q,
    stirling1_region2,
    stirling2,
    stirling2_pq,
    stirling2_q,
    table,
)
from oracles import to_sympy

q = LaurentPoly.var("q")
p = LaurentPoly.var("p")
half = Fraction(1, 2)
sqrt_pq = LaurentPoly.monomial({"p": half, "q": half})
GRID = range(-6, 7)


def sgn(e):
    return -1 if e % 2 else 1


# ---- regions and binomials --------------------------------------------------


def test_regions_partition_plane():
    preds = {
        Region.R1: lambda n, k: n >= k >= 0,
        Region.R2: lambda n, k: k >= 0 > n,
        Region.R3: lambda n, k: 0 > n >= k,
        Region.R4: lambda n, k: k > n >= 0,
        Region.R5: lambda n, k: 0 > k > n,
        Region.R6: lambda n, k: n >= 0 > k,
    }
    for n, k in itertools.product(range(-8, 9), repeat=2):
        hits = [r for r, f in preds.items() if f(n, k)]
        assert hits == [region(n, k)]


def test_binomial_examples():
    assert binomial(-2, 2) == 3
    assert binomial(-4, 4) == 35
    assert binomial(0, 0) == 1


def _gamma_limit(n, k):
    """Independent oracle: the epsilon limit of Gamma(n+1)/(Gamma(k+1)Gamma(n-k+1))."""
    e = sp.Symbol("e")
    expr = sp.gamma(n + 1 + e) / (sp.gamma(k + 1 + e) * sp.gamma(n - k + 1 + e))
    return sp.limit(sp.gammasimp(expr), e, 0)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(-4, 5) for k in range(-4, 5)])
def test_binomial_matches_gamma_limit(n, k):
    assert binomial(n, k) == _gamma_limit(n, k)


def test_pascal_everywhere_but_origin():
    bad = [(n, k) for n in GRID for k in GRID if binomial(n, k) != binomial(n - 1, k) + binomial(n - 1, k - 1)]
    assert bad == [(0, 0)]
    assert binomial(-1, -1) + binomial(-1, 0) == 2 != binomial(0, 0)


def test_complementation():
    for n, m in itertools.product(GRID, repeat=2):
        assert binomial(n, m) == binomial(n, n - m)


def test_iteration():
    R = range(-4, 5)
    for i, j, k in itertools.product(R, R, R):
        assert binomial(i, j) * binomial(j, k) == binomial(i, k) * binomial(i - k, j - k)


def test_iteration_with_lower_index_i_minus_j_fails():
    # with i-j on top the identity already fails classically: 6*2 != 4*2
    assert binomial(4, 2) * binomial(2, 1) == 12
    assert binomial(4, 1) * binomial(4 - 2, 2 - 1) == 8
    R = range(-4, 5)
    bad = [t for t in itertools.product(R, R, R)
           if binomial(t[0], t[1]) * binomial(t[1], t[2]) != binomial(t[0], t[2]) * binomial(t[0] - t[1], t[1] - t[2])]
    assert len(bad) == 240


def test_binomial_series_examples():
    assert binomial_series(-1, 5) == [1, -1, 1, -1, 1, -1]
    assert binomial_series(2, 4) == [1, 2, 1, 0, 0]
    assert binomial_series(-3, 2)[2] == 6


@pytest.mark.parametrize("n", range(-4, 5))
def test_binomial_series_matches_series_inverse(n):
    J = 8
    base = TruncatedSeries([1, 1], J)
    if n >= 0:
        s = TruncatedSeries.one(J)
        for _ in range(n):
            s = s * base
    else:
        s = TruncatedSeries.one(J)
        inv = base.inverse()
        for _ in range(-n):
            s = s * inv
    assert binomial_series(n, J) == list(s)
    assert binomial_series(n, J) == [binomial(n, n - j) for j in range(J + 1)]


# ---- Gaussian coefficients --------------------------------------------------


def test_gaussian_examples():
    assert gaussian(2, 1) == 1 + q
    assert gaussian(-2, -3) == -(q**-2) - q**-1
    for n in range(-5, 6):
        assert gaussian(n, n) == 1


def test_gaussian_region2_unsupported():
    with pytest.raises(UnsupportedRegionError):
        gaussian(-1, 2)
    assert gaussian(2, 5) == 0 and gaussian(-5, -2) == 0 and gaussian(3, -1) == 0


@pytest.mark.parametrize("n,k", [(n, k) for n in range(0, 7) for k in range(0, n + 1)])
def test_gaussian_product_formula(n, k):
    Q = sp.Symbol("q")
    num = sp.prod([Q ** (n + 1 - i) - 1 for i in range(1, k + 1)])
    den = sp.prod([Q**i - 1 for i in range(1, k + 1)])
    # this convention carries the extra factor q^{C(n-k,2)} relative to the product
    ref = sp.expand(sp.cancel(num / den) * Q ** comb(n - k, 2))
    assert sp.expand(to_sympy(gaussian(n, k), {"q": Q}) - ref) == 0


def test_gaussian_recursion_within_regions():
    checked = 0
    for n, k in itertools.product(range(-5, 6), repeat=2):
        cells = [(n, k), (n - 1, k - 1), (n - 1, k)]
        if any(region(*c) is Region.R2 for c in cells):
            continue
        checked += 1
        assert gaussian(n, k) == gaussian(n - 1, k - 1) + q ** (n - 1) * gaussian(n - 1, k)
        assert gaussian(n, k).specialize({"q": 1}) == binomial(n, k)
    assert checked > 60


def test_reflection_with_sign_n_minus_k():
    for n in range(5):
        for k in range(n + 1):
            rhs = gaussian(-k - 1, -n - 1) * q ** (comb(n + 1, 2) - comb(k + 1, 2))
            assert gaussian(n, k) == sgn(n - k) * rhs


def test_reflection_printed_sign_fails_exactly_for_even_k():
    for n in range(5):
        for k in range(n + 1):
            rhs = gaussian(-k - 1, -n - 1) * q ** (comb(n + 1, 2) - comb(k + 1, 2))
            assert (gaussian(n, k) == sgn(n + 1) * rhs) == (k % 2 == 1)


# ---- Stirling numbers ---------------------------------------------------------


def test_stirling_examples():
    assert stirling1(4, 2) == 11
    assert stirling1(-2, -4) == 7
    assert stirling2(-2, -4) == 11


def _set_partitions(n):
    if n == 0:
        yield []
        return
    for part in _set_partitions(n - 1):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [n]] + part[i + 1:]
        yield part + [[n]]


@pytest.mark.parametrize("n", range(0, 8))
def test_stirling_region1_oracles(n):
    counts = [0] * (n + 1)
    for part in _set_partitions(n):
        counts[len(part)] += 1
    x = sp.Symbol("x")
    ff = sp.Poly(sp.prod([x - i for i in range(n)]), x)
    for k in range(n + 1):
        assert stirling2(n, k) == counts[k]
        assert stirling1(n, k) == ff.coeff_monomial(x**k)


_u = sp.Symbol("u")


def _geometric_product(roots, N):
    """prod 1/(1 - r u) truncated after u^N, via sympy polynomials."""
    out = sp.Poly(1, _u)
    for r in roots:
        geo = sp.Poly(sum((r * _u) ** j for j in range(N + 1)), _u)
        out = sp.Poly(sum(c * _u**e for (e,), c in (out * geo).terms() if e <= N) or 0, _u)
    return out


@pytest.mark.parametrize("m", range(1, 7))
def test_stirling1_region3_laurent_oracle(m):
    # (x)_{-m} = 1/((x+1)...(x+m)) = u^m prod 1/(1+iu) with u = 1/x
    N = 7
    ser = _geometric_product([-i for i in range(1, m + 1)], N)
    for k in range(-m - N, -m + 1):
        assert stirling1(-m, k) == ser.coeff_monomial(_u ** (-k - m))


@pytest.mark.parametrize("m", range(1, 7))
def test_stirling2_region3_oracle(m):
    # x^{-m} = sum_{k <= -m} S(-m,k) (x)_k, compared as series in u = 1/x
    N = 6
    total = sp.Poly(0, _u)
    for k in range(-m - N, -m + 1):
        shift = -k - m
        qk = _geometric_product([-i for i in range(1, -k + 1)], N - shift)
        total = total + sp.Poly(_u**shift, _u) * qk * int(stirling2(-m, k))
    low = {e: c for (e,), c in total.terms() if e <= N}
    assert low == {0: 1}

def test_stirling_recursions():
    s_bad, S_bad = [], []
    for n, k in itertools.product(GRID, repeat=2):
        cells = [(n, k), (n - 1, k - 1), (n - 1, k)]
        if any(region(*c) is Region.R2 for c in cells):
            continue
        if stirling1(n, k) != stirling1(n - 1, k - 1) - (n - 1) * stirling1(n - 1, k):
            s_bad.append((n, k))
        if stirling2(n, k) != stirling2(n - 1, k - 1) + k * stirling2(n - 1, k):
            S_bad.append((n, k))
    assert s_bad == [] and S_bad == []


def test_stirling1_recursion_with_coefficient_n_fails():
    # the display with coefficient n (not n-1) is off by one in the index
    assert stirling1(3, 1) != stirling1(2, 0) - 3 * stirling1(2, 1)
    assert stirling1(3, 1) == stirling1(2, 0) - 2 * stirling1(2, 1)


def test_stirling_recursion_with_region2_at_origin():
    # s(0,0) = 1 but s(-1,-1) + s(-1,0) = 2: the same exception as Pascal
    assert stirling1(-1, -1) + stirling1(-1, 0) == 2


def test_region2_examples():
    assert stirling1_region2(-2, 1) == Fraction(-3, 4)
    assert [stirling1_region2(-1, k) for k in range(6)] == [sgn(k) for k in range(6)]
    assert stirling1_region2(-5, 0) == Fraction(1, 120)
    assert stirling1(-5, 1) == Fraction(-137, 7200)
    assert stirling1(-2, 3) == Fraction(-15, 16)
    with pytest.raises(UnsupportedRegionError):
        stirling1_region2(2, 1)
    with pytest.raises(UnsupportedRegionError):
        stirling2(-2, 1)


def test_region2_bridge_recursion():
    # s(n+1,k) = s(n,k-1) - n s(n,k) for all n and positive k, across n = 0
    for n in range(-7, 6):
        for k in range(1, 8):
            if (n + 1, k) == (0, 0):
                continue
            assert stirling1(n + 1, k) == stirling1(n, k - 1) - n * stirling1(n, k)


def test_region2_power_series_oracle():
    # (x)_{-m} = 1/((x+1)...(x+m)) = (1/m!) prod 1/(1 + x/i) as a power series at 0
    N = 7
    for m in range(1, 6):
        ser = _geometric_product([sp.Rational(-1, i) for i in range(1, m + 1)], N)
        for k in range(N + 1):
            assert stirling1(-m, k) == ser.coeff_monomial(_u**k) / sp.factorial(m)


# ---- p,q and q families -----------------------------------------------------


def test_pq_examples():
    assert stirling1_pq(3, 1) == p * q * (q + p)
    assert stirling2_q(3, 2) == 2 * LaurentPoly.monomial({"q": half}) + LaurentPoly.monomial({"q": Fraction(3, 2)})
    assert stirling1_pq(2, 1) == -sqrt_pq
    assert stirling1_pq(4, 3) == -sqrt_pq * (1 + p + q + p**2 + p * q + q**2)
    assert stirling2_q(-1, -3) == q**-2 + q**-1


def test_pq_specialisations():
    for n, k in itertools.product(range(-4, 5), repeat=2):
        if region(n, k) not in (Region.R1, Region.R3):
            continue
        assert stirling1_pq(n, k).specialize({"p": 1}) == stirling1_q(n, k)
        assert stirling2_pq(n, k).specialize({"p": 1}) == stirling2_q(n, k)
        assert stirling1_pq(n, k).specialize({"p": 1, "q": 1}) == stirling1(n, k)
        assert stirling2_pq(n, k).specialize({"p": 1, "q": 1}) == stirling2(n, k)


def test_pq_symmetric_in_p_and_q():
    swap = {"p": "q", "q": "p"}
    for n, k in itertools.product(range(-4, 5), repeat=2):
        if region(n, k) not in (Region.R1, Region.R3):
            continue
        for f in (stirling1_pq(n, k), stirling2_pq(n, k)):
            g = LaurentPoly({tuple(sorted((swap[v], e) for v, e in m)): c for m, c in f.terms.items()})
            assert g == f


def test_pq_recursions():
    from hybridset.algebra import pq_number

    for n, k in itertools.product(range(-5, 6), repeat=2):
        cells = [(n, k), (n - 1, k - 1), (n - 1, k)]
        if (n, k) == (0, 0) or any(region(*c) is Region.R2 for c in cells):
            continue
        assert stirling1_pq(n, k) == stirling1_pq(n - 1, k - 1) - pq_number(n - 1) * stirling1_pq(n - 1, k)
        assert stirling2_pq(n, k) == stirling2_pq(n - 1, k - 1) + pq_number(k) * stirling2_pq(n - 1, k)


def test_inversion_corollary():
    for n, k in itertools.product(range(-4, 5), repeat=2):
        if region(n, k) not in (Region.R1, Region.R3):
            continue
        e = sgn(n + k)
        assert stirling2_pq(n, k) == e * stirling1_pq(-k, -n).reciprocal_variables(["p", "q"])
        assert stirling2_q(n, k) == e * stirling1_q(-k, -n).reciprocal_variables(["q"])
        assert stirling2(n, k) == e * stirling1(-k, -n)


# ---- tables -----------------------------------------------------------------


def test_table_layout_and_formats():
    t = table("binomial", range(-1, 2), range(0, 2))
    assert t.n_values == (1, 0, -1) and t.k_values == (0, 1)
    assert t.to_csv() == "n\\k,0,1\n1,1,1\n0,1,0\n-1,1,-1\n"
    assert t.to_json() == '{"family": "binomial", "n_range": [-1, 1], "k_range": [0, 1], "cells": [["1", "1"], ["1", "0"], ["1", "-1"]]}\n'
    assert t.to_text().splitlines()[0].split() == ["n\\k", "0", "1"]


def test_empty_table():
    t = table("binomial", [], [])
    assert t.cells == ()
    assert t.to_json() == '{"family": "binomial", "n_range": [], "k_range": [], "cells": []}\n'


def test_table_is_deterministic():
    a = table("stirling2_pq", range(-4, 0), range(-4, 0)).to_csv()
    b = table("stirling2_pq", range(-4, 0), range(-4, 0)).to_csv()
    assert a == b


def test_table_propagates_unsupported():
    with pytest.raises(UnsupportedRegionError):
        table("gaussian", range(-2, 0), range(0, 2))
