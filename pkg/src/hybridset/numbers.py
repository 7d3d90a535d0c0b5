"""Binomial, Gaussian and Stirling numbers extended to all sign regions.

The classical families are connection constants, so each is ``comp_{n-k}``
over an ellipsis of persistant roots:

* Gaussian ``[n,k]_q``        -- roots ``-q^{i-1}``,
* Stirling ``s(n,k)``         -- roots ``i-1`` (lower factorials),
* Stirling ``S(n,k)``         -- the negated ellipsis ``-{0..k}``,
* p,q-Stirling               -- the same with p,q-numbers ``[i-1]``.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .algebra import LaurentPoly, normalize_scalar, pq_number
from .errors import UnsupportedRegionError
from .hybrid_core import ellipsis
from .symfunc import comp

__all__ = [
    "Region",
    "region",
    "binomial",
    "binomial_series",
    "gaussian",
    "stirling1",
    "stirling2",
    "stirling1_region2",
    "stirling1_pq",
    "stirling2_pq",
    "stirling1_q",
    "stirling2_q",
    "FAMILIES",
    "Table",
    "table",
    "render_value",
]


class Region(enum.Enum):
    R1 = 1  # n >= k >= 0
    R2 = 2  # k >= 0 > n
    R3 = 3  # 0 > n >= k
    R4 = 4  # k > n >= 0
    R5 = 5  # 0 > k > n
    R6 = 6  # n >= 0 > k


def region(n: int, k: int) -> Region:
    if n >= 0:
        if k < 0:
            return Region.R6
        return Region.R1 if k <= n else Region.R4
    if k >= 0:
        return Region.R2
    return Region.R3 if k <= n else Region.R5


_ZERO_REGIONS = (Region.R4, Region.R5, Region.R6)


def binomial(n: int, k: int) -> int:
    r = region(n, k)
    if r is Region.R1:
        return math.comb(n, k)
    if r is Region.R2:
        return (-1) ** k * math.comb(-n + k - 1, k)
    if r is Region.R3:
        return (-1) ** ((n + k) % 2) * math.comb(-k - 1, n - k)
    return 0


def binomial_series(n: int, J: int) -> list:
    """Coefficients of ``x^0..x^J`` in ``(1 + x)^n`` as a formal power series."""
    if J < 0:
        raise ValueError("J must be nonnegative")
    return [binomial(n, n - j) for j in range(J + 1)]


def _gaussian_root(i: int):
    return -LaurentPoly.monomial({"q": i - 1})


def gaussian(n: int, k: int) -> LaurentPoly:
    """``comp_{n-k}(-1, -q, .., -q^{n-1})`` in regions 1 and 3; zero in 4-6."""
    r = region(n, k)
    if r is Region.R2:
        raise UnsupportedRegionError(f"Gaussian coefficient undefined in region 2 at ({n},{k})")
    if r in _ZERO_REGIONS:
        return LaurentPoly()
    return _as_poly(_cached_comp(_gaussian_root, 1, n, n - k))


def _as_poly(v) -> LaurentPoly:
    return v if isinstance(v, LaurentPoly) else LaurentPoly.constant(v)


@lru_cache(maxsize=None)
def _cached_comp(seq: Callable, i: int, j: int, deg: int, negate: bool = False):
    V = ellipsis(seq, i, j)
    return comp(-V if negate else V, deg)


def _lower(i: int):
    return i - 1


def _pq_root(i: int):
    return pq_number(i - 1)


def stirling1(n: int, k: int) -> Fraction:
    """``s(n,k)``: ``comp_{n-k}({0..n-1})`` in regions 1/3, the finite sum in region 2."""
    r = region(n, k)
    if r is Region.R2:
        return stirling1_region2(n, k)
    if r in _ZERO_REGIONS:
        return Fraction(0)
    return Fraction(_cached_comp(_lower, 1, n, n - k))


def stirling2(n: int, k: int) -> Fraction:
    """``S(n,k) = comp_{n-k}(-{0..k})`` in regions 1/3."""
    r = region(n, k)
    if r is Region.R2:
        raise UnsupportedRegionError(f"S(n,k) is not defined in region 2 at ({n},{k})")
    if r in _ZERO_REGIONS:
        return Fraction(0)
    return Fraction(_cached_comp(_lower, 1, k + 1, n - k, True))


def stirling1_region2(n: int, k: int) -> Fraction:
    """``s(-m, k) = (-1)^{k+1}/m! * sum_{j=1}^{m} C(m,j) (-1)^j j^{-k}``  (n = -m < 0, k >= 0)."""
    if not (n < 0 <= k):
        raise UnsupportedRegionError(f"({n},{k}) is not in region 2")
    m = -n
    total = sum(Fraction(math.comb(m, j) * (-1) ** j, j ** k) for j in range(1, m + 1))
    return Fraction((-1) ** (k + 1), math.factorial(m)) * total


def stirling1_pq(n: int, k: int) -> LaurentPoly:
    """``s_pq(n,k) = comp_{n-k}([0]..[n-1])``."""
    r = region(n, k)
    if r is Region.R2:
        raise UnsupportedRegionError(f"s_pq(n,k) is not tabulated in region 2 at ({n},{k})")
    if r in _ZERO_REGIONS:
        return LaurentPoly()
    return _as_poly(_cached_comp(_pq_root, 1, n, n - k))


def stirling2_pq(n: int, k: int) -> LaurentPoly:
    """``S_pq(n,k) = comp_{n-k}(-{[0]..[k]})``."""
    r = region(n, k)
    if r is Region.R2:
        raise UnsupportedRegionError(f"S_pq(n,k) is not defined in region 2 at ({n},{k})")
    if r in _ZERO_REGIONS:
        return LaurentPoly()
    return _as_poly(_cached_comp(_pq_root, 1, k + 1, n - k, True))


def stirling1_q(n: int, k: int) -> LaurentPoly:
    return stirling1_pq(n, k).specialize({"p": 1})


def stirling2_q(n: int, k: int) -> LaurentPoly:
    return stirling2_pq(n, k).specialize({"p": 1})


FAMILIES = {
    "binomial": binomial,
    "gaussian": gaussian,
    "stirling1": stirling1,
    "stirling2": stirling2,
    "stirling1_pq": stirling1_pq,
    "stirling2_pq": stirling2_pq,
    "stirling1_q": stirling1_q,
    "stirling2_q": stirling2_q,
}


def render_value(v) -> str:
    v = normalize_scalar(v)
    if isinstance(v, LaurentPoly):
        return v.render()
    return str(Fraction(v))


@dataclass(frozen=True)
class Table:
    """Dense matrix of values: rows by descending n, columns by ascending k."""

    family: str
    n_values: tuple
    k_values: tuple
    cells: tuple

    def rendered(self) -> list:
        return [[render_value(v) for v in row] for row in self.cells]

    def to_text(self) -> str:
        header = ["n\\k"] + [str(k) for k in self.k_values]
        body = [[str(n)] + row for n, row in zip(self.n_values, self.rendered())]
        rows = [header] + body
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n\\k"] + list(self.k_values))
        for n, row in zip(self.n_values, self.rendered()):
            w.writerow([n] + row)
        return buf.getvalue()

    def to_json(self) -> str:
        def rng(vals):
            return [min(vals), max(vals)] if vals else []

        obj = {
            "family": self.family,
            "n_range": rng(self.n_values),
            "k_range": rng(self.k_values),
            "cells": self.rendered(),
        }
        return json.dumps(obj, ensure_ascii=False) + "\n"


def table(family: str, n_range: Sequence[int], k_range: Sequence[int]) -> Table:
    """Evaluate ``family`` over a rectangle.  UnsupportedRegionError propagates."""
    fn = FAMILIES[family]
    ns = tuple(sorted(n_range, reverse=True))
    ks = tuple(sorted(k_range))
    cells = tuple(tuple(fn(n, k) for k in ks) for n in ns)
    return Table(family, ns, ks, cells)
