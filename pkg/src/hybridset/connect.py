"""Connection constants between sequences with persistant roots.

A monic rational function is stored as its hybrid set of roots (poles with
negative multiplicity).  Given persistant roots ``(b_i)``, the basis
``q_n(x) = prod_{i=1}^{n} (x - b_i)`` exists for every integer n and any
monic rational function of degree n expands as

    f = sum_k comp_k(Roots(f) - {b_1..b_{n-k+1}}) q_{n-k}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import LaurentPoly, TruncatedSeries, normalize_scalar
from .errors import NotInvertibleError, ParseError, UnsupportedInputError
from .hybrid_core import HybridSet, ellipsis, render_element
from .symfunc import comp

__all__ = [
    "MonicRationalFn",
    "PersistantSequence",
    "persistant_q",
    "expand",
    "verify_expansion",
    "invert_connection",
    "connection_matrix",
    "parse_rational_fn",
]


@dataclass(frozen=True)
class MonicRationalFn:
    """``prod_{λ in roots} (x - λ)``."""

    roots: HybridSet

    @classmethod
    def from_roots(cls, zeros: Iterable = (), poles: Iterable = ()) -> "MonicRationalFn":
        return cls(HybridSet.from_sides(zeros, poles))

    @property
    def degree(self) -> int:
        return self.roots.cardinality

    @property
    def is_polynomial(self) -> bool:
        return all(c > 0 for _, c in self.roots.items())

    def __call__(self, x):
        """Exact value at a point; raises NotInvertibleError at a pole."""
        val = Fraction(1)
        for r, c in self.roots.items():
            d = normalize_scalar(x - r)
            if c < 0:
                if d == 0:
                    raise NotInvertibleError(f"{render_element(x)} is a pole")
                d = 1 / d if not isinstance(d, LaurentPoly) else d.inverse()
            val = val * d ** abs(c)
        return normalize_scalar(val)

    def as_polynomial(self, name: str = "x") -> LaurentPoly:
        if not self.is_polynomial:
            raise UnsupportedInputError(f"{self} has poles")
        X = LaurentPoly.var(name)
        out = LaurentPoly.constant(1)
        for r, c in self.roots.items():
            for _ in range(c):
                out = out * (X - r)
        return out

    def __mul__(self, other: "MonicRationalFn") -> "MonicRationalFn":
        return MonicRationalFn(self.roots + other.roots)

    def __truediv__(self, other: "MonicRationalFn") -> "MonicRationalFn":
        return MonicRationalFn(self.roots - other.roots)

    def render(self) -> str:
        num, den = [], []
        for r, c in self.roots.items():
            (num if c > 0 else den).extend([_factor(r)] * abs(c))
        text = "".join(num) or "1"
        return text + "".join("/" + f for f in den)

    __str__ = render


def _factor(r) -> str:
    if isinstance(r, (int, Fraction)) and r < 0:
        return f"(x+{render_element(-r)})"
    return f"(x-{render_element(r)})"


_FACTOR = re.compile(r"\(\s*x\s*([+-])\s*(\d+(?:/\d+)?)\s*\)")


def parse_rational_fn(text: str) -> MonicRationalFn:
    """Parse ``(x-1)(x-2)/(x-3)``, ``1/(x-0)`` or ``1``."""
    zeros, poles = [], []
    pos = _skip(text, 0)
    if text.startswith("1", pos):
        pos = _skip(text, pos + 1)
    elif not text.startswith("(", pos):
        raise ParseError("expected '1' or a factor '(x-c)'", text, pos)
    while pos < len(text):
        pole = text.startswith("/", pos)
        if pole:
            pos = _skip(text, pos + 1)
        m = _FACTOR.match(text, pos)
        if not m:
            raise ParseError("expected a monic factor '(x-c)' with rational c", text, pos)
        c = Fraction(m.group(2))
        (poles if pole else zeros).append(c if m.group(1) == "-" else -c)
        pos = _skip(text, m.end())
    return MonicRationalFn.from_roots(zeros, poles)


def _skip(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


class PersistantSequence:
    """Persistant roots ``(b_i)_{i in Z}`` and the basis ``q_n`` they define."""

    def __init__(self, b: Callable[[int], object], name: str = ""):
        self._b = b
        self.name = name

    def __call__(self, i: int):
        return normalize_scalar(self._b(i))

    def q(self, n: int) -> MonicRationalFn:
        return MonicRationalFn(ellipsis(self, 1, n))

    def __repr__(self):
        return f"PersistantSequence({self.name or self._b!r})"


def _sequence(seq) -> PersistantSequence:
    return seq if isinstance(seq, PersistantSequence) else PersistantSequence(seq)


def persistant_q(seq, n: int) -> MonicRationalFn:
    return _sequence(seq).q(n)


def expand(f: MonicRationalFn, seq, K: int) -> list:
    """``[(n - k, c_k) for k in 0..K]``: f = sum_k c_k q_{n-k}, n = deg f."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    seq = _sequence(seq)
    n = f.degree
    out = []
    for k in range(K + 1):
        V = f.roots - ellipsis(seq, 1, n - k + 1)
        out.append((n - k, comp(V, k)))
    return out


def _partial_sums(seq: PersistantSequence, coeffs: Sequence, x) -> list:
    sums, acc = [], Fraction(0)
    for idx, c in coeffs:
        if c != 0:
            acc = acc + c * seq.q(idx)(x)
        sums.append(normalize_scalar(acc))
    return sums


def _laurent_at_infinity(f: MonicRationalFn, order: int) -> list:
    """Coefficients of x^{d}, x^{d-1}, ..., x^{d-order} of f expanded in 1/x (d = deg f)."""
    # (x - r)^{±1} = x^{±1} (1 - r/x)^{±1}, expanded in u = 1/x
    series = TruncatedSeries.one(order)
    for r, c in f.roots.items():
        fac = TruncatedSeries([1, -r], order)
        if c < 0:
            fac = fac.inverse()
        for _ in range(abs(c)):
            series = series * fac
    return list(series)


def verify_expansion(f: MonicRationalFn, seq, coeffs: Sequence, samples: Sequence) -> bool:
    """Check ``f = sum c_k q_{n-k}`` exactly.

    Finite expansions (polynomial f) must match at every sample.  For
    infinite ones the truncation error must shrink strictly over the last
    three truncations at every sample, and the residual must vanish to the
    truncation order as a Laurent series at infinity.
    """
    seq = _sequence(seq)
    coeffs = list(coeffs)
    n = f.degree
    if [i for i, _ in coeffs] != [n - k for k in range(len(coeffs))]:
        return False
    for x in samples:
        # poles of f or of any basis element raise NotInvertibleError here
        f(x)
        for idx, _ in coeffs:
            seq.q(idx)(x)
    if f.is_polynomial:
        return all(_partial_sums(seq, coeffs, x)[-1] == f(x) for x in samples)
    if len(coeffs) < 3:
        raise UnsupportedInputError("need at least three terms to judge convergence")
    for x in samples:
        fx = f(x)
        res = [abs(fx - s) for s in _partial_sums(seq, coeffs, x)[-3:]]
        if not (res[0] > res[1] > res[2] or res[2] == 0):
            return False
    # formal check: f - sum_k c_k q_{n-k} = O(x^{n-K-1}) at infinity
    K = len(coeffs) - 1
    target = _laurent_at_infinity(f, K)
    total = [Fraction(0)] * (K + 1)
    for idx, c in coeffs:
        if c == 0:
            continue
        shift = n - idx
        for j, v in enumerate(_laurent_at_infinity(seq.q(idx), K - shift)):
            total[shift + j] = total[shift + j] + c * v
    return all(normalize_scalar(a - b) == 0 for a, b in zip(target, total))


def connection_matrix(a, b, N: int) -> list:
    """``M[n][m]`` = coefficient of ``q^b_m`` in ``q^a_n`` for 0 <= m <= n <= N."""
    a, b = _sequence(a), _sequence(b)
    rows = []
    for n in range(N + 1):
        V = ellipsis(a, 1, n)
        rows.append([comp(V - ellipsis(b, 1, m + 1), n - m) if m <= n else Fraction(0)
                     for m in range(N + 1)])
    return rows


def invert_connection(c: Sequence, a, b, K: int | None = None) -> list:
    """Given ``c_n = sum_k comp_k({a_1..a_n} - {b_1..b_{n-k+1}}) d_{n-k}`` recover d.

    ``c`` lists ``c_0..c_K`` (zero at negative indices); the result is
    ``d_n = sum_k comp_k({b_1..b_n} - {a_1..a_{n-k+1}}) c_{n-k}``.
    """
    a, b = _sequence(a), _sequence(b)
    c = [normalize_scalar(x) for x in c]
    K = len(c) - 1 if K is None else K
    c = c + [Fraction(0)] * (K + 1 - len(c))
    d = []
    for n in range(K + 1):
        B = ellipsis(b, 1, n)
        acc = Fraction(0)
        for k in range(n + 1):
            if c[n - k] != 0:
                acc = acc + comp(B - ellipsis(a, 1, n - k + 1), k) * c[n - k]
        d.append(normalize_scalar(acc))
    return d
