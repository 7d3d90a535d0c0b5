"""Exact arithmetic: sparse Laurent polynomials and truncated power series.

Coefficients are :class:`fractions.Fraction`.  Exponents live in ``Z/2`` and
are stored doubled, so ``q**(1/2)`` is the exact monomial ``{"q": 1}``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .errors import NotInvertibleError, NotRepresentableError

__all__ = [
    "LaurentPoly",
    "TruncatedSeries",
    "var",
    "const",
    "monomial",
    "pq_number",
    "q_number",
    "specialize",
    "to_ring",
    "normalize_scalar",
]

# A monomial is a tuple of (name, doubled exponent) pairs, sorted by name,
# with no zero exponents.
Monomial = tuple


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for name, e in b:
        out[name] = out.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in out.items() if e))


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _half(e) -> int:
    """Doubled integer form of an exponent in Z/2."""
    f = Fraction(e)
    d = f * 2
    if d.denominator != 1:
        raise ValueError(f"exponent {e} is not a half-integer")
    return int(d)


class LaurentPoly:
    """Immutable sparse multivariate Laurent polynomial over Q.

    Compares and hashes equal to a Fraction when it is constant, so constant
    polynomials and plain numbers are interchangeable as dictionary keys.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = _as_fraction(c)
            if c:
                clean[tuple(mono)] = c
        self._terms = clean
        self._hash = None

    # construction ----------------------------------------------------

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({(): c})

    @classmethod
    def var(cls, name: str) -> "LaurentPoly":
        return cls({((name, 2),): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[str, object], coeff=1) -> "LaurentPoly":
        mono = tuple(sorted((n, _half(e)) for n, e in exponents.items() if _half(e)))
        return cls({mono: coeff})

    @classmethod
    def _coerce(cls, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Rational)):
            return cls.constant(other)
        return None

    # inspection ------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Copy of the ``monomial -> coefficient`` table (doubled exponents)."""
        return dict(self._terms)

    @property
    def variables(self) -> tuple:
        return tuple(sorted({n for mono in self._terms for n, _ in mono}))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    def coefficient(self, exponents: Mapping[str, object] | None = None) -> Fraction:
        """Coefficient of the monomial with the given (undoubled) exponents."""
        mono = tuple(sorted((n, _half(e)) for n, e in (exponents or {}).items() if _half(e)))
        return self._terms.get(mono, Fraction(0))

    def exponents(self, name: str) -> list:
        """Sorted distinct exponents (as Fractions) of ``name`` across terms."""
        seen = {dict(mono).get(name, 0) for mono in self._terms}
        return [Fraction(e, 2) for e in sorted(seen)]

    def __len__(self):
        return len(self._terms)

    # arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scalar_mul(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def scalar_mul(self, c) -> "LaurentPoly":
        c = _as_fraction(c)
        return LaurentPoly({m: c * v for m, v in self._terms.items()})

    def inverse(self) -> "LaurentPoly":
        """Multiplicative inverse; only monomials are units."""
        if not self.is_monomial():
            raise NotInvertibleError(f"{self} is not a unit in the Laurent ring")
        (mono, c), = self._terms.items()
        return LaurentPoly({tuple((n, -e) for n, e in mono): 1 / c})

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.scalar_mul(Fraction(1) / _as_fraction(other))
        if isinstance(other, LaurentPoly):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        if isinstance(e, int):
            if e < 0:
                return self.inverse() ** (-e)
            result, base = LaurentPoly.constant(1), self
            while e:
                if e & 1:
                    result = result * base
                base = base * base
                e >>= 1
            return result
        # fractional powers are only taken of monomials with unit coefficient
        e = Fraction(e)
        if not self.is_monomial():
            raise NotRepresentableError(f"fractional power of non-monomial {self}")
        (mono, c), = self._terms.items()
        if c != 1:
            raise NotRepresentableError(f"fractional power of coefficient {c}")
        new = []
        for n, d in mono:
            x = d * e
            if x.denominator != 1:
                raise NotRepresentableError(f"exponent {x / 2} of {n} is not a half-integer")
            new.append((n, int(x)))
        return LaurentPoly({tuple(p for p in new if p[1]): 1})

    # substitution ----------------------------------------------------

    def specialize(self, bindings: Mapping[str, object]) -> "LaurentPoly":
        """Substitute exact rationals for some variables."""
        out: dict = {}
        for mono, c in self._terms.items():
            keep = []
            for n, d in mono:
                if n in bindings:
                    c = c * _rational_half_power(_as_fraction(bindings[n]), d)
                else:
                    keep.append((n, d))
            m = tuple(keep)
            out[m] = out.get(m, 0) + c
        return LaurentPoly(out)

    def evaluate(self, bindings: Mapping[str, object] | None = None) -> Fraction:
        """Fully specialize to a rational number."""
        return self.specialize(bindings or {}).constant_value()

    def reciprocal_variables(self, names: Iterable[str]) -> "LaurentPoly":
        """Substitute ``v -> 1/v`` for each name."""
        names = set(names)
        return LaurentPoly({
            tuple((n, -d if n in names else d) for n, d in mono): c
            for mono, c in self._terms.items()
        })

    # comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self._terms.get((), 0) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get((), Fraction(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # rendering -------------------------------------------------------

    def sorted_terms(self) -> list:
        """Terms in canonical order: exponent vectors descending lexicographically."""
        names = self.variables

        def vec(mono):
            d = dict(mono)
            return tuple(d.get(n, 0) for n in names)

        return sorted(self._terms.items(), key=lambda t: vec(t[0]), reverse=True)

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self.sorted_terms():
            body = "*".join(_render_power(n, d) for n, d in mono)
            if not body:
                term = str(c)
            elif c == 1:
                term = body
            elif c == -1:
                term = "-" + body
            else:
                term = f"{c}*{body}"
            pieces.append(term)
        out = pieces[0]
        for term in pieces[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    __str__ = render

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"


def _render_power(name: str, doubled: int) -> str:
    if doubled == 2:
        return name
    if doubled % 2 == 0:
        return f"{name}^{doubled // 2}"
    return f"{name}^({doubled}/2)"


def _rational_half_power(x: Fraction, doubled: int) -> Fraction:
    """``x ** (doubled / 2)`` exactly, or NotRepresentableError."""
    if doubled % 2:
        if x < 0:
            raise NotRepresentableError(f"square root of negative {x}")
        rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
        if rn * rn != x.numerator or rd * rd != x.denominator:
            raise NotRepresentableError(f"{x} has no rational square root")
        x = Fraction(rn, rd)
        e = doubled
    else:
        e = doubled // 2
    if e < 0 and x == 0:
        raise NotInvertibleError("negative power of zero")
    return x ** e


def var(name: str) -> LaurentPoly:
    return LaurentPoly.var(name)


def const(c) -> LaurentPoly:
    return LaurentPoly.constant(c)


def monomial(coeff=1, **exponents) -> LaurentPoly:
    return LaurentPoly.monomial(exponents, coeff)


def specialize(f, bindings: Mapping[str, object]):
    if isinstance(f, LaurentPoly):
        return normalize_scalar(f.specialize(bindings))
    return f


def normalize_scalar(x):
    """Collapse constant polynomials to Fractions; leave others untouched."""
    if isinstance(x, LaurentPoly) and x.is_constant():
        return x.constant_value()
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


def to_ring(x):
    """Lift a symbol name or number to a ring value."""
    if isinstance(x, str):
        return LaurentPoly.var(x)
    if isinstance(x, (LaurentPoly, Fraction)):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not a ring value: {x!r}")


def invert_scalar(x):
    """Inverse of a ring unit (nonzero rational or monomial)."""
    x = normalize_scalar(x)
    if isinstance(x, LaurentPoly):
        return x.inverse()
    if x == 0:
        raise NotInvertibleError("zero is not invertible")
    return Fraction(1) / x


def pq_number(i: int) -> LaurentPoly:
    """The p,q-number ``sqrt(pq) (p^i - q^i) / (p - q)``."""
    if i == 0:
        return LaurentPoly()
    if i < 0:
        return -pq_number(-i) * LaurentPoly.monomial({"p": i, "q": i})
    return LaurentPoly({
        tuple(sorted(((("p", 2 * j + 1)), ("q", 2 * (i - 1 - j) + 1)))): 1
        for j in range(i)
    })


def q_number(i: int) -> LaurentPoly:
    """The q-number ``sqrt(q) (q^i - 1) / (q - 1)``: the p,q-number at p = 1."""
    return pq_number(i).specialize({"p": 1})


class TruncatedSeries:
    """Power series ``sum c_k t^k`` known up to and including ``t^order``.

    Coefficients are ring values (Fractions or LaurentPolys).
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [normalize_scalar(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    def _check(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        nz = [j for j in range(n + 1) if b[j] != 0]
        out = []
        for k in range(n + 1):
            acc = Fraction(0)
            for j in nz:
                if j > k:
                    break
                if a[k - j] != 0:
                    acc = acc + a[k - j] * b[j]
            out.append(acc)
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        a = self.coeffs
        try:
            inv0 = invert_scalar(a[0])
        except NotInvertibleError as exc:
            raise NotInvertibleError(f"constant term {a[0]} is not invertible") from exc
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if a[j] != 0:
                    acc = acc + a[j] * out[k - j]
            out.append(normalize_scalar(-acc * inv0))
        return TruncatedSeries(out, self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    return a.inverse()
