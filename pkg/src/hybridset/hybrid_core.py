"""Hybrid sets: finitely supported functions from a universe to Z.

>>> f = HybridSet.parse("{a,b,c,b|d,e,e}")
>>> f["b"], f["e"], f.cardinality
(2, -2, 1)
"""

from __future__ import annotations

import enum
import itertools
import re
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping

from .algebra import LaurentPoly, invert_scalar, normalize_scalar
from .errors import NotAMemberError, NotInvertibleError, ParseError, UnsupportedInputError

__all__ = [
    "HybridSet",
    "NewSetKind",
    "SubsetDecision",
    "EMPTY",
    "element_key",
    "render_element",
    "parse_element",
    "ellipsis",
    "sum_over",
    "prod_over",
    "sum_limits",
    "prod_limits",
    "polynomial_sum",
    "remove_element",
    "is_subset",
    "is_subset_closed_form",
    "enumerate_subsets",
]


def _normalize_element(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, LaurentPoly) and x.is_constant():
        x = x.constant_value()
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    if isinstance(x, tuple):
        return tuple(_normalize_element(e) for e in x)
    return x


def element_key(x):
    """Total order on heterogeneous elements: numbers, names, tuples, polynomials."""
    if isinstance(x, (int, Rational)):
        return (0, Fraction(x))
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(element_key(e) for e in x))
    if isinstance(x, LaurentPoly):
        return (3, x.render())
    return (4, repr(x))


def render_element(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(render_element(e) for e in x) + ")"
    if isinstance(x, (int, Rational)):
        return str(Fraction(x))
    return str(x)


_ATOM = re.compile(r"\s*(-?\d+(?:/\d+)?|[A-Za-z_][A-Za-z0-9_]*|\()")


def _parse_element_at(text: str, pos: int):
    m = _ATOM.match(text, pos)
    if not m:
        raise ParseError("expected an element", text, pos)
    tok = m.group(1)
    if tok == "(":
        items, pos = [], m.end()
        while True:
            item, pos = _parse_element_at(text, pos)
            items.append(item)
            ws = re.compile(r"\s*([,)])").match(text, pos)
            if not ws:
                raise ParseError("expected ',' or ')'", text, pos)
            pos = ws.end()
            if ws.group(1) == ")":
                return tuple(items), pos
    if tok[0].isdigit() or tok[0] == "-":
        return _normalize_element(Fraction(tok)), m.end()
    return tok, m.end()


def parse_element(text: str):
    """Parse a single element: a name, a rational literal, or a tuple of those."""
    el, pos = _parse_element_at(text, 0)
    if text[pos:].strip():
        raise ParseError("trailing characters", text, pos)
    return el


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _expect(text: str, pos: int, ch: str) -> int:
    pos = _skip_ws(text, pos)
    if not text.startswith(ch, pos):
        raise ParseError(f"expected {ch!r}", text, pos)
    return pos + 1


def _parse_list(text: str, pos: int, stop: str):
    items = []
    pos = _skip_ws(text, pos)
    if text.startswith(stop, pos):
        return items, pos
    while True:
        el, pos = _parse_element_at(text, pos)
        items.append(el)
        pos = _skip_ws(text, pos)
        if text.startswith(",", pos):
            pos += 1
        elif text.startswith(stop, pos):
            return items, pos
        else:
            raise ParseError(f"expected ',' or {stop!r}", text, pos)


class NewSetKind(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    BOTH = "positive-and-negative"
    NEITHER = "neither"


class HybridSet:
    """Immutable hybrid set.  ``f[x]`` is the multiplicity (0 if absent).

    Built from a mapping ``element -> multiplicity`` or an iterable of
    elements (each counted +1).  Zero multiplicities are never stored.
    """

    __slots__ = ("_m", "_hash")

    def __init__(self, entries: Mapping | Iterable | None = None):
        m: dict = {}
        if entries is None:
            pass
        elif isinstance(entries, (Mapping, HybridSet)):
            for x, c in entries.items():
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"multiplicity must be an int, got {c!r}")
                x = _normalize_element(x)
                m[x] = m.get(x, 0) + c
        else:
            for x in entries:
                x = _normalize_element(x)
                m[x] = m.get(x, 0) + 1
        self._m = {x: c for x, c in m.items() if c}
        self._hash = None

    @classmethod
    def from_sides(cls, positive: Iterable = (), negative: Iterable = ()) -> "HybridSet":
        """``{positive... | negative...}`` with repeats accumulating."""
        m: dict = {}
        for x in positive:
            x = _normalize_element(x)
            m[x] = m.get(x, 0) + 1
        for x in negative:
            x = _normalize_element(x)
            m[x] = m.get(x, 0) - 1
        return cls(m)

    @classmethod
    def parse(cls, text: str) -> "HybridSet":
        """Parse the braced text form, e.g. ``{a,b,b|c}`` or ``{|0,-1}``."""
        pos = _expect(text, 0, "{")
        positive, pos = _parse_list(text, pos, "|")
        pos = _expect(text, pos, "|")
        negative, pos = _parse_list(text, pos, "}")
        pos = _expect(text, pos, "}")
        if text[pos:].strip():
            raise ParseError("trailing characters", text, pos)
        return cls.from_sides(positive, negative)

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> "HybridSet":
        return cls({parse_element(k): v for k, v in obj.items()})

    # mapping-like access -----------------------------------------------

    def __getitem__(self, x) -> int:
        return self._m.get(_normalize_element(x), 0)

    multiplicity = __getitem__

    def __contains__(self, x) -> bool:
        return self[x] != 0

    def __iter__(self) -> Iterator:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self._m)

    def items(self):
        return [(x, self._m[x]) for x in self.support()]

    def support(self) -> list:
        return sorted(self._m, key=element_key)

    @property
    def cardinality(self) -> int:
        return sum(self._m.values())

    def positive_part(self) -> "HybridSet":
        return HybridSet({x: c for x, c in self._m.items() if c > 0})

    def negative_part(self) -> "HybridSet":
        """The elements of negative multiplicity, as a hybrid set (still negative)."""
        return HybridSet({x: c for x, c in self._m.items() if c < 0})

    @property
    def kind(self) -> NewSetKind:
        vals = set(self._m.values())
        if not vals:
            return NewSetKind.BOTH
        if vals == {1}:
            return NewSetKind.POSITIVE
        if vals == {-1}:
            return NewSetKind.NEGATIVE
        return NewSetKind.NEITHER

    @property
    def is_positive(self) -> bool:
        return self.kind in (NewSetKind.POSITIVE, NewSetKind.BOTH)

    @property
    def is_negative(self) -> bool:
        return self.kind in (NewSetKind.NEGATIVE, NewSetKind.BOTH)

    @property
    def is_new_set(self) -> bool:
        return self.kind is not NewSetKind.NEITHER

    # algebra -----------------------------------------------------------

    def __add__(self, other: "HybridSet") -> "HybridSet":
        if not isinstance(other, HybridSet):
            return NotImplemented
        m = dict(self._m)
        for x, c in other._m.items():
            m[x] = m.get(x, 0) + c
        return HybridSet(m)

    def __sub__(self, other: "HybridSet") -> "HybridSet":
        if not isinstance(other, HybridSet):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "HybridSet":
        return HybridSet({x: -c for x, c in self._m.items()})

    def __mul__(self, k: int) -> "HybridSet":
        if not isinstance(k, int):
            return NotImplemented
        return HybridSet({x: k * c for x, c in self._m.items()})

    __rmul__ = __mul__

    def map(self, fn: Callable) -> "HybridSet":
        """Image under ``fn``; colliding images accumulate multiplicity."""
        m: dict = {}
        for x, c in self._m.items():
            y = _normalize_element(fn(x))
            m[y] = m.get(y, 0) + c
        return HybridSet(m)

    # comparison --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, HybridSet):
            return NotImplemented
        return self._m == other._m

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._m.items()))
        return self._hash

    def __le__(self, other: "HybridSet") -> bool:
        return bool(is_subset(self, other))

    def sort_key(self):
        return tuple((element_key(x), self._m[x]) for x in self.support())

    # rendering ---------------------------------------------------------

    def render(self) -> str:
        pos, neg = [], []
        for x in self.support():
            c = self._m[x]
            (pos if c > 0 else neg).extend([render_element(x)] * abs(c))
        return "{" + ",".join(pos) + "|" + ",".join(neg) + "}"

    __str__ = render

    def __repr__(self):
        return f"HybridSet({self.render()!r})"

    def to_json(self) -> dict:
        return {render_element(x): self._m[x] for x in self.support()}


EMPTY = HybridSet()


# ellipsis, sums and products -------------------------------------------------


def ellipsis(seq: Callable[[int], object], i: int, j: int) -> HybridSet:
    """``{a_i..a_j}``: positive for i <= j, empty for i = j+1, negative beyond."""
    if i <= j:
        return HybridSet.from_sides(positive=(seq(n) for n in range(i, j + 1)))
    return HybridSet.from_sides(negative=(seq(n) for n in range(j + 1, i)))


def _identity(n):
    return n


def sum_over(f: HybridSet, F: Callable):
    total = Fraction(0)
    for x, c in f.items():
        total = total + c * F(x)
    return normalize_scalar(total)


def _power(v, e: int):
    if e >= 0:
        return v ** e
    try:
        inv = invert_scalar(v)
    except (NotInvertibleError, ZeroDivisionError) as exc:
        raise NotInvertibleError(f"{v} is not invertible but has multiplicity {e}") from exc
    return inv ** (-e)


def prod_over(f: HybridSet, F: Callable):
    total = Fraction(1)
    for x, c in f.items():
        total = total * _power(normalize_scalar(F(x)), c)
    return normalize_scalar(total)


def sum_limits(A: Callable[[int], object], i: int, j: int):
    return sum_over(ellipsis(_identity, i, j), A)


def prod_limits(A: Callable[[int], object], i: int, j: int):
    return prod_over(ellipsis(_identity, i, j), A)


def polynomial_sum(p: LaurentPoly, variable: str | None = None) -> LaurentPoly:
    """The polynomial q with q(n) = sum_{i=1}^{n} p(i) for every integer n."""
    p = p if isinstance(p, LaurentPoly) else LaurentPoly.constant(p)
    names = p.variables
    if len(names) > 1:
        raise UnsupportedInputError(f"expected a univariate polynomial, got {p}")
    x = variable or (names[0] if names else "x")
    exps = p.exponents(x)
    if any(e < 0 or e.denominator != 1 for e in exps):
        raise UnsupportedInputError(f"{p} is not a polynomial in {x}")
    deg = int(max(exps)) if exps else 0

    def at(n):
        return p.evaluate({x: n})

    xs = list(range(deg + 2))
    ys = [sum_limits(at, 1, n) for n in xs]
    X = LaurentPoly.var(x)
    q = LaurentPoly()
    for xi, yi in zip(xs, ys):
        term = LaurentPoly.constant(yi)
        for xj in xs:
            if xj != xi:
                term = term * (X - xj) * Fraction(1, xi - xj)
        q = q + term
    for n in range(-1, -(deg + 4), -1):
        if q.evaluate({x: n}) != sum_limits(at, 1, n):
            raise AssertionError(f"interpolated sum disagrees at n={n}")
    return q


# subsets -----------------------------------------------------------------------


class SubsetDecision(enum.Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "undecided-at-bound"

    def __bool__(self):
        if self is SubsetDecision.UNDECIDED:
            raise ValueError("subset relation undecided at the search bound")
        return self is SubsetDecision.YES


def remove_element(g: HybridSet, x) -> HybridSet:
    if x not in g:
        raise NotAMemberError(f"{render_element(x)} is not a member of {g}")
    return g - HybridSet([x])


def _search_bound(f: HybridSet, g: HybridSet) -> int:
    pos = sum(c for _, c in g.items() if c > 0)
    return abs(g.cardinality - f.cardinality) + 2 * pos


def is_subset(f: HybridSet, g: HybridSet, max_steps: int | None = None) -> SubsetDecision:
    """Decide ``f ⊆ g`` by breadth-first search over removal sequences from g.

    A state is the classical multiset of removed elements (removal order
    does not change the state).  Success: the remainder equals f, or the
    removed multiset equals f.  After d steps exactly d elements have been
    removed, so only depths ``#g - #f`` and ``#f`` can succeed; once both are
    covered the answer NO is final, otherwise UNDECIDED is reported.
    """
    bound = _search_bound(f, g) if max_steps is None else max_steps
    universe = sorted(set(g.support()) | set(f.support()), key=element_key)
    index = {x: i for i, x in enumerate(universe)}
    gv = tuple(g[x] for x in universe)
    target_rest = tuple(f[x] for x in universe)
    target_removed = target_rest

    def succeeds(removed):
        rest = tuple(a - b for a, b in zip(gv, removed))
        return rest == target_rest or removed == target_removed

    start = tuple(0 for _ in universe)
    if succeeds(start):
        return SubsetDecision.YES
    frontier, seen = [start], {start}
    removable_idx = [index[x] for x in g.support()]
    for _depth in range(1, bound + 1):
        nxt = []
        for state in frontier:
            for i in removable_idx:
                if gv[i] - state[i] == 0:
                    continue
                new = state[:i] + (state[i] + 1,) + state[i + 1 :]
                if new in seen:
                    continue
                seen.add(new)
                if succeeds(new):
                    return SubsetDecision.YES
                nxt.append(new)
        frontier = nxt
        if not frontier:
            return SubsetDecision.NO
    needed = [d for d in (g.cardinality - f.cardinality, f.cardinality) if d >= 0]
    if all(d <= bound for d in needed):
        return SubsetDecision.NO
    return SubsetDecision.UNDECIDED


def _valid_removal(removed: HybridSet, g: HybridSet) -> bool:
    for x, c in removed.items():
        if c < 0:
            return False
        gx = g[x]
        if gx == 0 or (gx > 0 and c > gx):
            return False
    return True


def is_subset_closed_form(f: HybridSet, g: HybridSet) -> bool:
    """Direct characterisation: g - f or f is a feasible removal multiset of g."""
    return _valid_removal(g - f, g) or _valid_removal(f, g)


def enumerate_subsets(f: HybridSet, k: int) -> list:
    """All k-element hybrid subsets of a new set f, in canonical order."""
    if not f.is_new_set:
        raise UnsupportedInputError(f"{f} is not a new set")
    elems = f.support()
    out = set()
    if f.is_positive:
        if 0 <= k <= len(elems):
            out.update(HybridSet(c) for c in itertools.combinations(elems, k))
    if f.is_negative:
        m = len(elems)
        if k >= 0:
            out.update(HybridSet(c) for c in itertools.combinations_with_replacement(elems, k))
        r = -m - k
        if r >= 0:
            out.update(f - HybridSet(c) for c in itertools.combinations_with_replacement(elems, r))
    return sorted(out, key=HybridSet.sort_key)
