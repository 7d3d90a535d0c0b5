"""Hybrid inequalities, d- and n-partitions, Ferrers diagrams and 0-1 tableaux.

``i << j`` means ``i`` lies in the ellipsis ``{0..j-1}`` and the weak form
``i <<_ j`` means ``i`` lies in ``{1..j}``.  For negative ``j`` these are
negative sets, so the relations reverse on the negative integers.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .algebra import LaurentPoly
from .errors import UnsupportedRegionError
from .hybrid_core import HybridSet, ellipsis
from .numbers import Region, region

__all__ = [
    "HybridRelation",
    "relation_multiplicity",
    "hybrid_less",
    "PartitionKind",
    "GenPartition",
    "enumerate_partitions",
    "ferrers",
    "Tableau01",
    "enumerate_tableaux",
    "inv",
    "nin",
    "tableau_sum",
]


class HybridRelation(enum.Enum):
    STRICT = "strict"
    WEAK = "weak"


def _interval(kind: HybridRelation, j: int) -> HybridSet:
    if kind is HybridRelation.STRICT:
        return ellipsis(lambda i: i - 1, 1, j)
    return ellipsis(lambda i: i, 1, j)


def relation_multiplicity(kind: HybridRelation, i: int, j: int) -> int:
    """Multiplicity of ``i`` in the interval defining the relation (0, 1 or -1)."""
    return _interval(HybridRelation(kind), j)[i]


def hybrid_less(kind: HybridRelation, i: int, j: int) -> bool:
    return relation_multiplicity(kind, i, j) != 0


def _below(kind: HybridRelation, j: int) -> list:
    """Integers related to ``j`` from below, ascending."""
    if kind is HybridRelation.STRICT:
        return list(range(0, j)) if j > 0 else list(range(j, 0))
    return list(range(1, j + 1)) if j > 0 else list(range(j + 1, 1))


class PartitionKind(enum.Enum):
    D = "d"  # strict chain: generalises distinct parts
    N = "n"  # weak chain: generalises ordinary partitions

    @property
    def relation(self) -> HybridRelation:
        return HybridRelation.STRICT if self is PartitionKind.D else HybridRelation.WEAK


@dataclass(frozen=True)
class GenPartition:
    parts: tuple
    width: int
    kind: PartitionKind = PartitionKind.D

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        object.__setattr__(self, "kind", PartitionKind(self.kind))
        rel = self.kind.relation
        prev = self.width
        for x in self.parts:
            if not hybrid_less(rel, x, prev):
                raise ValueError(f"{self.parts} is not a {self.kind.value}-partition of width {self.width}")
            prev = x

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)


def _chains(rel: HybridRelation, top: int, k: int) -> Iterator[tuple]:
    if k == 0:
        yield ()
        return
    for x in _below(rel, top):
        for rest in _chains(rel, x, k - 1):
            yield (x,) + rest


def enumerate_partitions(kind, n: int, k: int, t: Optional[int] = None) -> list:
    """All ``kind``-partitions of width n and length k (sum t if given), lexicographic."""
    if k < 0:
        raise ValueError("length must be nonnegative")
    kind = PartitionKind(kind)
    out = [GenPartition(c, n, kind) for c in _chains(kind.relation, n, k) if t is None or sum(c) == t]
    return sorted(out, key=lambda lam: lam.parts)


def _row_cells(m: int) -> list:
    """Columns of a row of length m: ``1..m`` or, for m < 0, ``m+1..0`` (negative cells)."""
    return list(range(1, m + 1)) if m > 0 else list(range(m + 1, 1))


def ferrers(lam) -> HybridSet:
    """``sum_i {(i,1)..(i,lambda_i)}``."""
    parts = lam.parts if isinstance(lam, GenPartition) else tuple(lam)
    out = HybridSet()
    for i, m in enumerate(parts, start=1):
        out = out + ellipsis(lambda j, i=i: (i, j), 1, m)
    return out


@dataclass(frozen=True)
class Tableau01:
    """A 0-1 filling: ``ones[i]`` is the column holding the 1 of row ``i + 1``."""

    shape: GenPartition
    ones: tuple

    def __post_init__(self):
        object.__setattr__(self, "ones", tuple(self.ones))
        if len(self.ones) != self.shape.length:
            raise ValueError("need exactly one 1 per row")
        for m, c in zip(self.shape.parts, self.ones):
            if c not in _row_cells(m):
                raise ValueError(f"column {c} is not a cell of a row of length {m}")

    def to_json(self) -> str:
        return json.dumps({"parts": list(self.shape.parts), "ones": list(self.ones)})

    def render(self) -> str:
        return f"{list(self.shape.parts)} ones={list(self.ones)}"


def enumerate_tableaux(lam: GenPartition) -> list:
    rows = [_row_cells(m) for m in lam.parts]
    return [Tableau01(lam, ones) for ones in itertools.product(*rows)]


def _row_stats(m: int, c: int) -> tuple:
    """(inv, nin) contribution of one row.

    A positive row counts zeros left of the 1 towards inv.  In a negative
    row every cell has multiplicity -1, so both the half and the zero counts
    are negated, and the reversed order puts the larger columns on the left.
    """
    cells = _row_cells(m)
    left = sum(1 for j in cells if (j < c if m > 0 else j > c))
    right = len(cells) - 1 - left
    sign = 1 if m > 0 else -1
    half = Fraction(1, 2)
    return sign * (half + left), sign * (half + right)


def inv(alpha: Tableau01) -> Fraction:
    return sum((_row_stats(m, c)[0] for m, c in zip(alpha.shape.parts, alpha.ones)), Fraction(0))


def nin(alpha: Tableau01) -> Fraction:
    return sum((_row_stats(m, c)[1] for m, c in zip(alpha.shape.parts, alpha.ones)), Fraction(0))


def tableau_sum(kind: str, n: int, k: int) -> LaurentPoly:
    """``sum q^inv p^nin`` over tableaux of d-partitions of width n (first kind)
    or n-partitions of width k (second kind), of length ``n - k``."""
    if region(n, k) not in (Region.R1, Region.R3):
        raise UnsupportedRegionError(f"tableau sums need region 1 or 3, got ({n},{k})")
    if kind == "first":
        shapes = enumerate_partitions(PartitionKind.D, n, n - k)
    elif kind == "second":
        shapes = enumerate_partitions(PartitionKind.N, k, n - k)
    else:
        raise ValueError(f"kind must be 'first' or 'second', not {kind!r}")
    total = LaurentPoly()
    for lam in shapes:
        for alpha in enumerate_tableaux(lam):
            total = total + LaurentPoly.monomial({"q": inv(alpha), "p": nin(alpha)})
    return total
