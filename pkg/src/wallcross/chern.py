"""Chern character <-> Chern / Segre class conversions.

``ChernData`` stores the rank together with a_i = i! ch_i (even classes in
the ring).  Chern and Segre classes come out of the classical Hessenberg
determinants in the a_i; the determinant is expanded by cofactors along the
first row, which has at most two nonzero entries, so the recursion stays
cheap for the small n arising here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ModelMismatchError, PreconditionError
from .graded import GradedElement, ModelSpec, frac


@dataclass(frozen=True)
class ChernData:
    """Rank plus the sequence a_i = i! ch_i of a sheaf, as ring elements.

    ``a[k]`` holds a_{k+1}; entries beyond the list are zero.  Each stored
    a_i must be homogeneous of total degree 2i (or zero).
    """

    model: ModelSpec
    rank: Fraction
    a: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "rank", frac(self.rank))
        object.__setattr__(self, "a", tuple(self.a))
        for k, elem in enumerate(self.a):
            if elem.model is not self.model:
                raise ModelMismatchError("ChernData entry over a different model")
            degs = elem.total_degrees()
            if degs and degs != [2 * (k + 1)]:
                raise PreconditionError(
                    f"a_{k + 1} must be homogeneous of degree {2 * (k + 1)}, got degrees {degs}")

    def a_i(self, i) -> GradedElement:
        """a_i = i! ch_i, zero when not stored."""
        if i <= 0 or i > len(self.a):
            return self.model.zero()
        return self.a[i - 1]


def chern_data_from_element(ch: GradedElement, top=None) -> ChernData:
    """Split a total Chern character into (rank, a_1, a_2, ...)."""
    rank = ch.scalar_part()
    if top is None:
        top = (2 * ch.model.q + 4) // 2
    a = []
    for i in range(1, top + 1):
        a.append(ch.component(2 * i) * math.factorial(i))
    while a and a[-1].is_zero():
        a.pop()
    return ChernData(ch.model, rank, tuple(a))


def ch_dual(data: ChernData) -> ChernData:
    """Chern data of the dual sheaf: a_i -> (-1)^i a_i, rank preserved."""
    return ChernData(data.model, data.rank,
                     tuple(elem if (k + 1) % 2 == 0 else -elem
                           for k, elem in enumerate(data.a)))


def ch_direct_sum(x: ChernData, y: ChernData) -> ChernData:
    """Chern data of a direct sum: ranks and a_i add componentwise."""
    if x.model is not y.model:
        raise ModelMismatchError("ChernData over different models")
    n = max(len(x.a), len(y.a))
    a = tuple(x.a_i(i) + y.a_i(i) for i in range(1, n + 1)) if n else ()
    return ChernData(x.model, x.rank + y.rank, a)


def _det(model, rows) -> GradedElement:
    """Determinant of a square matrix of commuting (even) ring elements.

    Cofactor expansion along the first row; structural zeros are skipped,
    and the Hessenberg matrices used below have at most two nonzero entries
    per first row.
    """
    n = len(rows)
    if n == 0:
        return model.one()
    if n == 1:
        return rows[0][0]
    total = model.zero()
    for j, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _det(model, minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _hessenberg(data: ChernData, n, signed) -> GradedElement:
    model = data.model
    zero = model.zero()
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j == i + 1:
                row.append(model.scalar(-(n - i)) if signed else model.scalar(n - i))
            elif j <= i:
                a = data.a_i(i - j + 1)
                if signed and (i - j + 1) % 2 == 1:
                    a = -a
                row.append(a)
            else:
                row.append(zero)
        rows.append(row)
    return _det(model, rows)


def chern_from_ch(data: ChernData, n) -> GradedElement:
    """n-th Chern class via the determinant in the a_i."""
    if n < 0:
        raise PreconditionError("chern_from_ch needs n >= 0")
    model = data.model
    if n == 0:
        return model.one()
    return _hessenberg(data, n, signed=False) / math.factorial(n)


def segre_from_ch(data: ChernData, n) -> GradedElement:
    """n-th Segre class via the signed determinant; inverse of the total Chern class."""
    if n < 0:
        raise PreconditionError("segre_from_ch needs n >= 0")
    model = data.model
    if n == 0:
        return model.one()
    return _hessenberg(data, n, signed=True) / math.factorial(n)


def total_chern(data: ChernData, top=None) -> GradedElement:
    """Sum of chern_from_ch over all degrees representable in the model."""
    model = data.model
    if top is None:
        top = (2 * model.q + 4) // 2
    out = model.zero()
    for n in range(top + 1):
        out = out + chern_from_ch(data, n)
    return out
