"""Exact scalar and small dense matrix arithmetic.

Scalars are ``fractions.Fraction`` (always reduced, positive denominator)
and :class:`QuadNum`, the quadratic extension Q(sqrt(d)) with a fixed
radicand per context.  :class:`MatQ` is a small immutable dense matrix
over either scalar type, with exact determinants, minors and inverses.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    DimensionError,
    RadicandMismatch,
    SingularMatrixError,
)

Rat = Fraction
Scalar = Union[int, Fraction, "QuadNum"]


def as_rat(x) -> Fraction:
    """Coerce an int / Fraction / rational QuadNum to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, QuadNum):
        if x.b != 0:
            raise RadicandMismatch("quadratic number with irrational part is not rational")
        return x.a
    raise TypeError(f"not a rational scalar: {x!r}")


def rational_sqrt(r: Fraction) -> Optional[Fraction]:
    """Exact square root of a non-negative rational, or None if irrational."""
    if r < 0:
        return None
    num, den = r.numerator, r.denominator
    sn, sd = math.isqrt(num), math.isqrt(den)
    if sn * sn == num and sd * sd == den:
        return Fraction(sn, sd)
    return None


@dataclass(frozen=True)
class QuadNum:
    """a + b*sqrt(d) with rational a, b and a fixed non-negative radicand d.

    The radicand is not reduced to square-free form; all values combined
    arithmetically must share the same d (a value with b = 0 embeds into
    any context).
    """

    a: Fraction
    b: Fraction
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rat(self.a) if not isinstance(self.a, Fraction) else self.a)
        object.__setattr__(self, "b", as_rat(self.b) if not isinstance(self.b, Fraction) else self.b)
        object.__setattr__(self, "d", as_rat(self.d) if not isinstance(self.d, Fraction) else self.d)
        if self.d < 0:
            raise RadicandMismatch("negative radicand: values would not be real")

    @staticmethod
    def of(value, d) -> "QuadNum":
        """Embed a rational value into the field with radicand d."""
        return QuadNum(as_rat(value), Fraction(0), as_rat(d))

    def _join(self, other: Scalar) -> "QuadNum":
        if isinstance(other, (int, Fraction)):
            return QuadNum(as_rat(other), Fraction(0), self.d)
        if isinstance(other, QuadNum):
            if other.b == 0:
                return QuadNum(other.a, Fraction(0), self.d)
            if self.b == 0 or self.d == other.d:
                return other
            raise RadicandMismatch(f"mixed radicands {self.d} and {other.d}")
        return NotImplemented  # type: ignore[return-value]

    def _ctx(self, other: "QuadNum") -> Fraction:
        return self.d if self.b != 0 or other.b == 0 else other.d

    def __add__(self, other):
        o = self._join(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadNum(self.a + o.a, self.b + o.b, self._ctx(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._join(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadNum(self.a - o.a, self.b - o.b, self._ctx(o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._join(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._ctx(o)
        return QuadNum(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadNum":
        nrm = self.norm()
        if nrm == 0:
            if self.a == 0 and self.b == 0:
                raise ZeroDivisionError("division by zero quadratic number")
            raise ArithmeticError(
                "zero-divisor: radicand is a perfect square and the conjugate vanishes"
            )
        return QuadNum(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, other):
        o = self._join(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._ctx(o)
        return self * QuadNum(o.a, o.b, d).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadNum):
            if self.a != other.a or self.b != other.b:
                return False
            return self.b == 0 or self.d == other.d
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """(a + b sqrt d)(a - b sqrt d) = a^2 - d b^2."""
        return self.a * self.a - self.d * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def approx(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(float(self.d))

    def same_value(self, other) -> bool:
        """Exact value equality across possibly different radicand contexts."""
        if isinstance(other, (int, Fraction)):
            other = QuadNum.of(other, self.d)
        ra = self.a + self.b * rational_sqrt(self.d) if rational_sqrt(self.d) is not None and self.b != 0 else None
        rb = other.a + other.b * rational_sqrt(other.d) if rational_sqrt(other.d) is not None and other.b != 0 else None
        u = QuadNum.of(ra, self.d) if ra is not None else self
        v = QuadNum.of(rb, other.d) if rb is not None else other
        if u.a != v.a:
            return False
        if u.b == 0 and v.b == 0:
            return True
        if (u.b > 0) != (v.b > 0):
            return False
        return u.b * u.b * u.d == v.b * v.b * v.d

    def __repr__(self):
        if self.b == 0:
            return f"QuadNum({self.a})"
        return f"QuadNum({self.a} + {self.b}*sqrt({self.d}))"


def quad_arith(op: str, u: QuadNum, v: QuadNum) -> QuadNum:
    """Named-operation entry point over Q(sqrt d)."""
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    if op == "div":
        return u / v
    raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing 1-based row/column positions."""

    indices: tuple

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if any(i < 1 for i in idx):
            raise DimensionError(f"indices must be 1-based positive: {idx}")
        if any(idx[t] >= idx[t + 1] for t in range(len(idx) - 1)):
            raise DimensionError(f"indices must be strictly increasing: {idx}")
        object.__setattr__(self, "indices", idx)

    @staticmethod
    def of(it: Iterable[int]) -> "IndexSet":
        return it if isinstance(it, IndexSet) else IndexSet(tuple(it))

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __str__(self):
        return "{" + ",".join(map(str, self.indices)) + "}"


class MatQ:
    """Immutable dense matrix over exact scalars (Fraction or QuadNum)."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Sequence[Sequence[Scalar]]):
        rows = tuple(tuple(self._norm(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise DimensionError("matrix must be non-empty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged rows")
        self.rows = len(rows)
        self.cols = len(rows[0])
        self._e = rows

    @staticmethod
    def _norm(x):
        if isinstance(x, int):
            return Fraction(x)
        return x

    @staticmethod
    def identity(n: int) -> "MatQ":
        return MatQ([[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)])

    @staticmethod
    def diag(values: Sequence[Scalar]) -> "MatQ":
        n = len(values)
        return MatQ([[values[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)])

    @staticmethod
    def from_cols(cols: Sequence[Sequence[Scalar]]) -> "MatQ":
        n = len(cols[0])
        return MatQ([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple:
        return self._e[i]

    def col(self, j: int) -> tuple:
        return tuple(self._e[i][j] for i in range(self.rows))

    def entries(self) -> tuple:
        return self._e

    def __eq__(self, other):
        if not isinstance(other, MatQ):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self._e)
        return f"MatQ[{body}]"

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("shape mismatch in addition")
        return MatQ([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._e, other._e)])

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("shape mismatch in subtraction")
        return MatQ([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._e, other._e)])

    def __matmul__(self, other: "MatQ") -> "MatQ":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ocols = [other.col(j) for j in range(other.cols)]
        return MatQ(
            [
                [sum((a * b for a, b in zip(row, oc)), Fraction(0)) for oc in ocols]
                for row in self._e
            ]
        )

    def scale(self, s: Scalar) -> "MatQ":
        return MatQ([[x * s for x in row] for row in self._e])

    def transpose(self) -> "MatQ":
        return MatQ([self.col(j) for j in range(self.cols)])

    def hstack(self, other: "MatQ") -> "MatQ":
        if self.rows != other.rows:
            raise DimensionError("row counts differ in hstack")
        return MatQ([r1 + r2 for r1, r2 in zip(self._e, other._e)])

    def submatrix(self, I, J) -> "MatQ":
        I, J = IndexSet.of(I), IndexSet.of(J)
        if (I.indices and I.indices[-1] > self.rows) or (J.indices and J.indices[-1] > self.cols):
            raise DimensionError(f"index out of range for {self.rows}x{self.cols} matrix")
        return MatQ([[self._e[i - 1][j - 1] for j in J] for i in I])

    def map(self, fn) -> "MatQ":
        return MatQ([[fn(x) for x in row] for row in self._e])

    def to_quad(self, d) -> "MatQ":
        d = as_rat(d)
        return self.map(lambda x: x if isinstance(x, QuadNum) else QuadNum.of(x, d))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def det(self) -> Scalar:
        """Exact determinant by fraction-free (Bareiss) elimination with pivoting."""
        if not self.is_square():
            raise DimensionError(f"determinant of non-square {self.rows}x{self.cols} matrix")
        n = self.rows
        a = [list(row) for row in self._e]
        sign = 1
        prev: Scalar = Fraction(1)
        for k in range(n - 1):
            if not a[k][k]:
                for r in range(k + 1, n):
                    if a[r][k]:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return self._zero_like()
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
                a[i][k] = self._zero_like()
            prev = a[k][k]
        return a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1]

    def _zero_like(self) -> Scalar:
        x = self._e[0][0]
        if isinstance(x, QuadNum):
            return QuadNum.of(0, x.d)
        return Fraction(0)

    def det_cofactor(self) -> Scalar:
        """Laplace cofactor expansion along the first row (independent cross-check)."""
        if not self.is_square():
            raise DimensionError("determinant of non-square matrix")
        return self._cof(self._e)

    @classmethod
    def _cof(cls, rows) -> Scalar:
        n = len(rows)
        if n == 1:
            return rows[0][0]
        total = None
        for j, x in enumerate(rows[0]):
            if not x:
                continue
            sub = [tuple(r[t] for t in range(n) if t != j) for r in rows[1:]]
            term = x * cls._cof(sub)
            if j % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            return Fraction(0) if not isinstance(rows[0][0], QuadNum) else QuadNum.of(0, rows[0][0].d)
        return total

    def minor(self, I, J) -> Scalar:
        I, J = IndexSet.of(I), IndexSet.of(J)
        if len(I) != len(J):
            raise DimensionError(f"minor needs |I| = |J|, got {len(I)} and {len(J)}")
        return self.submatrix(I, J).det()

    def inverse(self) -> "MatQ":
        """Exact inverse by Gauss-Jordan elimination."""
        if not self.is_square():
            raise DimensionError("inverse of non-square matrix")
        n = self.rows
        a = [list(row) + [self._one_like() if i == j else self._zero_like() for j in range(n)]
             for i, row in enumerate(self._e)]
        for k in range(n):
            piv = None
            for r in range(k, n):
                if a[r][k]:
                    piv = r
                    break
            if piv is None:
                raise SingularMatrixError(
                    f"matrix is singular: pivot column {k + 1} has vanishing determinant"
                )
            a[k], a[piv] = a[piv], a[k]
            inv = self._invert_scalar(a[k][k])
            a[k] = [x * inv for x in a[k]]
            for r in range(n):
                if r != k and a[r][k]:
                    f = a[r][k]
                    a[r] = [x - f * y for x, y in zip(a[r], a[k])]
        return MatQ([row[n:] for row in a])

    def _one_like(self) -> Scalar:
        x = self._e[0][0]
        if isinstance(x, QuadNum):
            return QuadNum.of(1, x.d)
        return Fraction(1)

    @staticmethod
    def _invert_scalar(x: Scalar) -> Scalar:
        if isinstance(x, QuadNum):
            return x.inverse()
        return Fraction(1) / x

    def rank(self) -> int:
        a = [list(row) for row in self._e]
        r = 0
        for c in range(self.cols):
            piv = None
            for i in range(r, self.rows):
                if a[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = self._invert_scalar(a[r][c])
            a[r] = [x * inv for x in a[r]]
            for i in range(self.rows):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == self.rows:
                break
        return r

    def nullspace(self) -> list:
        """Basis of the right kernel, as tuples of Fractions."""
        a = [list(row) for row in self._e]
        pivots = []
        r = 0
        for c in range(self.cols):
            piv = None
            for i in range(r, self.rows):
                if a[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = self._invert_scalar(a[r][c])
            a[r] = [x * inv for x in a[r]]
            for i in range(self.rows):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.cols
            v[fc] = Fraction(1)
            for rr, pc in enumerate(pivots):
                v[pc] = -a[rr][fc]
            basis.append(tuple(v))
        return basis


def mat_det(m: MatQ) -> Scalar:
    return m.det()


def mat_minor(m: MatQ, I, J) -> Scalar:
    return m.minor(I, J)


def mat_inverse(m: MatQ) -> MatQ:
    return m.inverse()
