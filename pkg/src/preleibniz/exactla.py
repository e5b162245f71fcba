"""Exact rational scalars and dense rational matrices.

Scalars are :class:`fractions.Fraction` values.  Matrices are small dense
arrays; elimination always picks the first nonzero entry of a column as the
pivot so that kernel bases and particular solutions are reproducible.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")

# int64 products are only used while every partial sum stays below this bound.
_INT64_SAFE = 2**62


class DimensionError(ValueError):
    """Shapes of the operands do not fit together."""


def as_rational(value) -> Fraction:
    """Coerce an int, numpy integer, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, np.bool_)):
        raise TypeError(f"not a rational: {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not a rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value) -> str:
    """Canonical text form: ``"p/q"`` in lowest terms with q > 0, or ``"p"``."""
    q = as_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class RatMatrix:
    """Dense matrix of rationals, stored as a read-only numpy object array."""

    __slots__ = ("_a",)

    def __init__(self, rows: int, cols: int, entries: Iterable):
        flat = [as_rational(v) for v in entries]
        if len(flat) != rows * cols:
            raise DimensionError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(flat)}"
            )
        a = np.empty((rows, cols), dtype=object)
        a.reshape(-1)[:] = flat if flat else []
        a.flags.writeable = False
        self._a = a

    @classmethod
    def from_array(cls, arr) -> "RatMatrix":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise DimensionError(f"expected a 2-d array, got shape {arr.shape}")
        return cls(arr.shape[0], arr.shape[1], arr.reshape(-1).tolist())

    @classmethod
    def from_scaled_int(cls, num: np.ndarray, den: int = 1) -> "RatMatrix":
        """Build ``num / den`` cheaply when ``num`` is a large sparse integer array."""
        rows, cols = num.shape
        a = np.full((rows, cols), Fraction(0), dtype=object)
        for r, c in zip(*np.nonzero(num)):
            a[r, c] = Fraction(int(num[r, c]), den)
        out = cls.__new__(cls)
        a.flags.writeable = False
        out._a = a
        return out

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [1 if r == c else 0 for r in range(n) for c in range(n)])

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def entries(self) -> list[Fraction]:
        return self._a.reshape(-1).tolist()

    def to_array(self) -> np.ndarray:
        return self._a.copy()

    def row(self, r: int) -> list[Fraction]:
        return self._a[r].tolist()

    def __getitem__(self, key):
        return self._a[key]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._a == other._a))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(v) for v in row) for row in self._a)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"

    def is_zero(self) -> bool:
        return all(v == 0 for v in self._a.reshape(-1))

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} for {self.cols} columns")
        v = np.array([as_rational(x) for x in vec], dtype=object)
        if self.cols == 0:
            return [Fraction(0)] * self.rows
        return [Fraction(x) for x in self._a.dot(v)]

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return mat_mul(self, other)


def _scaled_int(m: RatMatrix) -> tuple[np.ndarray, int] | None:
    """Return (N, L) with m == N / L and N an int64 array, if the values allow it."""
    flat = m.entries
    den = 1
    for v in flat:
        if v:
            den = lcm(den, v.denominator)
    nums = [int(v * den) for v in flat]
    big = max((abs(x) for x in nums), default=0)
    if big >= _INT64_SAFE:
        return None
    return np.array(nums, dtype=np.int64).reshape(m.shape), den


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Exact product.  Uses int64 arithmetic when overflow is provably impossible."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    sa, sb = _scaled_int(a), _scaled_int(b)
    if sa is not None and sb is not None:
        (na, la), (nb, lb) = sa, sb
        bound = int(np.abs(na).max(initial=0)) * int(np.abs(nb).max(initial=0)) * max(a.cols, 1)
        if bound < _INT64_SAFE:
            return RatMatrix.from_scaled_int(na @ nb, la * lb)
    prod = a.to_array().dot(b.to_array()) if a.cols else np.zeros((a.rows, b.cols), dtype=object)
    return RatMatrix.from_array(prod)


def rref(m: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns.

    Rows are scanned top-down; in each column the first remaining row with a
    nonzero entry becomes the pivot row.
    """
    rows = [list(r) for r in m._a.tolist()]
    pivots: list[int] = []
    top = 0
    for c in range(m.cols):
        if top == len(rows):
            break
        p = next((r for r in range(top, len(rows)) if rows[r][c] != 0), None)
        if p is None:
            continue
        rows[top], rows[p] = rows[p], rows[top]
        piv = rows[top][c]
        if piv != 1:
            rows[top] = [v / piv for v in rows[top]]
        prow = rows[top]
        support = [j for j in range(c, m.cols) if prow[j] != 0]
        for r in range(len(rows)):
            if r != top:
                f = rows[r][c]
                if f != 0:
                    row = rows[r]
                    for j in support:
                        row[j] -= f * prow[j]
        pivots.append(c)
        top += 1
    return rows[:top], pivots


def mat_rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def mat_kernel_basis(m: RatMatrix) -> list[list[Fraction]]:
    """Basis of the right null space, one vector per free column (ascending)."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def solve_linear(a: RatMatrix, b: Sequence) -> list[Fraction] | None:
    """Some exact solution of ``a x = b`` (free variables set to 0), or None."""
    if len(b) != a.rows:
        raise DimensionError(f"right-hand side has length {len(b)}, matrix has {a.rows} rows")
    rhs = [as_rational(v) for v in b]
    aug = RatMatrix(a.rows, a.cols + 1,
                    [v for r in range(a.rows) for v in (*a.row(r), rhs[r])])
    red, pivots = rref(aug)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [Fraction(0)] * a.cols
    for row, pc in zip(red, pivots):
        x[pc] = row[a.cols]
    return x
