"""Exact tensor helpers.

Coefficient tensors are numpy arrays of one of two kinds: ``int64`` when every
entry is an integer of moderate size, or ``object`` holding Fractions.  Every
operation here checks magnitudes before trusting int64 arithmetic and falls
back to Python objects otherwise, so results are always exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

import numpy as np

# Bound on |entries| for which int64 einsum results (with at most a few
# hundred summands per output) cannot overflow.
_SAFE = 2**53
_ADD_SAFE = 2**61


def _is_int(a: np.ndarray) -> bool:
    return a.dtype.kind in "iu"


def _absmax(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if _is_int(a):
        return int(np.abs(a).max())
    return max(abs(v) for v in a.reshape(-1))


def to_object(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        return a
    out = np.empty(a.shape, dtype=object)
    out.reshape(-1)[:] = [Fraction(int(v)) for v in a.reshape(-1)]
    return out


def exact_array(data, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Normalise input to an exact array (int64 when possible, else Fractions)."""
    from .exactla import as_rational

    arr = np.asarray(data, dtype=object) if not isinstance(data, np.ndarray) else data
    if shape is not None and arr.shape != tuple(shape):
        arr = arr.reshape(shape)
    if _is_int(arr):
        return arr.astype(np.int64) if _absmax(arr) < _SAFE else to_object(arr)
    if arr.dtype.kind == "f" or arr.dtype.kind == "b":
        raise TypeError("floating point or boolean coefficients are not exact")
    flat = [as_rational(v) for v in arr.reshape(-1)]
    if all(v.denominator == 1 and abs(v.numerator) < _SAFE for v in flat):
        return np.array([v.numerator for v in flat], dtype=np.int64).reshape(arr.shape)
    out = np.empty(arr.shape, dtype=object)
    out.reshape(-1)[:] = flat
    return out


def zeros(shape: tuple[int, ...]) -> np.ndarray:
    return np.zeros(shape, dtype=np.int64)


def contract(subscripts: str, *ops: np.ndarray) -> np.ndarray:
    """``np.einsum`` that never overflows."""
    if all(_is_int(op) for op in ops):
        ins, out = subscripts.split("->")
        dims = {}
        for labels, op in zip(ins.split(","), ops):
            dims.update(zip(labels, op.shape))
        summed = prod(dims[c] for c in set(dims) if c not in out)
        bound = prod(_absmax(op) for op in ops) * max(summed, 1)
        if bound < _SAFE:
            return np.einsum(subscripts, *ops)
    return np.einsum(subscripts, *[to_object(op) for op in ops])


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if _is_int(a) and _is_int(b) and _absmax(a) + _absmax(b) < _ADD_SAFE:
        return a + b
    return to_object(a) + to_object(b)


def sub(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return add(a, neg(b))


def neg(a: np.ndarray) -> np.ndarray:
    return -a


def scale(a: np.ndarray, c) -> np.ndarray:
    from .exactla import as_rational

    c = as_rational(c)
    if c.denominator == 1 and _is_int(a) and _absmax(a) * abs(c.numerator) < _ADD_SAFE:
        return a * c.numerator
    return to_object(a) * c


def is_zero(a: np.ndarray) -> bool:
    if a.size == 0:
        return True
    if _is_int(a):
        return not a.any()
    return all(v == 0 for v in a.reshape(-1))


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool(np.all(a == b))


def frac(v) -> Fraction:
    return Fraction(int(v)) if not isinstance(v, Fraction) else v


def nonzero_entries(a: np.ndarray) -> list[tuple[tuple[int, ...], Fraction]]:
    """Nonzero entries as (0-based index tuple, value), in lexicographic order."""
    if _is_int(a):
        idx = np.argwhere(a != 0)
    else:
        idx = np.argwhere(np.vectorize(lambda v: v != 0, otypes=[bool])(a)) if a.size else []
    return [(tuple(int(i) for i in ix), frac(a[tuple(ix)])) for ix in idx]
