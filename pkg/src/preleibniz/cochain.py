"""Multilinear maps and colored multilinear maps over a fixed basis.

A :class:`PlainCochain` of arity n is ``f(e_{i1}, ..., e_{in}) = sum_k c[i1..in, k] e_k``.
A :class:`ColoredCochain` carries one such tensor per color ``[r]``, r = 1..n,
and is extended linearly to formal sums of colors.

Both store their coefficient tensor as a read-only numpy array (int64 when all
entries are small integers, otherwise Fractions).  Index order is
``(r, i1, ..., in, k)``; C-order flattening gives the canonical coordinates
used for coboundary matrices.
"""

from __future__ import annotations

import string
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _tensor as T
from .combinat import ALL, r_map, s_map, shuffles
from .exactla import DimensionError, as_rational


class _Cochain:
    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = T.exact_array(coeffs)
        self._check_shape(c.shape)
        c.flags.writeable = False
        self._c = c

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def codomain_dim(self) -> int:
        return self._c.shape[-1]

    def _wrap(self, arr):
        return type(self)(arr)

    def _same_space(self, other):
        if type(other) is not type(self) or other._c.shape != self._c.shape:
            raise DimensionError(f"cochain shapes differ: {self._c.shape} vs {getattr(other, '_c', other)}")

    def __add__(self, other):
        self._same_space(other)
        return self._wrap(T.add(self._c, other._c))

    def __sub__(self, other):
        self._same_space(other)
        return self._wrap(T.sub(self._c, other._c))

    def __neg__(self):
        return self._wrap(T.neg(self._c))

    def __mul__(self, scalar):
        return self._wrap(T.scale(self._c, scalar))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return T.equal(self._c, other._c)

    def __hash__(self):
        return hash((type(self).__name__, self._c.shape, tuple(T.frac(v) for v in self._c.reshape(-1))))

    def is_zero(self) -> bool:
        return T.is_zero(self._c)

    def to_vector(self) -> list[Fraction]:
        """Coordinates in the canonical (lexicographic) basis."""
        return [T.frac(v) for v in self._c.reshape(-1)]

    @property
    def size(self) -> int:
        return self._c.size


class PlainCochain(_Cochain):
    """Element of Hom(V^{(x)n}, W) with dim V = ``domain_dim``, dim W = ``codomain_dim``."""

    __slots__ = ()

    @staticmethod
    def _check_shape(shape):
        if len(shape) < 2:
            raise DimensionError("a plain cochain needs arity >= 1")
        if len(set(shape[:-1])) > 1:
            raise DimensionError(f"all input slots must share one dimension, got {shape}")

    @property
    def arity(self) -> int:
        return self._c.ndim - 1

    @property
    def domain_dim(self) -> int:
        return self._c.shape[0]

    def __repr__(self):
        return f"PlainCochain(arity={self.arity}, d={self.domain_dim}, e={self.codomain_dim}, nnz={len(self.entries())})"

    @classmethod
    def zeros(cls, arity: int, domain_dim: int, codomain_dim: int) -> "PlainCochain":
        return cls(T.zeros((domain_dim,) * arity + (codomain_dim,)))

    @classmethod
    def from_entries(cls, arity, domain_dim, codomain_dim, entries) -> "PlainCochain":
        """``entries``: iterable of ``(i1, ..., in, k, value)`` with 1-based indices."""
        arr = np.full((domain_dim,) * arity + (codomain_dim,), Fraction(0), dtype=object)
        _fill(arr, entries)
        return cls(arr)

    @classmethod
    def from_vector(cls, arity, domain_dim, codomain_dim, vec) -> "PlainCochain":
        return cls(T.exact_array(list(vec), (domain_dim,) * arity + (codomain_dim,)))

    @classmethod
    def identity(cls, dim: int) -> "PlainCochain":
        return cls(np.eye(dim, dtype=np.int64))

    @classmethod
    def basis(cls, arity, domain_dim, codomain_dim) -> Iterator["PlainCochain"]:
        yield from _basis(cls, (domain_dim,) * arity + (codomain_dim,))

    def entries(self) -> list[tuple[int, ...]]:
        """Nonzero coefficients as ``(i1, ..., in, k, value)``, 1-based, sorted."""
        return [tuple(i + 1 for i in ix) + (v,) for ix, v in T.nonzero_entries(self._c)]

    def __call__(self, *args: int) -> list[Fraction]:
        if len(args) != self.arity:
            raise DimensionError(f"expected {self.arity} arguments, got {len(args)}")
        idx = tuple(_index(a, self.domain_dim) for a in args)
        return [T.frac(v) for v in self._c[idx]]


class ColoredCochain(_Cochain):
    """Element of Hom(k[C_n] (x) V^{(x)n}, W)."""

    __slots__ = ()

    @staticmethod
    def _check_shape(shape):
        if len(shape) < 3 or shape[0] != len(shape) - 2:
            raise DimensionError(f"colored cochain tensor must have shape (n, d,...,d, e), got {shape}")
        if len(set(shape[1:-1])) > 1:
            raise DimensionError(f"all input slots must share one dimension, got {shape}")

    @property
    def arity(self) -> int:
        return self._c.shape[0]

    @property
    def domain_dim(self) -> int:
        return self._c.shape[1]

    def __repr__(self):
        return f"ColoredCochain(arity={self.arity}, d={self.domain_dim}, e={self.codomain_dim}, nnz={len(self.entries())})"

    @classmethod
    def zeros(cls, arity: int, domain_dim: int, codomain_dim: int) -> "ColoredCochain":
        return cls(T.zeros((arity,) + (domain_dim,) * arity + (codomain_dim,)))

    @classmethod
    def from_entries(cls, arity, domain_dim, codomain_dim, entries) -> "ColoredCochain":
        """``entries``: iterable of ``(r, i1, ..., in, k, value)`` with 1-based indices."""
        arr = np.full((arity,) + (domain_dim,) * arity + (codomain_dim,), Fraction(0), dtype=object)
        _fill(arr, entries)
        return cls(arr)

    @classmethod
    def from_vector(cls, arity, domain_dim, codomain_dim, vec) -> "ColoredCochain":
        return cls(T.exact_array(list(vec), (arity,) + (domain_dim,) * arity + (codomain_dim,)))

    @classmethod
    def from_colors(cls, tensors: Sequence) -> "ColoredCochain":
        """Stack one plain coefficient tensor per color."""
        arrs = [T.exact_array(t) if not isinstance(t, PlainCochain) else t.coeffs for t in tensors]
        if any(a.dtype == object for a in arrs):
            arrs = [T.to_object(a) for a in arrs]
        return cls(np.stack(arrs))

    @classmethod
    def identity(cls, dim: int) -> "ColoredCochain":
        """The arity-1 cochain ``([1]; x) -> x``."""
        return cls(np.eye(dim, dtype=np.int64)[None])

    @classmethod
    def basis(cls, arity, domain_dim, codomain_dim) -> Iterator["ColoredCochain"]:
        yield from _basis(cls, (arity,) + (domain_dim,) * arity + (codomain_dim,))

    def color(self, r: int) -> PlainCochain:
        return PlainCochain(self._c[_index(r, self.arity)])

    def entries(self) -> list[tuple[int, ...]]:
        """Nonzero coefficients as ``(r, i1, ..., in, k, value)``, 1-based, sorted."""
        return [tuple(i + 1 for i in ix) + (v,) for ix, v in T.nonzero_entries(self._c)]

    def __call__(self, color, *args: int) -> list[Fraction]:
        return eval_colored(self, color, args)


def _index(i: int, dim: int) -> int:
    if not isinstance(i, (int, np.integer)) or not 1 <= i <= dim:
        raise DimensionError(f"index {i} outside 1..{dim}")
    return int(i) - 1


def _fill(arr: np.ndarray, entries) -> None:
    seen = set()
    for *idx, value in entries:
        if len(idx) != arr.ndim:
            raise DimensionError(f"entry {tuple(idx)} does not have {arr.ndim} indices")
        pos = tuple(_index(i, n) for i, n in zip(idx, arr.shape))
        if pos in seen:
            raise ValueError(f"duplicate entry for index {tuple(idx)}")
        seen.add(pos)
        arr[pos] = as_rational(value)


def _basis(cls, shape):
    size = int(np.prod(shape))
    for j in range(size):
        arr = np.zeros(size, dtype=np.int64)
        arr[j] = 1
        yield cls(arr.reshape(shape))


def eval_colored(f: ColoredCochain, color, args: Sequence[int]) -> list[Fraction]:
    """Evaluate on basis vectors; ``color`` is 1..n or :data:`ALL` (sum over colors)."""
    if len(args) != f.arity:
        raise DimensionError(f"expected {f.arity} arguments, got {len(args)}")
    idx = tuple(_index(a, f.domain_dim) for a in args)
    if color is ALL:
        vals = f.coeffs[(slice(None),) + idx].sum(axis=0)
    else:
        vals = f.coeffs[(_index(color, f.arity),) + idx]
    return [T.frac(v) for v in vals]


# --------------------------------------------------------------------------
# insertion of one multilinear map into a slot of another

_LETTERS = string.ascii_letters


def _insert_subscripts(m: int, i: int, n: int, perm: Sequence[int], batch: str | None = None) -> str:
    """einsum subscripts for x -> f(x_s(1),..,x_s(i-1), g(x_s(i),..,x_s(i+n-2), x_{i+n-1}), x_{i+n},..).

    ``batch`` ("f" or "g") gives that operand an extra leading axis, carried
    to the front of the output; it is how whole coboundary matrices are built
    in one contraction.
    """
    N = m + n - 1
    arg = _LETTERS[:N]
    out_k, mid = _LETTERS[N], _LETTERS[N + 1]
    f_slots = [arg[perm[k - 1] - 1] for k in range(1, i)] + [mid] + [arg[k + n - 2] for k in range(i + 1, m + 1)]
    g_slots = [arg[perm[i - 2 + t] - 1] for t in range(1, n)] + [arg[i + n - 2]]
    fs, gs, out = f"{''.join(f_slots)}{out_k}", f"{''.join(g_slots)}{mid}", f"{arg}{out_k}"
    if batch == "f":
        fs, out = "Z" + fs, "Z" + out
    elif batch == "g":
        gs, out = "Z" + gs, "Z" + out
    return f"{fs},{gs}->{out}"


def _insert(f_arr: np.ndarray, g_arr: np.ndarray, m: int, i: int, n: int, perm, batch=None) -> np.ndarray:
    return T.contract(_insert_subscripts(m, i, n, perm, batch), f_arr, g_arr)


def routed_insert(f_arr, g_arr, m: int, i: int, n: int, s, batch=None) -> list:
    """Per color [r] of the arity m+n-1 result, the unsigned insertion of the
    g-color S(r) into slot i of the f-color R(r) along the shuffle ``s``.

    ``f_arr`` and ``g_arr`` are colored tensors (color axis first, after the
    batch axis if any).  Colors with identical routing share one contraction.
    """
    N = m + n - 1
    f_axis = 1 if batch == "f" else 0
    g_axis = 1 if batch == "g" else 0
    out = [None] * N
    groups: dict[tuple, list[int]] = {}
    for r in range(1, N + 1):
        groups.setdefault((r_map(m, i, n, s, r), s_map(m, i, n, s, r)), []).append(r)
    for (fr, gs), colors in groups.items():
        f_slice = np.take(f_arr, fr - 1, axis=f_axis)
        g_slice = g_arr.sum(axis=g_axis) if gs is ALL else np.take(g_arr, gs - 1, axis=g_axis)
        term = _insert(f_slice, g_slice, m, i, n, s.perm, batch)
        for r in colors:
            out[r - 1] = term
    return out


def _check_composable(f, g, i):
    if f.domain_dim != g.domain_dim or g.codomain_dim != g.domain_dim:
        raise DimensionError(
            f"cannot insert a map {g.domain_dim}->{g.codomain_dim} into inputs of dimension {f.domain_dim}"
        )
    if not 1 <= i <= f.arity:
        raise DimensionError(f"slot {i} outside 1..{f.arity}")


def circ_i(f: PlainCochain, g: PlainCochain, i: int) -> PlainCochain:
    """Sum over (i-1, n-1)-shuffles s of sign(s) f(x_s(1),..,g(x_s(i),..,x_{i+n-1}),..)."""
    _check_composable(f, g, i)
    m, n = f.arity, g.arity
    acc = T.zeros((f.domain_dim,) * (m + n - 1) + (f.codomain_dim,))
    for s in shuffles(i - 1, n - 1):
        term = _insert(f.coeffs, g.coeffs, m, i, n, s.perm)
        acc = T.add(acc, term) if s.sign > 0 else T.sub(acc, term)
    return PlainCochain(acc)


def diamond_i(f: ColoredCochain, g: ColoredCochain, i: int) -> ColoredCochain:
    """Colored insertion: color [r] of the result routes to color R(r) of f and
    S(r) of g, where S(r) may be the sum of all colors of g."""
    _check_composable(f, g, i)
    m, n = f.arity, g.arity
    N = m + n - 1
    per_color = [T.zeros((f.domain_dim,) * N + (f.codomain_dim,)) for _ in range(N)]
    for s in shuffles(i - 1, n - 1):
        terms = routed_insert(f.coeffs, g.coeffs, m, i, n, s)
        for r, term in enumerate(terms):
            per_color[r] = T.add(per_color[r], term) if s.sign > 0 else T.sub(per_color[r], term)
    return ColoredCochain.from_colors(per_color)


def _graded_bracket(f, g, compose, zero):
    m, n = f.arity, g.arity
    acc = zero
    for i in range(1, m + 1):
        term = compose(f, g, i)
        acc = acc + term if ((i - 1) * (n - 1)) % 2 == 0 else acc - term
    second = zero
    for i in range(1, n + 1):
        term = compose(g, f, i)
        second = second + term if ((i - 1) * (m - 1)) % 2 == 0 else second - term
    return acc - second if ((m - 1) * (n - 1)) % 2 == 0 else acc + second


def _check_bracketable(f, g):
    for h in (f, g):
        if h.codomain_dim != h.domain_dim:
            raise DimensionError("bracket needs cochains with values in the same space")
    if f.domain_dim != g.domain_dim:
        raise DimensionError(f"spaces differ: {f.domain_dim} vs {g.domain_dim}")


def balavoine_bracket(f: PlainCochain, g: PlainCochain) -> PlainCochain:
    _check_bracketable(f, g)
    zero = PlainCochain.zeros(f.arity + g.arity - 1, f.domain_dim, f.domain_dim)
    return _graded_bracket(f, g, circ_i, zero)


def pl_bracket(f: ColoredCochain, g: ColoredCochain) -> ColoredCochain:
    """Degree -1 graded bracket on colored cochains built from :func:`diamond_i`."""
    _check_bracketable(f, g)
    zero = ColoredCochain.zeros(f.arity + g.arity - 1, f.domain_dim, f.domain_dim)
    return _graded_bracket(f, g, diamond_i, zero)


def double_lift(f: ColoredCochain) -> PlainCochain:
    """Plain cochain on V + V: all inputs in the first copy give (sum_r f([r]), 0);
    exactly the r-th input in the second copy gives (0, f([r])); otherwise 0."""
    if f.codomain_dim != f.domain_dim:
        raise DimensionError("double lift needs a cochain with values in its domain")
    n, d = f.arity, f.domain_dim
    src = f.coeffs
    arr = np.zeros((2 * d,) * (n + 1), dtype=src.dtype)
    lo, hi = slice(0, d), slice(d, 2 * d)
    arr[(lo,) * n + (lo,)] = src.sum(axis=0)
    for r in range(n):
        key = tuple(hi if k == r else lo for k in range(n)) + (hi,)
        arr[key] = src[r]
    return PlainCochain(arr)


def totalize_cochain(f: ColoredCochain) -> PlainCochain:
    """x -> sum_r f([r]; x)."""
    return PlainCochain(f.coeffs.sum(axis=0))
