"""Coboundary operators for Leibniz and pre-Leibniz cochains, their matrices,
and cohomology dimensions over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from . import _tensor as T
from .algebra import (LeibnizAlgebra, LeibnizRep, PreLeibnizAlgebra, PreLeibnizRep,
                      total_rep, totalize_algebra)
from .cochain import (ColoredCochain, PlainCochain, _insert, pl_bracket, routed_insert,
                      totalize_cochain)
from .combinat import shuffle_moving_last, shuffle_with_first, shuffles
from .exactla import DimensionError, RatMatrix, mat_kernel_basis, mat_rank

# --------------------------------------------------------------------------
# Leibniz cochains


def _delta_lp_arr(B, rhoL, rhoR, f, n, batch=None):
    fb = "g" if batch else None
    ob = "f" if batch else None
    acc = None

    def push(term, sign):
        nonlocal acc
        term = term if sign > 0 else T.neg(term)
        acc = term if acc is None else T.add(acc, term)

    for i in range(1, n + 1):
        push(_insert(rhoL, f, 2, 2, n, shuffle_with_first(n, i).perm, fb), (-1) ** (i + 1))
    push(_insert(rhoR, f, 2, 1, n, shuffles(0, n - 1)[0].perm, fb), (-1) ** (n + 1))
    for j in range(2, n + 2):
        for i in range(1, j):
            push(_insert(f, B, n, j - 1, 2, shuffle_moving_last(j, i).perm, ob), (-1) ** i)
    return acc


def _check_lp(L, R, arity, dom, cod):
    if R.base_dim != L.dim:
        raise DimensionError("representation does not match the algebra")
    if dom != L.dim or cod != R.module_dim:
        raise DimensionError(
            f"cochain maps {dom}-dim inputs to {cod}-dim values; expected {L.dim} -> {R.module_dim}"
        )


def delta_lp(L: LeibnizAlgebra, R: LeibnizRep, f: PlainCochain) -> PlainCochain:
    """Loday-Pirashvili coboundary of an n-cochain with values in ``R``."""
    _check_lp(L, R, f.arity, f.domain_dim, f.codomain_dim)
    return PlainCochain(_delta_lp_arr(L.tensor, R.rhoL, R.rhoR, f.coeffs, f.arity))


# --------------------------------------------------------------------------
# pre-Leibniz cochains


def _delta_pl_arr(pi, piL, piR, f, n, batch=False):
    """Direct formula. ``f`` has shape (n, d.., e), or (b, n, d.., e) when ``batch``."""
    fb = "g" if batch else None
    ob = "f" if batch else None
    N = n + 1
    per = [None] * N

    def push(terms, sign):
        for r, term in enumerate(terms):
            term = term if sign > 0 else T.neg(term)
            per[r] = term if per[r] is None else T.add(per[r], term)

    # x_i acting from the left on f of the other arguments
    for i in range(1, n + 1):
        push(routed_insert(piL, f, 2, 2, n, shuffle_with_first(n, i), fb), (-1) ** (i + 1))
    # f of the first n arguments acted on by x_{n+1} from the right
    push(routed_insert(piR, f, 2, 1, n, shuffles(0, n - 1)[0], fb), (-1) ** (n + 1))
    # x_i moved next to x_j and multiplied into it
    for j in range(2, N + 1):
        for i in range(1, j):
            push(routed_insert(f, pi, n, j - 1, 2, shuffle_moving_last(j, i), ob), (-1) ** i)
    if per[0].dtype == object or any(p.dtype == object for p in per):
        per = [T.to_object(p) for p in per]
    return np.stack(per, axis=1 if batch else 0)


def _check_pl(P, R, dom, cod):
    if R.base_dim != P.dim:
        raise DimensionError("representation does not match the algebra")
    if dom != P.dim or cod != R.module_dim:
        raise DimensionError(
            f"cochain maps {dom}-dim inputs to {cod}-dim values; expected {P.dim} -> {R.module_dim}"
        )


def delta_pl(P: PreLeibnizAlgebra, R: PreLeibnizRep, f: ColoredCochain) -> ColoredCochain:
    """Pre-Leibniz coboundary, evaluated color by color from the action tensors."""
    _check_pl(P, R, f.domain_dim, f.codomain_dim)
    return ColoredCochain(_delta_pl_arr(P.pi.coeffs, R.piL, R.piR, f.coeffs, f.arity))


def delta_pl_bracket(P: PreLeibnizAlgebra, f: ColoredCochain) -> ColoredCochain:
    """Adjoint coboundary as (-1)^(n-1) [[pi, f]]; independent of :func:`delta_pl`."""
    if f.domain_dim != P.dim or f.codomain_dim != P.dim:
        raise DimensionError("adjoint cochains must map the algebra to itself")
    b = pl_bracket(P.pi, f)
    return b if f.arity % 2 == 1 else -b


# --------------------------------------------------------------------------
# matrices and cohomology


def _scaled(arrs):
    """Common denominator L and the integer arrays L * a (as int64 when safe)."""
    den = 1
    for a in arrs:
        if a.dtype == object:
            for v in a.reshape(-1):
                den = lcm(den, T.frac(v).denominator)
    if den == 1:
        return 1, list(arrs)
    return den, [T.exact_array(T.scale(a, den)) for a in arrs]


def cochain_dim(P_dim: int, module_dim: int, n: int) -> int:
    return n * P_dim**n * module_dim


def coboundary_matrix(P: PreLeibnizAlgebra, R: PreLeibnizRep, n: int) -> RatMatrix:
    """Matrix of delta_pl: C^n -> C^{n+1} in the canonical coordinates.

    delta is linear in the structure constants, so they are scaled to integers
    first and the common denominator is divided out at the end.
    """
    if n < 1:
        raise ValueError("cochain degree must be >= 1")
    _check_pl(P, R, P.dim, R.module_dim)
    d, e = P.dim, R.module_dim
    den, (pi, piL, piR) = _scaled([P.pi.coeffs, R.piL, R.piR])
    cols = cochain_dim(d, e, n)
    basis = np.eye(cols, dtype=np.int64).reshape((cols, n) + (d,) * n + (e,))
    out = _delta_pl_arr(pi, piL, piR, basis, n, batch=True).reshape(cols, -1)
    if out.dtype == object:
        return RatMatrix.from_array(np.array([[Fraction(v) / den for v in row] for row in out.T], dtype=object))
    return RatMatrix.from_scaled_int(np.ascontiguousarray(out.T), den)


def lp_coboundary_matrix(L: LeibnizAlgebra, R: LeibnizRep, n: int) -> RatMatrix:
    if n < 1:
        raise ValueError("cochain degree must be >= 1")
    _check_lp(L, R, n, L.dim, R.module_dim)
    d, e = L.dim, R.module_dim
    den, (B, rl, rr) = _scaled([L.tensor, R.rhoL, R.rhoR])
    cols = d**n * e
    basis = np.eye(cols, dtype=np.int64).reshape((cols,) + (d,) * n + (e,))
    out = _delta_lp_arr(B, rl, rr, basis, n, batch=True).reshape(cols, -1)
    if out.dtype == object:
        return RatMatrix.from_array(np.array([[Fraction(v) / den for v in row] for row in out.T], dtype=object))
    return RatMatrix.from_scaled_int(np.ascontiguousarray(out.T), den)


def _dims(matrix_for, domain_dim, max_n):
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    dims, prev_rank = [], 0
    for n in range(1, max_n + 1):
        M = matrix_for(n)
        rank = mat_rank(M)
        dims.append(domain_dim(n) - rank - prev_rank)
        prev_rank = rank
    return dims


def cohomology_dims(P: PreLeibnizAlgebra, R: PreLeibnizRep, max_n: int) -> list[int]:
    """[dim H^1, ..., dim H^max_n]; the complex starts in degree 1, so H^1 = ker."""
    return _dims(lambda n: coboundary_matrix(P, R, n),
                 lambda n: cochain_dim(P.dim, R.module_dim, n), max_n)


def lp_cohomology_dims(L: LeibnizAlgebra, R: LeibnizRep, max_n: int) -> list[int]:
    return _dims(lambda n: lp_coboundary_matrix(L, R, n),
                 lambda n: L.dim**n * R.module_dim, max_n)


def cocycle_basis(P: PreLeibnizAlgebra, R: PreLeibnizRep, n: int) -> list[ColoredCochain]:
    M = coboundary_matrix(P, R, n)
    return [ColoredCochain.from_vector(n, P.dim, R.module_dim, v) for v in mat_kernel_basis(M)]


def phi_chain_check(P: PreLeibnizAlgebra, R: PreLeibnizRep, f: ColoredCochain) -> bool:
    """Summing colors commutes with the differentials."""
    L, RT = totalize_algebra(P), total_rep(P, R)
    lhs = totalize_cochain(delta_pl(P, R, f))
    rhs = delta_lp(L, RT, totalize_cochain(f))
    return lhs == rhs
