"""Truncated formal deformations of a pre-Leibniz algebra.

A deformation of order N is ``pi_t = pi + t pi_1 + ... + t^N pi_N`` where each
``pi_i`` is a colored 2-cochain on the underlying space; it is valid when
``[[pi_t, pi_t]] = 0`` modulo ``t^{N+1}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _tensor as T
from .algebra import (InternalConsistencyError, PreLeibnizAlgebra, PreLeibnizRep, as_matrix,
                      check_pre_leibniz)
from .cochain import ColoredCochain, pl_bracket
from .cohomology import coboundary_matrix, delta_pl
from .exactla import DimensionError, solve_linear


@dataclass(frozen=True)
class TruncatedDeformation:
    base: PreLeibnizAlgebra
    terms: tuple[ColoredCochain, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("a deformation needs order N >= 1")
        d = self.base.dim
        for k, p in enumerate(self.terms, start=1):
            if p.arity != 2 or p.domain_dim != d or p.codomain_dim != d:
                raise DimensionError(f"term {k} is not a colored 2-cochain on the {d}-dim base")

    @property
    def order(self) -> int:
        return len(self.terms)

    def coefficient(self, i: int) -> ColoredCochain:
        """pi_i, with pi_0 the base structure."""
        return self.base.pi if i == 0 else self.terms[i - 1]

    @classmethod
    def scaling(cls, P: PreLeibnizAlgebra, order: int = 1) -> "TruncatedDeformation":
        """pi_t = (1 + t) pi."""
        zero = ColoredCochain.zeros(2, P.dim, P.dim)
        return cls(P, (P.pi,) + (zero,) * (order - 1))

    @classmethod
    def trivial(cls, P: PreLeibnizAlgebra, order: int = 1) -> "TruncatedDeformation":
        return cls(P, (ColoredCochain.zeros(2, P.dim, P.dim),) * order)

    def extended(self, term: ColoredCochain) -> "TruncatedDeformation":
        return TruncatedDeformation(self.base, self.terms + (term,))


@dataclass(frozen=True)
class TruncatedEquivalence:
    """phi_t = id + t phi_1 + ... + t^N phi_N, each phi_k a d x d matrix."""

    maps: tuple

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(as_matrix(m) for m in self.maps))

    @property
    def order(self) -> int:
        return len(self.maps)

    @classmethod
    def identity(cls, dim: int, order: int) -> "TruncatedEquivalence":
        return cls(tuple(T.zeros((dim, dim)) for _ in range(order)))


@dataclass
class OrderReport:
    ok: bool
    first_failing_order: int | None = None
    residual: ColoredCochain | None = None

    def __bool__(self):
        return self.ok


def order_residual(D: TruncatedDeformation, n: int) -> ColoredCochain:
    """sum_{i+j=n} [[pi_i, pi_j]] with 0 <= i, j <= N."""
    d = D.base.dim
    acc = ColoredCochain.zeros(3, d, d)
    for i in range(max(0, n - D.order), min(n, D.order) + 1):
        acc = acc + pl_bracket(D.coefficient(i), D.coefficient(n - i))
    return acc


def check_order_n(D: TruncatedDeformation) -> OrderReport:
    for n in range(D.order + 1):
        res = order_residual(D, n)
        if not res.is_zero():
            return OrderReport(False, n, res)
    return OrderReport(True)


def _require_valid(D):
    rep = check_order_n(D)
    if not rep:
        raise ValueError(f"not a deformation of order {D.order}: fails at order {rep.first_failing_order}")


def mc_in_twisted_dgla(P: PreLeibnizAlgebra, pi_prime: ColoredCochain) -> bool:
    """Whether d_pi(pi') + 1/2 [[pi', pi']] = 0, where d_pi = [[pi, -]].

    Cross-checked against the identities for the summed products.
    """
    if not check_pre_leibniz(P):
        raise ValueError("base is not a pre-Leibniz algebra")
    mc = (pl_bracket(P.pi, pi_prime) + pl_bracket(pi_prime, pi_prime) * Fraction(1, 2)).is_zero()
    direct = check_pre_leibniz(PreLeibnizAlgebra(P.pi + pi_prime)).ok
    if mc != direct:
        raise InternalConsistencyError(f"twisted Maurer-Cartan says {mc}, identities say {direct}")
    return mc


class ClassStatus(enum.Enum):
    NOT_A_COCYCLE = "not-a-cocycle"
    COBOUNDARY = "coboundary"
    NONTRIVIAL = "nontrivial-class"


@dataclass
class ClassResult:
    status: ClassStatus
    witness: ColoredCochain | None = None


def _adjoint(P):
    return PreLeibnizRep.adjoint(P)


def coboundary_preimage(P: PreLeibnizAlgebra, target: ColoredCochain) -> ColoredCochain | None:
    """Some g with delta_pl(g) = target (adjoint coefficients), or None."""
    n = target.arity - 1
    M = coboundary_matrix(P, _adjoint(P), n)
    x = solve_linear(M, target.to_vector())
    return None if x is None else ColoredCochain.from_vector(n, P.dim, P.dim, x)


def infinitesimal_class(P: PreLeibnizAlgebra, pi1: ColoredCochain) -> ClassResult:
    if not delta_pl(P, _adjoint(P), pi1).is_zero():
        return ClassResult(ClassStatus.NOT_A_COCYCLE)
    g = coboundary_preimage(P, pi1)
    if g is None:
        return ClassResult(ClassStatus.NONTRIVIAL)
    return ClassResult(ClassStatus.COBOUNDARY, g)


def obstruction(D: TruncatedDeformation) -> ColoredCochain:
    """1/2 sum_{i+j=N+1, i,j>=1} [[pi_i, pi_j]]; always a 3-cocycle."""
    _require_valid(D)
    N, d = D.order, D.base.dim
    acc = ColoredCochain.zeros(3, d, d)
    for i in range(1, N + 1):
        acc = acc + pl_bracket(D.coefficient(i), D.coefficient(N + 1 - i))
    ob = acc * Fraction(1, 2)
    if not delta_pl(D.base, _adjoint(D.base), ob).is_zero():
        raise InternalConsistencyError("obstruction is not a cocycle")
    return ob


def extend(D: TruncatedDeformation) -> ColoredCochain | None:
    """A term pi_{N+1} with delta_pl(pi_{N+1}) = Ob, or None when [Ob] != 0."""
    ob = obstruction(D)
    term = coboundary_preimage(D.base, ob)
    if term is not None and not check_order_n(D.extended(term)):
        raise InternalConsistencyError("extension does not satisfy the next order")
    return term


def _apply_map(phi, pi_arr, where):
    """Apply the linear map ``phi`` to the output (``where='out'``) of a colored
    2-cochain tensor, or to its first / second input."""
    subs = {"out": "ryzp,kp->ryzk", "first": "rpzk,py->ryzk", "second": "rypk,pz->ryzk"}[where]
    return T.contract(subs, pi_arr, phi)


def equivalence_residuals(D: TruncatedDeformation, Dp: TruncatedDeformation,
                          E: TruncatedEquivalence) -> list[np.ndarray]:
    """Coefficient of t^n, n = 0..N, in phi_t(pi_t(x,y)) - pi'_t(phi_t x, phi_t y)."""
    if not (D.order == Dp.order == E.order):
        raise ValueError(f"orders differ: {D.order}, {Dp.order}, {E.order}")
    if D.base.dim != Dp.base.dim or any(m.shape != (D.base.dim,) * 2 for m in E.maps):
        raise DimensionError("deformations and maps live on different spaces")
    N, d = D.order, D.base.dim
    phis = [np.eye(d, dtype=np.int64)] + list(E.maps)
    out = []
    for n in range(N + 1):
        acc = T.zeros((2, d, d, d))
        for a in range(n + 1):
            acc = T.add(acc, _apply_map(phis[a], D.coefficient(n - a).coeffs, "out"))
        for a in range(n + 1):
            for b in range(n - a + 1):
                term = _apply_map(phis[b], Dp.coefficient(a).coeffs, "first")
                term = _apply_map(phis[n - a - b], term, "second")
                acc = T.sub(acc, term)
        out.append(acc)
    return out


def check_equivalence(P: PreLeibnizAlgebra, D: TruncatedDeformation, Dp: TruncatedDeformation,
                      E: TruncatedEquivalence) -> bool:
    """phi_t is a morphism from pi_t to pi'_t modulo t^{N+1}."""
    if D.base != P or Dp.base != P:
        raise ValueError("both deformations must deform the given algebra")
    _require_valid(D)
    _require_valid(Dp)
    return all(T.is_zero(r) for r in equivalence_residuals(D, Dp, E))
