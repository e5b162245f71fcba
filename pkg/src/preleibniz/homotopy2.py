"""Two-term homotopy pre-Leibniz and Leibniz algebras, crossed modules, and
Rota-Baxter operators on two-term Leibniz structures.

Everything lives on the direct sum ``V = a_{-1} (+) a_0`` with the degree -1
block first.  The structure pieces are assembled into one colored (or plain)
cochain on V; composition-type conditions are then evaluated with the
ordinary insertion operations and read off on the relevant index blocks.
Pieces whose degrees do not fit (two degree -1 inputs in a binary map, any
degree -1 input in the ternary map) are zero by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _tensor as T
from .algebra import (CheckReport, LeibnizAlgebra, LeibnizRep, PreLeibnizAlgebra, PreLeibnizRep,
                      as_matrix, check_leibniz, check_leibniz_rep, check_morphism,
                      check_pre_leibniz_rep, check_relative_rb, compare)
from .cochain import ColoredCochain, PlainCochain, circ_i, diamond_i
from .cohomology import delta_pl
from .exactla import DimensionError

C = T.contract


def _arr(x, shape, name):
    a = x.coeffs if isinstance(x, (ColoredCochain, PlainCochain)) else T.exact_array(x)
    if a.shape != shape:
        raise DimensionError(f"{name} must have shape {shape}, got {a.shape}")
    a.flags.writeable = False
    return a


def _obj_zeros(shape):
    out = np.empty(shape, dtype=object)
    out[...] = 0
    return out


def _stack2(a, b):
    if a.dtype == object or b.dtype == object:
        a, b = T.to_object(a), T.to_object(b)
    return np.stack([a, b])


class _TwoTerm:
    """Shared block bookkeeping.  ``colors`` is 0 for plain structures."""

    colors = 0
    _fields = ()

    def _blocks(self):
        m, z = self.dim_m1, self.dim_0
        return slice(0, m), slice(m, m + z)

    @property
    def total_dim(self) -> int:
        return self.dim_m1 + self.dim_0

    def d_on_V(self) -> np.ndarray:
        """The differential as a matrix on V (a_{-1} -> a_0 block)."""
        neg, zer = self._blocks()
        out = _obj_zeros((self.total_dim,) * 2)
        out[zer, neg] = self.d
        return T.exact_array(out)

    def _binary_on_V(self, p00, p0m, pm0, lead=()):
        neg, zer = self._blocks()
        full = (slice(None),) * len(lead)
        out = _obj_zeros(lead + (self.total_dim,) * 3)
        out[full + (zer, zer, zer)] = p00
        out[full + (zer, neg, neg)] = p0m
        out[full + (neg, zer, neg)] = pm0
        return T.exact_array(out)

    def _ternary_on_V(self, p3, lead=()):
        neg, zer = self._blocks()
        full = (slice(None),) * len(lead)
        out = _obj_zeros(lead + (self.total_dim,) * 4)
        out[full + (zer, zer, zer, neg)] = p3
        return T.exact_array(out)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.dim_m1, self.dim_0) == (other.dim_m1, other.dim_0) and all(
            T.equal(getattr(self, f), getattr(other, f)) for f in self._fields
        )

    def is_skeletal(self) -> bool:
        return T.is_zero(self.d)


class TwoTermPreLeibniz(_TwoTerm):
    """Differential ``d: a_{-1} -> a_0`` (a ``dim_0 x dim_m1`` matrix), colored
    binary pieces on (a0,a0)->a0, (a0,a-1)->a-1, (a-1,a0)->a-1 with color axis
    first, and the colored ternary map a0^3 -> a-1."""

    colors = 2
    _fields = ("d", "pi2_00", "pi2_0m", "pi2_m0", "pi3")

    def __init__(self, dim_m1, dim_0, d, pi2_00, pi2_0m, pi2_m0, pi3):
        m, z = dim_m1, dim_0
        self.dim_m1, self.dim_0 = m, z
        self.d = _arr(d, (z, m), "d")
        self.pi2_00 = _arr(pi2_00, (2, z, z, z), "pi2_00")
        self.pi2_0m = _arr(pi2_0m, (2, z, m, m), "pi2_0m")
        self.pi2_m0 = _arr(pi2_m0, (2, m, z, m), "pi2_m0")
        self.pi3 = _arr(pi3, (3, z, z, z, m), "pi3")

    @classmethod
    def zero(cls, dim_m1, dim_0):
        m, z = dim_m1, dim_0
        return cls(m, z, T.zeros((z, m)), T.zeros((2, z, z, z)), T.zeros((2, z, m, m)),
                   T.zeros((2, m, z, m)), T.zeros((3, z, z, z, m)))

    def pi2_on_V(self) -> ColoredCochain:
        return ColoredCochain(self._binary_on_V(self.pi2_00, self.pi2_0m, self.pi2_m0, (2,)))

    def pi3_on_V(self) -> ColoredCochain:
        return ColoredCochain(self._ternary_on_V(self.pi3, (3,)))

    def is_strict(self) -> bool:
        return T.is_zero(self.pi3)

    def __repr__(self):
        return f"TwoTermPreLeibniz(dim_m1={self.dim_m1}, dim_0={self.dim_0})"


class TwoTermLeibniz(_TwoTerm):
    _fields = ("d", "mu2_00", "mu2_0m", "mu2_m0", "mu3")

    def __init__(self, dim_m1, dim_0, d, mu2_00, mu2_0m, mu2_m0, mu3):
        m, z = dim_m1, dim_0
        self.dim_m1, self.dim_0 = m, z
        self.d = _arr(d, (z, m), "d")
        self.mu2_00 = _arr(mu2_00, (z, z, z), "mu2_00")
        self.mu2_0m = _arr(mu2_0m, (z, m, m), "mu2_0m")
        self.mu2_m0 = _arr(mu2_m0, (m, z, m), "mu2_m0")
        self.mu3 = _arr(mu3, (z, z, z, m), "mu3")

    @classmethod
    def zero(cls, dim_m1, dim_0):
        m, z = dim_m1, dim_0
        return cls(m, z, T.zeros((z, m)), T.zeros((z, z, z)), T.zeros((z, m, m)),
                   T.zeros((m, z, m)), T.zeros((z, z, z, m)))

    def mu2_on_V(self) -> PlainCochain:
        return PlainCochain(self._binary_on_V(self.mu2_00, self.mu2_0m, self.mu2_m0))

    def mu3_on_V(self) -> PlainCochain:
        return PlainCochain(self._ternary_on_V(self.mu3))

    def is_strict(self) -> bool:
        return T.is_zero(self.mu3)

    @classmethod
    def from_V(cls, dim_m1, dim_0, d_V, mu2_V, mu3_V) -> "TwoTermLeibniz":
        """Cut the degree-legal blocks out of maps on V (the rest is discarded)."""
        neg, zer = slice(0, dim_m1), slice(dim_m1, dim_m1 + dim_0)
        return cls(dim_m1, dim_0, d_V[zer, neg], mu2_V[zer, zer, zer], mu2_V[zer, neg, neg],
                   mu2_V[neg, zer, neg], mu3_V[zer, zer, zer, neg])

    def __repr__(self):
        return f"TwoTermLeibniz(dim_m1={self.dim_m1}, dim_0={self.dim_0})"


# --------------------------------------------------------------------------
# conditions


def _two_term_failures(X, compose, p2, p3, D, colored):
    """Conditions (i)-(v).  ``compose(f, g, i)`` is the colored or plain insertion,
    ``p2``/``p3`` the binary/ternary maps on V, ``D`` the differential on V."""
    neg, zer = X._blocks()
    lead = (slice(None),) if colored else ()
    a2, a3 = p2.coeffs, p3.coeffs
    c = "r" if colored else ""
    fails = []

    def cmp(name, lhs, rhs, blocks):
        key = lead + blocks
        if colored:
            for r in range(lhs.shape[0]):
                fails.extend(compare(name, lhs[(r,) + blocks], rhs[(r,) + blocks], (r + 1,)))
        else:
            fails.extend(compare(name, lhs[key], rhs[key]))

    d_after = C(f"{c}xyp,kp->{c}xyk", a2, D)
    cmp("(i) d m(x,u) = m(x,du)", d_after, C(f"{c}xpk,py->{c}xyk", a2, D), (zer, neg, slice(None)))
    cmp("(i) d m(u,x) = m(du,x)", d_after, C(f"{c}pyk,px->{c}xyk", a2, D), (neg, zer, slice(None)))
    cmp("(ii) m(du,v) = m(u,dv)", C(f"{c}pyk,px->{c}xyk", a2, D), C(f"{c}xpk,py->{c}xyk", a2, D),
        (neg, neg, slice(None)))

    res2 = (compose(p2, p2, 1) - compose(p2, p2, 2)).coeffs
    cmp("(iii) residual(x,y,z) = d m3(x,y,z)", res2, C(f"{c}xyzp,kp->{c}xyzk", a3, D),
        (zer, zer, zer, slice(None)))
    cmp("(iv) residual(x,y,u) = m3(x,y,du)", res2, C(f"{c}xypk,pz->{c}xyzk", a3, D), (zer, zer, neg, slice(None)))
    cmp("(iv) residual(x,u,y) = m3(x,du,y)", res2, C(f"{c}xpzk,py->{c}xyzk", a3, D), (zer, neg, zer, slice(None)))
    cmp("(iv) residual(u,x,y) = m3(du,x,y)", res2, C(f"{c}pyzk,px->{c}xyzk", a3, D), (neg, zer, zer, slice(None)))

    lhs5 = (compose(p3, p2, 1) - compose(p3, p2, 2) + compose(p3, p2, 3)).coeffs
    rhs5 = (compose(p2, p3, 1) + compose(p2, p3, 2)).coeffs
    cmp("(v) m3 o m2 = m2 o m3", lhs5, rhs5, (zer, zer, zer, zer, slice(None)))
    return fails


def check_two_term_pre(X: TwoTermPreLeibniz) -> CheckReport:
    fails = _two_term_failures(X, diamond_i, X.pi2_on_V(), X.pi3_on_V(), X.d_on_V(), True)
    return CheckReport("2-term pre-Leibniz", fails)


def check_two_term_leibniz(Y: TwoTermLeibniz) -> CheckReport:
    fails = _two_term_failures(Y, circ_i, Y.mu2_on_V(), Y.mu3_on_V(), Y.d_on_V(), False)
    return CheckReport("2-term Leibniz", fails)


def condition_v_residual(X: TwoTermPreLeibniz) -> np.ndarray:
    """lhs - rhs of condition (v) on a_0^4, shape (4, z, z, z, z, m)."""
    p2, p3 = X.pi2_on_V(), X.pi3_on_V()
    lhs = diamond_i(p3, p2, 1) - diamond_i(p3, p2, 2) + diamond_i(p3, p2, 3)
    res = (lhs - diamond_i(p2, p3, 1) - diamond_i(p2, p3, 2)).coeffs
    neg, zer = X._blocks()
    return res[(slice(None), zer, zer, zer, zer, neg)]


def sum_two_term(X: TwoTermPreLeibniz) -> TwoTermLeibniz:
    return TwoTermLeibniz(X.dim_m1, X.dim_0, X.d, X.pi2_00.sum(axis=0), X.pi2_0m.sum(axis=0),
                          X.pi2_m0.sum(axis=0), X.pi3.sum(axis=0))


# --------------------------------------------------------------------------
# skeletal structures and 3-cocycles


def skeletal_to_triple(X: TwoTermPreLeibniz):
    """(algebra on a_0, representation on a_{-1}, 3-cocycle)."""
    if not X.is_skeletal():
        raise ValueError("differential is not zero")
    P = PreLeibnizAlgebra(ColoredCochain(X.pi2_00))
    R = PreLeibnizRep(X.pi2_0m[0], X.pi2_0m[1], X.pi2_m0[0], X.pi2_m0[1])
    theta = ColoredCochain(X.pi3)
    if not delta_pl(P, R, theta).is_zero():
        raise ValueError("ternary map is not a 3-cocycle")
    return P, R, theta


def triple_to_skeletal(P: PreLeibnizAlgebra, R: PreLeibnizRep, theta: ColoredCochain) -> TwoTermPreLeibniz:
    if not check_pre_leibniz_rep(P, R):
        raise ValueError("not a representation")
    if theta.arity != 3 or theta.domain_dim != P.dim or theta.codomain_dim != R.module_dim:
        raise DimensionError("theta must be a 3-cochain on the algebra with values in the module")
    if not delta_pl(P, R, theta).is_zero():
        raise ValueError("theta is not a 3-cocycle")
    m, z = R.module_dim, P.dim
    return TwoTermPreLeibniz(m, z, T.zeros((z, m)), P.pi.coeffs, R.piL, R.piR, theta.coeffs)


# --------------------------------------------------------------------------
# crossed modules


class CrossedModule:
    """Algebras A, B, a map d: A -> B (``B.dim x A.dim`` matrix), and colored
    actions piL: B (x) A -> A, piR: A (x) B -> A (color axis first)."""

    __slots__ = ("A", "B", "d", "piL", "piR")

    def __init__(self, A: PreLeibnizAlgebra, B: PreLeibnizAlgebra, d, piL, piR):
        a, b = A.dim, B.dim
        self.A, self.B = A, B
        self.d = _arr(as_matrix(d), (b, a), "d")
        self.piL = _arr(piL, (2, b, a, a), "piL")
        self.piR = _arr(piR, (2, a, b, a), "piR")

    def rep(self) -> PreLeibnizRep:
        return PreLeibnizRep(self.piL[0], self.piL[1], self.piR[0], self.piR[1])

    def pi_on_sum(self) -> ColoredCochain:
        """pi_A + pi_B + piL + piR on A (+) B, A first."""
        a, b = self.A.dim, self.B.dim
        sa, sb = slice(0, a), slice(a, a + b)
        out = _obj_zeros((2,) + (a + b,) * 3)
        out[:, sa, sa, sa] = self.A.pi.coeffs
        out[:, sb, sb, sb] = self.B.pi.coeffs
        out[:, sb, sa, sa] = self.piL
        out[:, sa, sb, sa] = self.piR
        return ColoredCochain(out)

    def __eq__(self, other):
        if not isinstance(other, CrossedModule):
            return NotImplemented
        return (self.A == other.A and self.B == other.B and T.equal(self.d, other.d)
                and T.equal(self.piL, other.piL) and T.equal(self.piR, other.piR))

    def __repr__(self):
        return f"CrossedModule(dim A={self.A.dim}, dim B={self.B.dim})"


def check_crossed_module(X: CrossedModule) -> CheckReport:
    report = CheckReport("crossed module")
    report.extend(check_morphism(X.d, X.A, X.B))
    report.extend(check_pre_leibniz_rep(X.B, X.rep()))
    d, A, B = X.d, X.A.pi.coeffs, X.B.pi.coeffs
    fails = report.failures
    for r in range(2):
        p = (r + 1,)
        fails += compare("(i) d piL(b,x) = pi_B(b,dx)", C("bxp,kp->bxk", X.piL[r], d),
                         C("bpk,px->bxk", B[r], d), p)
        fails += compare("(i) d piR(x,b) = pi_B(dx,b)", C("xbp,kp->xbk", X.piR[r], d),
                         C("pbk,px->xbk", B[r], d), p)
        fails += compare("(ii) piL(dx,y) = pi_A(x,y)", C("pyk,px->xyk", X.piL[r], d), A[r], p)
        fails += compare("(ii) piR(x,dy) = pi_A(x,y)", C("xpk,py->xyk", X.piR[r], d), A[r], p)
    pi = X.pi_on_sum()
    lhs, rhs = diamond_i(pi, pi, 1).coeffs, diamond_i(pi, pi, 2).coeffs
    a, b = X.A.dim, X.B.dim
    sa, sb = slice(0, a), slice(a, a + b)
    for name, blocks in (("(iii) at (x,y,b)", (sa, sa, sb)), ("(iii) at (x,b,y)", (sa, sb, sa)),
                         ("(iii) at (b,x,y)", (sb, sa, sa))):
        for s in range(3):
            key = (s,) + blocks + (sa,)
            fails += compare(name, lhs[key], rhs[key], (s + 1,))
    return report


def strict_to_crossed(X: TwoTermPreLeibniz) -> CrossedModule:
    if not X.is_strict():
        raise ValueError("ternary map is not zero")
    via_first = C("rpvk,pu->ruvk", X.pi2_0m, X.d)
    via_second = C("rupk,pv->ruvk", X.pi2_m0, X.d)
    if not T.equal(T.exact_array(via_first), T.exact_array(via_second)):
        raise ValueError("condition (ii) fails: pi2(du,v) != pi2(u,dv)")
    A = PreLeibnizAlgebra(ColoredCochain(via_first))
    B = PreLeibnizAlgebra(ColoredCochain(X.pi2_00))
    return CrossedModule(A, B, X.d, X.pi2_0m, X.pi2_m0)


def crossed_to_strict(X: CrossedModule) -> TwoTermPreLeibniz:
    report = check_crossed_module(X)
    if not report:
        raise ValueError(report.summary())
    a, b = X.A.dim, X.B.dim
    return TwoTermPreLeibniz(a, b, X.d, X.B.pi.coeffs, X.piL, X.piR, T.zeros((3, b, b, b, a)))


def identity_complex(P: PreLeibnizAlgebra) -> TwoTermPreLeibniz:
    """a --id--> a with every binary piece equal to the structure of a."""
    n, p = P.dim, P.pi.coeffs
    return TwoTermPreLeibniz(n, n, np.eye(n, dtype=np.int64), p, p, p, T.zeros((3, n, n, n, n)))


# --------------------------------------------------------------------------
# Rota-Baxter operators


def _block_diag(t_m1, t_0):
    m, z = t_m1.shape[0], t_0.shape[0]
    out = _obj_zeros((m + z,) * 2)
    out[:m, :m] = t_m1
    out[m:, m:] = t_0
    return T.exact_array(out)


def _rb_pair(Y, Tpair):
    t_m1, t_0 = (as_matrix(t) for t in Tpair)
    if t_m1.shape != (Y.dim_m1,) * 2 or t_0.shape != (Y.dim_0,) * 2:
        raise DimensionError("T must be a pair of square maps on a_{-1} and a_0")
    return _block_diag(t_m1, t_0)


def _twisted(arr, Tv, keep):
    """The map x -> m(T x_1, ..., x_keep, ..., T x_k) for an arity-k tensor on V."""
    k = arr.ndim - 1
    for s in range(k):
        if s != keep:
            letters = "abcdefgh"[:k] + "z"
            src = letters.replace(letters[s], "p")
            arr = C(f"{src},p{letters[s]}->{letters}", arr, Tv)
    return arr


def rb_residuals(Y: TwoTermLeibniz, Tpair) -> dict[int, np.ndarray]:
    """m_k(T x_1, ..., T x_k) - T(sum_r m_k(T x_1, ..., x_r, ..., T x_k)) for k = 1, 2, 3."""
    Tv = _rb_pair(Y, Tpair)
    maps = {1: Y.d_on_V().T.copy(), 2: Y.mu2_on_V().coeffs, 3: Y.mu3_on_V().coeffs}
    out = {}
    for k, arr in maps.items():
        all_t = _twisted(arr, Tv, None)
        summed = None
        for r in range(k):
            term = _twisted(arr, Tv, r)
            summed = term if summed is None else T.add(summed, term)
        letters = "abc"[:k]
        out[k] = T.sub(all_t, C(f"{letters}p,zp->{letters}z", summed, Tv))
    return out


def check_rb_two_term(Y: TwoTermLeibniz, Tpair) -> CheckReport:
    """m_k(T x_1, ..., T x_k) = T(sum_r m_k(T x_1, ..., x_r, ..., T x_k)), k = 1, 2, 3."""
    report = CheckReport("Rota-Baxter on 2-term Leibniz")
    for k, res in rb_residuals(Y, Tpair).items():
        zero = T.zeros(res.shape)
        report.failures += compare(f"k={k}: m(Tx..Tx) = T(sum_r m(Tx..x_r..Tx))", res, zero)
    return report


def check_rb_module(L: LeibnizAlgebra, R: LeibnizRep, RB, RB_M) -> CheckReport:
    """rhoL(Rx, R_M u) = R_M(rhoL(x, R_M u) + rhoL(Rx, u)) and
    rhoR(R_M u, Rx) = R_M(rhoR(u, Rx) + rhoR(R_M u, x))."""
    r, rm = as_matrix(RB), as_matrix(RB_M)
    if r.shape != (L.dim,) * 2 or rm.shape != (R.module_dim,) * 2:
        raise DimensionError("Rota-Baxter maps must be square on the algebra and the module")
    rl, rr = R.rhoL, R.rhoR
    report = CheckReport("Rota-Baxter module")
    lhs = C("pqk,px,qu->xuk", rl, r, rm)
    inner = T.add(C("xqm,qu->xum", rl, rm), C("pum,px->xum", rl, r))
    report.failures += compare("rhoL(Rx,R_M u) = R_M(rhoL(x,R_M u) + rhoL(Rx,u))", lhs,
                               C("xum,km->xuk", inner, rm))
    lhs = C("pqk,pu,qx->uxk", rr, rm, r)
    inner = T.add(C("uqm,qx->uxm", rr, r), C("pxm,pu->uxm", rr, rm))
    report.failures += compare("rhoR(R_M u,Rx) = R_M(rhoR(u,Rx) + rhoR(R_M u,x))", lhs,
                               C("uxm,km->uxk", inner, rm))
    return report


def rb_pair_to_two_term(L: LeibnizAlgebra, R: LeibnizRep, RB, RB_M):
    """(M -0-> g with bracket and actions, T = (R_M, R))."""
    for rep in (check_leibniz(L), check_leibniz_rep(L, R),
                check_relative_rb(RB, L, LeibnizRep.adjoint(L)), check_rb_module(L, R, RB, RB_M)):
        if not rep:
            raise ValueError(rep.summary())
    m, z = R.module_dim, L.dim
    Y = TwoTermLeibniz(m, z, T.zeros((z, m)), L.tensor, R.rhoL, R.rhoR, T.zeros((z, z, z, m)))
    return Y, (as_matrix(RB_M), as_matrix(RB))


def induced_pre_from_rb(Y: TwoTermLeibniz, Tpair) -> TwoTermPreLeibniz:
    """pi_k([r]; x) = m_k(T x_1, ..., x_r, ..., T x_k)."""
    report = check_rb_two_term(Y, Tpair)
    if not report:
        raise ValueError(report.summary())
    Tv = _rb_pair(Y, Tpair)
    p2 = _stack2(*(_twisted(Y.mu2_on_V().coeffs, Tv, r) for r in range(2)))
    p3_list = [_twisted(Y.mu3_on_V().coeffs, Tv, r) for r in range(3)]
    if any(a.dtype == object for a in p3_list):
        p3_list = [T.to_object(a) for a in p3_list]
    p3 = np.stack(p3_list)
    m, z = Y.dim_m1, Y.dim_0
    neg, zer = slice(0, m), slice(m, m + z)
    return TwoTermPreLeibniz(m, z, Y.d, p2[:, zer, zer, zer], p2[:, zer, neg, neg], p2[:, neg, zer, neg],
                             p3[:, zer, zer, zer, neg])
