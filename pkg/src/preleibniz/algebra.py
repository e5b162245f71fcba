"""Leibniz and pre-Leibniz algebras given by structure constants.

Tensor conventions (0-based inside arrays, 1-based in every public index):

* a bilinear product ``A`` has ``A[i, j, k]`` = coefficient of ``e_k`` in ``A(e_i, e_j)``;
* a left action ``a (x) M -> M`` has shape ``(d, e, e)``, a right action
  ``M (x) a -> M`` has shape ``(e, d, e)``;
* a linear map ``T: V -> W`` is a ``dim W x dim V`` matrix acting on columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _tensor as T
from .cochain import ColoredCochain, PlainCochain, pl_bracket
from .exactla import DimensionError, RatMatrix


class InternalConsistencyError(RuntimeError):
    """Two independent evaluations of the same statement disagree."""


@dataclass(frozen=True)
class Failure:
    identity: str
    indices: tuple[int, ...]
    lhs: tuple[Fraction, ...]
    rhs: tuple[Fraction, ...]

    def __str__(self):
        fmt = lambda v: "(" + ", ".join(str(x) for x in v) + ")"
        return f"{self.identity} at {self.indices}: lhs={fmt(self.lhs)} rhs={fmt(self.rhs)}"


@dataclass
class CheckReport:
    what: str
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.failures.extend(other.failures)
        return self

    def summary(self) -> str:
        if self.ok:
            return f"{self.what}: OK"
        n = len(self.failures)
        lines = [f"{self.what}: FAILED ({n} violation{'' if n == 1 else 's'})"]
        lines += [f"  {f}" for f in self.failures]
        return "\n".join(lines)


def compare(name: str, lhs: np.ndarray, rhs: np.ndarray, prefix: tuple[int, ...] = ()) -> list[Failure]:
    """Failures for every input index (all axes but the last) where lhs != rhs."""
    if lhs.shape != rhs.shape:
        raise DimensionError(f"{name}: shapes {lhs.shape} and {rhs.shape} differ")
    diff = T.sub(lhs, rhs)
    out = []
    for idx in np.ndindex(*diff.shape[:-1]):
        if not T.is_zero(diff[idx]):
            out.append(Failure(
                name,
                prefix + tuple(i + 1 for i in idx),
                tuple(T.frac(v) for v in lhs[idx]),
                tuple(T.frac(v) for v in rhs[idx]),
            ))
    return out


def as_matrix(m) -> np.ndarray:
    if isinstance(m, RatMatrix):
        return T.exact_array(m.to_array())
    arr = T.exact_array(m)
    if arr.ndim != 2:
        raise DimensionError(f"expected a matrix, got shape {arr.shape}")
    return arr


def _bilinear(arr, shape, name):
    arr = T.exact_array(arr)
    if arr.shape != shape:
        raise DimensionError(f"{name} must have shape {shape}, got {arr.shape}")
    arr.flags.writeable = False
    return arr


# --------------------------------------------------------------------------
# types


class LeibnizAlgebra:
    __slots__ = ("bracket",)

    def __init__(self, bracket):
        if not isinstance(bracket, PlainCochain):
            bracket = PlainCochain(bracket)
        if bracket.arity != 2 or bracket.codomain_dim != bracket.domain_dim:
            raise DimensionError("a Leibniz bracket is a bilinear map V x V -> V")
        self.bracket = bracket

    @property
    def dim(self) -> int:
        return self.bracket.domain_dim

    @property
    def tensor(self) -> np.ndarray:
        return self.bracket.coeffs

    @classmethod
    def from_entries(cls, dim, entries) -> "LeibnizAlgebra":
        return cls(PlainCochain.from_entries(2, dim, dim, entries))

    @classmethod
    def zero(cls, dim) -> "LeibnizAlgebra":
        return cls(PlainCochain.zeros(2, dim, dim))

    def __eq__(self, other):
        return isinstance(other, LeibnizAlgebra) and self.bracket == other.bracket

    def __repr__(self):
        return f"LeibnizAlgebra(dim={self.dim}, bracket={self.bracket.entries()})"


class LeibnizRep:
    """Left action rhoL: g (x) M -> M and right action rhoR: M (x) g -> M."""

    __slots__ = ("rhoL", "rhoR")

    def __init__(self, rhoL, rhoR):
        rhoL, rhoR = T.exact_array(rhoL), T.exact_array(rhoR)
        if rhoL.ndim != 3 or rhoR.ndim != 3:
            raise DimensionError("actions are 3-index tensors")
        d, e = rhoL.shape[0], rhoL.shape[1]
        self.rhoL = _bilinear(rhoL, (d, e, e), "rhoL")
        self.rhoR = _bilinear(rhoR, (e, d, e), "rhoR")

    @property
    def base_dim(self) -> int:
        return self.rhoL.shape[0]

    @property
    def module_dim(self) -> int:
        return self.rhoL.shape[1]

    @classmethod
    def adjoint(cls, L: LeibnizAlgebra) -> "LeibnizRep":
        return cls(L.tensor, L.tensor)

    @classmethod
    def zero(cls, base_dim, module_dim) -> "LeibnizRep":
        return cls(T.zeros((base_dim, module_dim, module_dim)), T.zeros((module_dim, base_dim, module_dim)))

    def __eq__(self, other):
        return (isinstance(other, LeibnizRep) and T.equal(self.rhoL, other.rhoL)
                and T.equal(self.rhoR, other.rhoR))


class PreLeibnizAlgebra:
    """Two products packed as a colored 2-cochain: color [1] is the left product,
    color [2] the right product."""

    __slots__ = ("pi",)

    def __init__(self, pi: ColoredCochain):
        if pi.arity != 2 or pi.codomain_dim != pi.domain_dim:
            raise DimensionError("pre-Leibniz structure must be a colored 2-cochain on one space")
        self.pi = pi

    @classmethod
    def from_products(cls, left, right) -> "PreLeibnizAlgebra":
        return cls(ColoredCochain.from_colors([left, right]))

    @classmethod
    def from_entries(cls, dim, left=(), right=()) -> "PreLeibnizAlgebra":
        entries = [(1, *e) for e in left] + [(2, *e) for e in right]
        return cls(ColoredCochain.from_entries(2, dim, dim, entries))

    @classmethod
    def zero(cls, dim) -> "PreLeibnizAlgebra":
        return cls(ColoredCochain.zeros(2, dim, dim))

    @property
    def dim(self) -> int:
        return self.pi.domain_dim

    @property
    def left(self) -> np.ndarray:
        return self.pi.coeffs[0]

    @property
    def right(self) -> np.ndarray:
        return self.pi.coeffs[1]

    def __eq__(self, other):
        return isinstance(other, PreLeibnizAlgebra) and self.pi == other.pi

    def __repr__(self):
        return f"PreLeibnizAlgebra(dim={self.dim}, pi={self.pi.entries()})"


class PreLeibnizRep:
    """Actions leftL, rightL: a (x) M -> M and leftR, rightR: M (x) a -> M."""

    __slots__ = ("leftL", "rightL", "leftR", "rightR")

    def __init__(self, leftL, rightL, leftR, rightR):
        leftL = T.exact_array(leftL)
        if leftL.ndim != 3:
            raise DimensionError("actions are 3-index tensors")
        d, e = leftL.shape[0], leftL.shape[1]
        self.leftL = _bilinear(leftL, (d, e, e), "leftL")
        self.rightL = _bilinear(rightL, (d, e, e), "rightL")
        self.leftR = _bilinear(leftR, (e, d, e), "leftR")
        self.rightR = _bilinear(rightR, (e, d, e), "rightR")

    @property
    def base_dim(self) -> int:
        return self.leftL.shape[0]

    @property
    def module_dim(self) -> int:
        return self.leftL.shape[1]

    @classmethod
    def adjoint(cls, P: PreLeibnizAlgebra) -> "PreLeibnizRep":
        return cls(P.left, P.right, P.left, P.right)

    @classmethod
    def zero(cls, base_dim, module_dim) -> "PreLeibnizRep":
        lz = T.zeros((base_dim, module_dim, module_dim))
        rz = T.zeros((module_dim, base_dim, module_dim))
        return cls(lz, lz, rz, rz)

    @property
    def piL(self) -> np.ndarray:
        """Colored left action, shape (2, d, e, e)."""
        return _stack(self.leftL, self.rightL)

    @property
    def piR(self) -> np.ndarray:
        """Colored right action, shape (2, e, d, e)."""
        return _stack(self.leftR, self.rightR)

    def __eq__(self, other):
        return isinstance(other, PreLeibnizRep) and all(
            T.equal(getattr(self, k), getattr(other, k)) for k in self.__slots__
        )


def _stack(a, b):
    if a.dtype == object or b.dtype == object:
        a, b = T.to_object(a), T.to_object(b)
    return np.stack([a, b])


def _require_rep_shape(P_dim, R):
    if R.base_dim != P_dim:
        raise DimensionError(f"representation is over a {R.base_dim}-dimensional algebra, not {P_dim}")


# --------------------------------------------------------------------------
# identity checks

C = T.contract


def leibniz_residual_terms(B):
    """([x,[y,z]], [[x,y],z] + [y,[x,z]]) as (x, y, z, k) tensors."""
    lhs = C("yzp,xpk->xyzk", B, B)
    rhs = T.add(C("xyp,pzk->xyzk", B, B), C("xzp,ypk->xyzk", B, B))
    return lhs, rhs


def check_leibniz(L: LeibnizAlgebra) -> CheckReport:
    lhs, rhs = leibniz_residual_terms(L.tensor)
    return CheckReport("Leibniz", compare("[x,[y,z]] = [[x,y],z] + [y,[x,z]]", lhs, rhs))


def check_right_leibniz(bracket: PlainCochain) -> CheckReport:
    B = bracket.coeffs
    lhs = C("xyp,pzk->xyzk", B, B)
    rhs = T.add(C("yzp,xpk->xyzk", B, B), C("xzp,pyk->xyzk", B, B))
    return CheckReport("right Leibniz", compare("[[x,y],z] = [x,[y,z]] + [[x,z],y]", lhs, rhs))


def check_leibniz_rep(L: LeibnizAlgebra, R: LeibnizRep) -> CheckReport:
    if not check_leibniz(L):
        raise ValueError("base algebra is not a Leibniz algebra")
    _require_rep_shape(L.dim, R)
    B, rl, rr = L.tensor, R.rhoL, R.rhoR
    report = CheckReport("Leibniz representation")
    report.failures += compare(
        "rhoL(x,rhoL(y,u)) = rhoL([x,y],u) + rhoL(y,rhoL(x,u))",
        C("yup,xpk->xyuk", rl, rl),
        T.add(C("xyp,puk->xyuk", B, rl), C("xup,ypk->xyuk", rl, rl)),
    )
    report.failures += compare(
        "rhoL(x,rhoR(u,y)) = rhoR(rhoL(x,u),y) + rhoR(u,[x,y])",
        C("uyp,xpk->xuyk", rr, rl),
        T.add(C("xup,pyk->xuyk", rl, rr), C("xyp,upk->xuyk", B, rr)),
    )
    report.failures += compare(
        "rhoR(u,[x,y]) = rhoR(rhoR(u,x),y) + rhoL(x,rhoR(u,y))",
        C("xyp,upk->uxyk", B, rr),
        T.add(C("uxp,pyk->uxyk", rr, rr), C("uyp,xpk->uxyk", rr, rl)),
    )
    return report


def pre_leibniz_identity_terms(left, right):
    """(lhs, rhs) pairs of the three defining identities as (x, y, z, k) tensors."""
    tot = T.add(left, right)
    return [
        ("x<(y<z + y>z) = (x<y)<z + y>(x<z)",
         C("yzp,xpk->xyzk", tot, left),
         T.add(C("xyp,pzk->xyzk", left, left), C("xzp,ypk->xyzk", left, right))),
        ("x>(y<z) = (x>y)<z + y<(x<z + x>z)",
         C("yzp,xpk->xyzk", left, right),
         T.add(C("xyp,pzk->xyzk", right, left), C("xzp,ypk->xyzk", tot, left))),
        ("x>(y>z) = (x<y + x>y)>z + y>(x>z)",
         C("yzp,xpk->xyzk", right, right),
         T.add(C("xyp,pzk->xyzk", tot, right), C("xzp,ypk->xyzk", right, right))),
    ]


def check_pre_leibniz(P: PreLeibnizAlgebra) -> CheckReport:
    """Enumerate the three identities; cross-check against the Maurer-Cartan equation."""
    report = CheckReport("pre-Leibniz")
    for n, (name, lhs, rhs) in enumerate(pre_leibniz_identity_terms(P.left, P.right), start=1):
        report.failures += compare(f"({n}) {name}", lhs, rhs)
    mc = pl_bracket(P.pi, P.pi).is_zero()
    if mc != report.ok:
        raise InternalConsistencyError(
            f"identity enumeration says {report.ok} but [[pi,pi]] = 0 is {mc}"
        )
    return report


def check_pre_leibniz_rep(P: PreLeibnizAlgebra, R: PreLeibnizRep) -> CheckReport:
    """The nine representation identities, checked as the pre-Leibniz identities
    of the semidirect product (mixed terms with two module inputs vanish there)."""
    if not check_pre_leibniz(P):
        raise ValueError("base algebra is not pre-Leibniz")
    _require_rep_shape(P.dim, R)
    inner = check_pre_leibniz(semidirect(P, R))
    report = CheckReport("pre-Leibniz representation", inner.failures)
    return report


def check_morphism(phi, P: PreLeibnizAlgebra, Q: PreLeibnizAlgebra) -> CheckReport:
    f = as_matrix(phi)
    if f.shape != (Q.dim, P.dim):
        raise DimensionError(f"morphism matrix must be {Q.dim}x{P.dim}, got {f.shape}")
    report = CheckReport("pre-Leibniz morphism")
    for name, a, b in (("<", P.left, Q.left), (">", P.right, Q.right)):
        report.failures += compare(
            f"phi(x{name}y) = phi(x){name}'phi(y)",
            C("xyp,kp->xyk", a, f),
            C("pqk,px,qy->xyk", b, f, f),
        )
    return report


# --------------------------------------------------------------------------
# constructions


def totalize_algebra(P: PreLeibnizAlgebra) -> LeibnizAlgebra:
    return LeibnizAlgebra(T.add(P.left, P.right))


def total_rep(P: PreLeibnizAlgebra, R: PreLeibnizRep) -> LeibnizRep:
    _require_rep_shape(P.dim, R)
    return LeibnizRep(T.add(R.leftL, R.rightL), T.add(R.leftR, R.rightR))


def semidirect(P: PreLeibnizAlgebra, R: PreLeibnizRep) -> PreLeibnizAlgebra:
    """Products on a (+) M: (x,u)*(y,v) = (x*y, x*^L v + u*^R y) for * in {<, >}."""
    _require_rep_shape(P.dim, R)
    d, e = P.dim, R.module_dim
    a, m = slice(0, d), slice(d, d + e)

    def block(prod, act_l, act_r):
        arr = np.zeros((d + e,) * 3, dtype=object)
        arr[...] = 0
        arr[a, a, a] = prod
        arr[a, m, m] = act_l
        arr[m, a, m] = act_r
        return arr

    return PreLeibnizAlgebra.from_products(block(P.left, R.leftL, R.leftR),
                                           block(P.right, R.rightL, R.rightR))


def check_relative_rb(Tm, L: LeibnizAlgebra, R: LeibnizRep) -> CheckReport:
    """[Tu, Tv] = T(rhoR(u, Tv) + rhoL(Tu, v)) on all basis pairs of M."""
    t = as_matrix(Tm)
    _require_rep_shape(L.dim, R)
    if t.shape != (L.dim, R.module_dim):
        raise DimensionError(f"T must be a {L.dim}x{R.module_dim} matrix, got {t.shape}")
    lhs = C("pqk,pu,qv->uvk", L.tensor, t, t)
    inner = T.add(C("upm,pv->uvm", R.rhoR, t), C("pvm,pu->uvm", R.rhoL, t))
    rhs = C("uvm,km->uvk", inner, t)
    return CheckReport("relative Rota-Baxter", compare("[Tu,Tv] = T(rhoR(u,Tv) + rhoL(Tu,v))", lhs, rhs))


def induced_pre_leibniz(Tm, L: LeibnizAlgebra, R: LeibnizRep) -> PreLeibnizAlgebra:
    """u < v := rhoR(u, Tv), u > v := rhoL(Tu, v)."""
    report = check_relative_rb(Tm, L, R)
    if not report:
        raise ValueError(report.summary())
    t = as_matrix(Tm)
    left = C("upm,pv->uvm", R.rhoR, t)
    right = C("pvm,pu->uvm", R.rhoL, t)
    return PreLeibnizAlgebra.from_products(left, right)


def identity_rb_data(P: PreLeibnizAlgebra) -> tuple[np.ndarray, LeibnizAlgebra, LeibnizRep]:
    """(id, total algebra, actions rhoL(u,v) = u > v, rhoR(v,u) = v < u)."""
    return (np.eye(P.dim, dtype=np.int64), totalize_algebra(P), LeibnizRep(P.right, P.left))


def from_pre_lie(product) -> PreLeibnizAlgebra:
    """x < y := x.y and x > y := -y.x."""
    A = product.coeffs if isinstance(product, PlainCochain) else T.exact_array(product)
    if A.ndim != 3 or len(set(A.shape)) != 1:
        raise DimensionError("a product on V is a (d, d, d) tensor")
    return PreLeibnizAlgebra.from_products(A, T.neg(np.swapaxes(A, 0, 1)))


def pre_lie_residual(product) -> tuple[np.ndarray, np.ndarray]:
    """((x.y).z - x.(y.z), (x.z).y - x.(z.y)) as (x, y, z, k) tensors."""
    A = product.coeffs if isinstance(product, PlainCochain) else T.exact_array(product)
    assoc = T.sub(C("xyp,pzk->xyzk", A, A), C("yzp,xpk->xyzk", A, A))
    return assoc, np.swapaxes(assoc, 1, 2)


def opposite(L: LeibnizAlgebra) -> PlainCochain:
    """The bracket [x, y]^op = [y, x]."""
    return PlainCochain(np.swapaxes(L.tensor, 0, 1).copy())
