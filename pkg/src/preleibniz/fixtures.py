"""Small named algebras and deterministic generators of valid structures."""

from __future__ import annotations

import itertools
import random

import numpy as np

from .algebra import LeibnizAlgebra, PreLeibnizAlgebra, PreLeibnizRep, check_pre_leibniz, semidirect
from .cochain import ColoredCochain
from .cohomology import cocycle_basis
from .homotopy2 import (CrossedModule, TwoTermPreLeibniz, crossed_to_strict, triple_to_skeletal)


def p2() -> PreLeibnizAlgebra:
    """Dimension 2, e1 > e1 = e2, every other product zero."""
    return PreLeibnizAlgebra.from_entries(2, right=[(1, 1, 2, 1)])


def leibniz2() -> LeibnizAlgebra:
    """Dimension 2, [e1, e1] = e2."""
    return LeibnizAlgebra.from_entries(2, [(1, 1, 2, 1)])


def p2_semidirect() -> PreLeibnizAlgebra:
    P = p2()
    return semidirect(P, PreLeibnizRep.adjoint(P))


def random_pre_leibniz(rng: random.Random, dims=(2, 3), max_terms: int = 3) -> PreLeibnizAlgebra:
    """Sparse random structures, resampled until the identities hold."""
    while True:
        d = rng.choice(dims)
        arr = np.zeros((2, d, d, d), dtype=np.int64)
        for _ in range(rng.randint(1, max_terms)):
            arr[tuple(rng.randrange(s) for s in arr.shape)] = rng.choice([-1, 1, 2])
        P = PreLeibnizAlgebra(ColoredCochain(arr))
        if not P.pi.is_zero() and check_pre_leibniz(P):
            return P


def pre_leibniz_samples(count: int, seed: int = 0, dims=(2, 3)) -> list[PreLeibnizAlgebra]:
    rng = random.Random(seed)
    return [random_pre_leibniz(rng, dims) for _ in range(count)]


def skeletal_samples(count: int, seed: int = 0) -> list[TwoTermPreLeibniz]:
    """Zero structure, P2 with theta = 0, then (algebra, adjoint, random 3-cocycle)."""
    rng = random.Random(seed)
    P = p2()
    out = [TwoTermPreLeibniz.zero(1, 1), triple_to_skeletal(P, PreLeibnizRep.adjoint(P),
                                                           ColoredCochain.zeros(3, 2, 2))]
    while len(out) < count:
        P = random_pre_leibniz(rng, dims=(2,))
        R = PreLeibnizRep.adjoint(P)
        Z = cocycle_basis(P, R, 3)
        theta = ColoredCochain.zeros(3, P.dim, P.dim)
        for z in rng.sample(Z, min(3, len(Z))):
            theta = theta + z * rng.randint(-2, 2)
        out.append(triple_to_skeletal(P, R, theta))
    return out


def _ideal_crossed_modules(P: PreLeibnizAlgebra):
    """Inclusions of coordinate ideals I -> P with actions by restriction."""
    a, d = P.pi.coeffs, P.dim
    for k in range(1, d):
        for S in itertools.combinations(range(d), k):
            S = list(S)
            comp = [i for i in range(d) if i not in S]
            if any(_any_nonzero(a[r][np.ix_(S, range(d), comp)]) or _any_nonzero(a[r][np.ix_(range(d), S, comp)])
                   for r in range(2)):
                continue
            A = PreLeibnizAlgebra(ColoredCochain(a[:, S][:, :, S][:, :, :, S].copy()))
            incl = np.eye(d, dtype=np.int64)[:, S]
            yield CrossedModule(A, P, incl, a[:, :, S][:, :, :, S].copy(), a[:, S][:, :, :, S].copy())


def _any_nonzero(arr) -> bool:
    return any(v != 0 for v in arr.reshape(-1))


def crossed_module_samples(count: int, seed: int = 0) -> list[CrossedModule]:
    """Zero, the identity crossed module of P2, d = 0 with an abelian A, and ideal inclusions."""
    rng = random.Random(seed)
    P = p2()
    z = np.zeros
    out = [
        CrossedModule(PreLeibnizAlgebra.zero(1), PreLeibnizAlgebra.zero(1), z((1, 1), dtype=np.int64),
                      z((2, 1, 1, 1), dtype=np.int64), z((2, 1, 1, 1), dtype=np.int64)),
        CrossedModule(P, P, np.eye(2, dtype=np.int64), P.pi.coeffs, P.pi.coeffs),
    ]
    R = PreLeibnizRep.adjoint(P)
    out.append(CrossedModule(PreLeibnizAlgebra.zero(2), P, z((2, 2), dtype=np.int64), R.piL, R.piR))
    while len(out) < count:
        Q = random_pre_leibniz(rng)
        options = [CrossedModule(Q, Q, np.eye(Q.dim, dtype=np.int64), Q.pi.coeffs, Q.pi.coeffs)]
        options += list(_ideal_crossed_modules(Q))
        out.append(rng.choice(options))
    return out


def strict_samples(count: int, seed: int = 0) -> list[TwoTermPreLeibniz]:
    """Images of :func:`crossed_module_samples`; the second is the identity complex of P2."""
    return [crossed_to_strict(c) for c in crossed_module_samples(count, seed)]


__all__ = [
    "p2", "leibniz2", "p2_semidirect", "random_pre_leibniz", "pre_leibniz_samples",
    "skeletal_samples", "crossed_module_samples", "strict_samples",
]
