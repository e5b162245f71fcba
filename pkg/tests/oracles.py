"""Slow reference implementations written straight from the defining formulas.

They loop over basis inputs one coefficient at a time and share no code with
the tensor-contraction kernels except the box maps and shuffle enumeration,
which are tested on their own.
"""

import itertools
from fractions import Fraction

import numpy as np

from preleibniz.cochain import ColoredCochain, PlainCochain, eval_colored
from preleibniz.combinat import r_map, s_map, shuffles


def plain_eval(f: PlainCochain, args):
    return [Fraction(v) for v in f.coeffs[tuple(a - 1 for a in args)]]


def _apply_linear(vec, evaluate):
    """sum_k vec[k] * evaluate(k + 1), for evaluate returning codomain vectors."""
    acc = None
    for k, c in enumerate(vec):
        if c == 0:
            continue
        term = [c * v for v in evaluate(k + 1)]
        acc = term if acc is None else [a + b for a, b in zip(acc, term)]
    return acc


def circ_oracle(f: PlainCochain, g: PlainCochain, i: int) -> PlainCochain:
    m, n, d = f.arity, g.arity, f.domain_dim
    k = m + n - 1
    out = np.full((d,) * k + (f.codomain_dim,), Fraction(0), dtype=object)
    for xs in itertools.product(range(1, d + 1), repeat=k):
        total = [Fraction(0)] * f.codomain_dim
        for s in shuffles(i - 1, n - 1):
            seq = [xs[s(t) - 1] for t in range(1, i + n - 1)] + [xs[i + n - 2]]
            inner = plain_eval(g, seq[i - 1:])
            val = _apply_linear(inner, lambda y: plain_eval(f, seq[:i - 1] + [y] + list(xs[i + n - 1:])))
            if val is not None:
                total = [a + s.sign * b for a, b in zip(total, val)]
        out[tuple(x - 1 for x in xs)] = total
    return PlainCochain(out)


def diamond_oracle(f: ColoredCochain, g: ColoredCochain, i: int) -> ColoredCochain:
    m, n, d = f.arity, g.arity, f.domain_dim
    k = m + n - 1
    out = np.full((k,) + (d,) * k + (f.codomain_dim,), Fraction(0), dtype=object)
    for r in range(1, k + 1):
        for xs in itertools.product(range(1, d + 1), repeat=k):
            total = [Fraction(0)] * f.codomain_dim
            for s in shuffles(i - 1, n - 1):
                seq = [xs[s(t) - 1] for t in range(1, i + n - 1)] + [xs[i + n - 2]]
                inner = eval_colored(g, s_map(m, i, n, s, r), seq[i - 1:])
                outer = r_map(m, i, n, s, r)
                val = _apply_linear(
                    inner, lambda y: eval_colored(f, outer, seq[:i - 1] + [y] + list(xs[i + n - 1:])))
                if val is not None:
                    total = [a + s.sign * b for a, b in zip(total, val)]
            out[(r - 1,) + tuple(x - 1 for x in xs)] = total
    return ColoredCochain(out)


def bracket_oracle(f, g, compose):
    m, n = f.arity, g.arity
    acc = None
    for i in range(1, m + 1):
        term = compose(f, g, i) * (-1) ** ((i - 1) * (n - 1))
        acc = term if acc is None else acc + term
    for i in range(1, n + 1):
        term = compose(g, f, i) * (-((-1) ** ((m - 1) * (n - 1))) * (-1) ** ((i - 1) * (m - 1)))
        acc = acc + term
    return acc


def double_lift_oracle(f: ColoredCochain) -> PlainCochain:
    """Inputs 1..d are the first copy of a, d+1..2d the second."""
    n, d = f.arity, f.domain_dim
    out = np.full((2 * d,) * n + (2 * d,), Fraction(0), dtype=object)
    for xs in itertools.product(range(2 * d), repeat=n):
        second = [p for p, x in enumerate(xs) if x >= d]
        base = tuple(x % d for x in xs)
        if not second:
            vec = sum((f.coeffs[(r,) + base] for r in range(n)), start=np.zeros(d, dtype=object))
            out[xs][:d] = [Fraction(v) for v in vec]
        elif len(second) == 1:
            out[xs][d:] = [Fraction(v) for v in f.coeffs[(second[0],) + base]]
    return PlainCochain(out)


def pre_leibniz_residuals(left, right):
    """The three defining identities, one (d,d,d,d) residual each, by explicit loops."""
    d = left.shape[0]
    tot = left + right

    def prod(t, a, b):
        return [sum(Fraction(a[p]) * b[q] * t[p, q, k] for p in range(d) for q in range(d)) for k in range(d)]

    e = [[Fraction(int(j == i)) for j in range(d)] for i in range(d)]
    res = np.full((3, d, d, d, d), Fraction(0), dtype=object)
    for x, y, z in itertools.product(range(d), repeat=3):
        X, Y, Z = e[x], e[y], e[z]
        lhs = prod(left, X, prod(tot, Y, Z))
        rhs = [a + b for a, b in zip(prod(left, prod(left, X, Y), Z), prod(right, Y, prod(left, X, Z)))]
        res[0, x, y, z] = [a - b for a, b in zip(lhs, rhs)]
        lhs = prod(right, X, prod(left, Y, Z))
        rhs = [a + b for a, b in zip(prod(left, prod(right, X, Y), Z), prod(left, Y, prod(tot, X, Z)))]
        res[1, x, y, z] = [a - b for a, b in zip(lhs, rhs)]
        lhs = prod(right, X, prod(right, Y, Z))
        rhs = [a + b for a, b in zip(prod(right, prod(tot, X, Y), Z), prod(right, Y, prod(right, X, Z)))]
        res[2, x, y, z] = [a - b for a, b in zip(lhs, rhs)]
    return res


# --- representation identities with one module argument, by dispatch on slot types


def _tagged_prod(tables, op, X, Y):
    (s1, v1), (s2, v2) = X, Y
    out_space = "a" if s1 == s2 == "a" else "m"
    if s1 == s2 == "m":
        return out_space, [Fraction(0)] * tables["e"]
    t = tables[op, s1, s2]
    n_out = t.shape[2]
    return out_space, [sum(Fraction(v1[p]) * v2[q] * t[p, q, k] for p in range(len(v1)) for q in range(len(v2)))
                       for k in range(n_out)]


def _plus(X, Y):
    return X[0], [a + b for a, b in zip(X[1], Y[1])]


def _minus(X, Y):
    return X[0], [a - b for a, b in zip(X[1], Y[1])]


def _typed_basis(d, e, slot):
    """Basis triples with the module element in position ``slot``."""
    spaces = ["m" if p == slot else "a" for p in range(3)]
    dims = [e if s == "m" else d for s in spaces]
    for idx in itertools.product(*(range(n) for n in dims)):
        yield idx, [(s, [Fraction(int(j == i)) for j in range(n)]) for s, i, n in zip(spaces, idx, dims)]


def pre_leibniz_rep_violations(P, R):
    """Enumerate the nine identities: three pre-Leibniz identities times three module slots."""
    tables = {"e": R.module_dim,
              ("<", "a", "a"): P.left, ("<", "a", "m"): R.leftL, ("<", "m", "a"): R.leftR,
              (">", "a", "a"): P.right, (">", "a", "m"): R.rightL, (">", "m", "a"): R.rightR}
    L = lambda X, Y: _tagged_prod(tables, "<", X, Y)
    G = lambda X, Y: _tagged_prod(tables, ">", X, Y)
    S = lambda X, Y: _plus(L(X, Y), G(X, Y))
    identities = [
        lambda x, y, z: _minus(L(x, S(y, z)), _plus(L(L(x, y), z), G(y, L(x, z)))),
        lambda x, y, z: _minus(G(x, L(y, z)), _plus(L(G(x, y), z), L(y, S(x, z)))),
        lambda x, y, z: _minus(G(x, G(y, z)), _plus(G(S(x, y), z), G(y, G(x, z)))),
    ]
    bad = []
    for slot in range(3):
        for idx, (x, y, z) in _typed_basis(P.dim, R.module_dim, slot):
            for k, ident in enumerate(identities):
                if any(ident(x, y, z)[1]):
                    bad.append((k, slot, idx))
    return bad


def leibniz_rep_violations(L, R):
    tables = {"e": R.module_dim, ("b", "a", "a"): L.tensor, ("b", "a", "m"): R.rhoL, ("b", "m", "a"): R.rhoR}
    B = lambda X, Y: _tagged_prod(tables, "b", X, Y)
    bad = []
    for slot in range(3):
        for idx, (x, y, z) in _typed_basis(L.dim, R.module_dim, slot):
            if any(_minus(B(x, B(y, z)), _plus(B(B(x, y), z), B(y, B(x, z))))[1]):
                bad.append((slot, idx))
    return bad


def relative_rb_violations(Tm, L, R):
    """Pairs (u, v) of module basis vectors with [Tu,Tv] != T(rhoR(u,Tv) + rhoL(Tu,v))."""
    Tm = np.asarray(Tm, dtype=object)
    d, e = Tm.shape
    br, rl, rr = L.tensor, R.rhoL, R.rhoR
    bad = []
    for u, v in itertools.product(range(e), repeat=2):
        Tu, Tv = Tm[:, u], Tm[:, v]
        lhs = [sum(Tu[p] * Tv[q] * br[p, q, k] for p in range(d) for q in range(d)) for k in range(d)]
        inner = [sum(Tv[q] * rr[u, q, w] for q in range(d)) + sum(Tu[p] * rl[p, v, w] for p in range(d))
                 for w in range(e)]
        rhs = [sum(Tm[k, w] * inner[w] for w in range(e)) for k in range(d)]
        if lhs != rhs:
            bad.append((u + 1, v + 1))
    return bad


def delta_lp_oracle(L, R, f: PlainCochain) -> PlainCochain:
    """The Loday-Pirashvili coboundary evaluated input tuple by input tuple."""
    n, d, e = f.arity, L.dim, R.module_dim
    br, rl, rr, F = L.tensor, R.rhoL, R.rhoR, f.coeffs
    out = np.full((d,) * (n + 1) + (e,), Fraction(0), dtype=object)
    for xs in itertools.product(range(d), repeat=n + 1):
        acc = [Fraction(0)] * e
        for i in range(n):
            rest = xs[:i] + xs[i + 1:]
            for w in range(e):
                for k in range(e):
                    acc[k] += (-1) ** i * F[rest + (w,)] * rl[xs[i], w, k]
        for w in range(e):
            for k in range(e):
                acc[k] += (-1) ** (n + 1) * F[xs[:n] + (w,)] * rr[w, xs[n], k]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                for p in range(d):
                    c = br[xs[i], xs[j], p]
                    if c == 0:
                        continue
                    args = xs[:i] + xs[i + 1:j] + (p,) + xs[j + 1:]
                    for k in range(e):
                        acc[k] += (-1) ** (i + 1) * c * F[args + (k,)]
        out[xs] = acc
    return PlainCochain(out)
