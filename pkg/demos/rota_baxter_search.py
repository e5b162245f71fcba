"""Exhaustive search for Rota-Baxter pairs with entries in {-1, 0, 1} on the 2-dim Leibniz fixture."""

import itertools

import numpy as np

from preleibniz import (LeibnizRep, check_leibniz, check_pre_leibniz, check_rb_module, check_relative_rb,
                        check_two_term_pre, induced_pre_from_rb, induced_pre_leibniz, rb_pair_to_two_term,
                        totalize_algebra)
from preleibniz.fixtures import leibniz2

L = leibniz2()
ad = LeibnizRep.adjoint(L)
mats = [np.array(v, dtype=np.int64).reshape(2, 2) for v in itertools.product((-1, 0, 1), repeat=4)]

operators = [R for R in mats if check_relative_rb(R, L, ad)]
print(f"{len(operators)} Rota-Baxter operators:", [R.tolist() for R in operators])
for R in operators:
    P = induced_pre_leibniz(R, L, ad)
    assert check_pre_leibniz(P) and check_leibniz(totalize_algebra(P))
# every grid operator has image in span(e2), which is central, so the induced products vanish
print("induced products all zero:", all(induced_pre_leibniz(R, L, ad).pi.is_zero() for R in operators))

# off the grid: a first row (2, 0) forces T e2 = (0, 1)
R = np.array([[2, 0], [5, 1]], dtype=np.int64)
P = induced_pre_leibniz(R, L, ad)
print("T =", R.tolist(), "is Rota-Baxter:", bool(check_relative_rb(R, L, ad)),
      "| e1 < e1 =", P.left[0, 0].tolist(), "e1 > e1 =", P.right[0, 0].tolist())

pairs = [(R, RM) for R in operators for RM in mats if check_rb_module(L, ad, R, RM)]
for R, RM in pairs:
    Y, Tpair = rb_pair_to_two_term(L, ad, R, RM)
    assert check_two_term_pre(induced_pre_from_rb(Y, Tpair))
print(f"{len(pairs)} pairs, each inducing a 2-term pre-Leibniz structure")
