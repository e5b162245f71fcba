"""Skeletal structures from 3-cocycles, and the identity complex as a crossed module."""

from preleibniz import (PreLeibnizRep, check_crossed_module, check_two_term_leibniz, check_two_term_pre,
                        cocycle_basis, identity_complex, skeletal_to_triple, strict_to_crossed, sum_two_term,
                        triple_to_skeletal)
from preleibniz.fixtures import p2

P = p2()
ad = PreLeibnizRep.adjoint(P)
Z3 = cocycle_basis(P, ad, 3)
print(f"{len(Z3)} independent 3-cocycles")

theta = Z3[0] - Z3[-1]
X = triple_to_skeletal(P, ad, theta)
print("skeletal:", check_two_term_pre(X).summary(), "| skeletal", X.is_skeletal(), "strict", X.is_strict())
assert skeletal_to_triple(X)[2] == theta
print("sum:", check_two_term_leibniz(sum_two_term(X)).summary())

S = identity_complex(P)
C = strict_to_crossed(S)
print("identity complex:", check_two_term_pre(S).summary(), "| strict", S.is_strict(), "skeletal", S.is_skeletal())
print("crossed module:", check_crossed_module(C).summary(), "| A equals B:", C.A == C.B)
