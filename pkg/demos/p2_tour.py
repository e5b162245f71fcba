"""Walk through the 2-dimensional fixture: identities, total bracket, cohomology, deformations."""

from preleibniz import (PreLeibnizRep, TruncatedDeformation, check_leibniz, check_order_n, check_pre_leibniz,
                        cohomology_dims, extend, obstruction, totalize_algebra)
from preleibniz.fixtures import p2

P = p2()
print(check_pre_leibniz(P).summary())
print("e1 < e1 =", P.left[0, 0].tolist(), " e1 > e1 =", P.right[0, 0].tolist())

L = totalize_algebra(P)
print(check_leibniz(L).summary())
print("[e1, e1] =", L.tensor[0, 0].tolist())

ad = PreLeibnizRep.adjoint(P)
print("dim H^1..H^3 (adjoint):", cohomology_dims(P, ad, 3))

D = TruncatedDeformation.scaling(P, 1)
while D.order < 5:
    assert obstruction(D).is_zero()
    D = D.extended(extend(D))
    print(f"extended to order {D.order}:", "valid" if check_order_n(D) else "invalid")
