"""A first-order deformation that cannot be extended, and one that can."""

from preleibniz import (ColoredCochain, PreLeibnizAlgebra, PreLeibnizRep, TruncatedDeformation, check_order_n,
                        cocycle_basis, extend, obstruction)
from preleibniz.fixtures import p2

# On the abelian base every 2-cochain is a cocycle, but the differential is zero,
# so a nonzero obstruction is never exact.
base = PreLeibnizAlgebra.zero(2)
pi1 = ColoredCochain.from_entries(2, 2, 2, [(1, 1, 1, 1, 1), (2, 1, 1, 2, 1)])
D = TruncatedDeformation(base, [pi1])
print("order 1 valid:", bool(check_order_n(D)))
print("obstruction nonzero:", not obstruction(D).is_zero(), "| extension:", extend(D))

P = p2()
z = cocycle_basis(P, PreLeibnizRep.adjoint(P), 2)[0]
D = TruncatedDeformation(P, [z])
term = extend(D)
print("P2 with a cocycle direction extends:", term is not None and bool(check_order_n(D.extended(term))))
