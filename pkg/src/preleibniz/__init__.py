"""Exact structure-constant computations for Leibniz and pre-Leibniz algebras."""

from .algebra import (CheckReport, Failure, InternalConsistencyError, LeibnizAlgebra, LeibnizRep,
                      PreLeibnizAlgebra, PreLeibnizRep, check_leibniz, check_leibniz_rep,
                      check_morphism, check_pre_leibniz, check_pre_leibniz_rep, check_relative_rb,
                      check_right_leibniz, from_pre_lie, identity_rb_data, induced_pre_leibniz,
                      opposite, semidirect, total_rep, totalize_algebra)
from .cochain import (ColoredCochain, PlainCochain, balavoine_bracket, circ_i, diamond_i,
                      double_lift, pl_bracket, totalize_cochain)
from .cohomology import (coboundary_matrix, cocycle_basis, cohomology_dims, delta_lp, delta_pl,
                         delta_pl_bracket, lp_coboundary_matrix, lp_cohomology_dims, phi_chain_check)
from .combinat import ALL, Shuffle, r_map, s_map, shuffles
from .deformation import (ClassStatus, TruncatedDeformation, TruncatedEquivalence, check_equivalence,
                          check_order_n, extend, infinitesimal_class, mc_in_twisted_dgla, obstruction)
from .exactla import (DimensionError, RatMatrix, Rational, format_rational, mat_kernel_basis,
                      mat_mul, mat_rank, parse_rational, rref, solve_linear)
from .homotopy2 import (CrossedModule, TwoTermLeibniz, TwoTermPreLeibniz, check_crossed_module,
                        check_rb_module, check_rb_two_term, check_two_term_leibniz,
                        check_two_term_pre, crossed_to_strict, identity_complex,
                        induced_pre_from_rb, rb_pair_to_two_term, skeletal_to_triple,
                        strict_to_crossed, sum_two_term, triple_to_skeletal)

__version__ = "0.1.0"
