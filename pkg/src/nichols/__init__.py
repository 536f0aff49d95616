"""Exact Nichols algebras of braided vector spaces and their Weyl groupoids."""

from .cyclotomic import Cyclotomic, cyc_add, cyc_inv, cyc_mul, cyclotomic_polynomial, embed_order
from .laurent import LaurentPoly, RationalFunction
from .linalg import exact_rank_and_kernel, generic_rank
from .combinatorics import (enumerate_shuffles, enumerate_sym, gauss_generating_function,
                            inversions, matsumoto_lift, q_binomial, q_factorial, q_int,
                            reduced_word)
from .braiding import (DiagonalBraiding, MatrixBraiding, TensorBlock, braid_action,
                       degree_blocks, validate_yang_baxter)
from .groups import PermutationGroup, build_yd_braiding, build_yd_sum
from .nichols import (FreeElement, HilbertSeries, NicholsEngine, SymmetrizerResult,
                      factor_hilbert, graded_dimension, hilbert_series, is_primitive,
                      is_zero_in_nichols, relations, shuffle_coproduct, skew_derivation,
                      symmetrizer)
from .roots import (CartanGraph, QDiagram, RootSet, cartan_matrix, crystallographic_check,
                    q_diagram, real_roots, reflect, validate_axioms, weyl_groupoid)
from .rank2 import (CSequence, enumerate_a_plus, eta_product_check, f_sequence_roots,
                    insertion_move, match_weyl_groupoid, triangulation_from_sequence)
from .serialize import parse_braiding
from .fixtures import fixture

__version__ = "0.1.0"
