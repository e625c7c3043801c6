"""Immunity (weak p-degree) of Boolean functions over prime fields.

The immunity of f is the minimum degree of a nonzero multilinear
polynomial over F_p vanishing on the zero set of f — equivalently the
minimum degree in the ideal generated by f inside
F_p[x1..xn]/(xi^2 = xi).
"""

from .errors import (ArityMismatch, BadRange, BadShape, CheckFailed,
                     ConstantFunction, FieldMismatch, FpImmunityError,
                     NotCoprime, NotDivisor, NotPrime, NotRootOfUnity,
                     NotSquare, SearchBudgetExceeded, TooLarge, ZeroElement,
                     ZeroFunction)
from .gf import (ExtFieldCtx, PrimeFieldCtx, element_order, factorize,
                 find_root_of_unity, first_irreducible, first_primitive_element,
                 is_prime, make_ext_field, make_prime_field,
                 poly_is_irreducible)
from .hilbert import (PointSet, annihilator_dim, binom_sum,
                      brute_force_min_distance, hilbert_function,
                      smolensky_bound)
from .immunity import (ImmunityReport, ModBoundsReport, brute_force_weak_mod_m,
                       immunity, min_annihilator, two_sided_immunity,
                       verify_mod_bounds, weak_mod_m_degree)
from .linalg import (MatrixGF, det, is_strong_nondegenerate,
                     is_weak_nondegenerate, is_weak_nondegenerate_direct,
                     matrix, nullspace_basis, pascal_matrix, rank, tensor)
from .residue import (BinaryFieldMap, ResidueReport, build_binary_field,
                      make_basis, residue_character, univariate_weight_degree,
                      verify_residue_immunity, with_random_basis)
from .ring import (BooleanFunction, MultilinearPoly, format_truth_table,
                   from_truth_table, ideal_member, indicator_poly,
                   mod_indicator, monomial_key, monomials_of_degree,
                   monomials_up_to, not_mod_upper_witness, parse_truth_table,
                   popcount, tightness_witness, y_transform)
from .symmetric import (RestrictionBoundReport, SymmetricFn,
                        coeffs_from_values, lucas_binomial,
                        min_symmetric_annihilator_degree, psi, psi_matrix,
                        reflex_dual_exists, restrict_sym,
                        restriction_bound_check, symmetric_immunity,
                        values_from_coeffs)

__version__ = "0.1.0"
