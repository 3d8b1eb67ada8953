"""Exact-arithmetic toolkit for norm-trace curves, their automorphism
groups, and multi-point algebraic-geometric codes, plus the general
separated-polynomial curve classification machinery."""

from .gf import (FieldCtx, FieldElement, build_field, field_from_dict,
                 frobenius, norm_rel, subfield_elements, trace_rel)
from .curve import (Divisor, NormTraceCurve, P_INFINITY, Place, build_curve)
from .rrspace import (FunctionElem, MonomialTerm, PoleError, basis_multipoint,
                      basis_one_point, evaluate, extended_evaluate,
                      local_parameter_at_infinity, semigroup_gaps,
                      semigroup_nongaps)
from .codes import (AGCode, BudgetExceeded, build_code, designed_distance,
                    dimension_closed_form, extended_one_point_code,
                    min_distance_exhaustive, monomial_equivalence_check,
                    witness_codeword, witness_function)
from .autgroup import (CodeAut, CurveAut, apply_place, code_action, compose,
                       enumerate_group, inverse, is_code_automorphism,
                       short_orbits)
from .sepcurve import (AffineAut, ClassificationResult, HBound,
                       SeparatedCurveSpec, brute_force_stabilizer_search,
                       classify, classify_monomial, condiz_check,
                       h_bound_from_roots, linearization_gcd,
                       norm_trace_spec, spec_from_dict, to_standard_qm,
                       validate)

__version__ = "0.1.0"
