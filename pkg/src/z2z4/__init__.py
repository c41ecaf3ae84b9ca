"""Exact arithmetic for Z2Z4-additive codes.

Codes are subgroups of Z2^alpha x Z4^beta given by generator rows. The
package computes their type, canonical generator matrix, additive dual,
Gray image and weight enumerators, and tests and builds self-dual codes.
"""

__version__ = "0.1.0"

from .algebra import MixedMatrix, MixedVector, add_vectors, quaternary_row_reduce, scalar_multiple, z4_order
from .code import (
    CodeType,
    StandardFormDecomposition,
    Z2Z4Code,
    codes_equal,
    codeword_array,
    compute_type,
    contains,
    direct_sum,
    enumerate_codewords,
    new_code,
    order_two_subcode,
    permute_code,
    puncture_X,
    puncture_Y,
    standard_form,
)
from .duality import (
    WeightEnumerator,
    dual,
    dual_brute_force,
    dual_from_standard_form,
    dual_type,
    dual_via_lift,
    inner_product,
    macwilliams_transform,
    parity_check_matrix,
    weight_enumerator,
)
from .exceptions import CapExceededError, ConsistencyError, ParseError, ShapeError, ValidationError
from .graymap import chi, gray_extend, gray_inverse, iota, lee_distance, lee_weight, xi
from .selfdual import (
    SelfDualReport,
    build_family_a,
    build_family_b,
    build_family_c,
    is_antipodal,
    is_self_dual,
    is_self_orthogonal,
    is_separable,
    self_dual_report,
    self_dual_type_check,
)
