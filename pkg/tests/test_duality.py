import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from corpus import load, random_corpus
from z2z4.algebra import MixedVector
from z2z4.code import CodeType, check_canonical_layout, codes_equal, new_code, standard_form
from z2z4.duality import (
    WeightEnumerator,
    dual,
    dual_brute_force,
    dual_canonical_matrix,
    dual_from_standard_form,
    dual_type,
    dual_via_lift,
    inner_product,
    inner_product_matrix,
    lift_inner_product_identity_check,
    macwilliams_transform,
    parity_check_matrix,
    quaternary_dual_matrix,
    quaternary_inner_product,
    weight_enumerator,
)
from z2z4.exceptions import CapExceededError, ConsistencyError, ShapeError, ValidationError
from z2z4.graymap import chi

T34_STD_DUAL = [[1, 0, 1, 1, 0, 0, 3], [1, 0, 1, 0, 1, 0, 3], [0, 0, 0, 0, 0, 1, 3]]


def V(x, y):
    return MixedVector(tuple(x), tuple(y))


def test_inner_product_examples():
    v, w = V([1], [3]), V([1], [2])
    assert inner_product(v, w) == 0
    assert inner_product(v, MixedVector.zero(1, 1)) == 0
    assert quaternary_inner_product(chi(v), chi(w)) == 2
    with pytest.raises(ShapeError):
        inner_product(v, V([1, 0], [1]))


def test_lift_identity():
    assert lift_inner_product_identity_check(V([1], [3]), (1, 2))
    assert lift_inner_product_identity_check(MixedVector.zero(2, 1), (3, 1, 2))


@settings(max_examples=500, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=3, max_size=3),
       st.lists(st.integers(0, 3), min_size=4, max_size=4),
       st.lists(st.integers(0, 3), min_size=7, max_size=7))
def test_lift_identity_random(x, y, v):
    assert lift_inner_product_identity_check(V(x, y), v)


def test_dual_t13_std():
    c = load("t13_std")
    for method in ("standard", "lift", "brute"):
        d = dual(c, method)
        assert d.cardinality == 4
        assert codes_equal(d, new_code(1, 3, [[1, 1, 3, 1]]))
    assert dual_from_standard_form(c).generator_array.tolist() == [[1, 1, 3, 1]]
    assert dual_type(c.type).as_tuple() == (1, 3, 0, 1, 0)


def test_dual_t34_std():
    c = load("t34_std")
    h = parity_check_matrix(standard_form(c))
    assert h.tolist() == T34_STD_DUAL
    assert codes_equal(dual(c), new_code(3, 4, T34_STD_DUAL))
    assert dual(c).type.as_tuple() == (3, 4, 0, 3, 0)
    assert dual_type(CodeType(3, 4, 3, 1, 3)).as_tuple() == (3, 4, 0, 3, 0)


def test_lift_example_52():
    # quaternary dual of xi^-1(t13_std) is spanned by (2,1,3,1) (plus 2 on the binary coordinate)
    h = quaternary_dual_matrix([[2, 0, 0, 0], [1, 2, 0, 0], [0, 1, 1, 0], [0, 3, 0, 1]])
    assert codes_equal(new_code(0, 4, h), new_code(0, 4, [[2, 1, 3, 1]]))


def test_trivial_duals():
    full = new_code(2, 1, np.eye(3, dtype=int))
    assert dual(full).cardinality == 1
    zero = new_code(2, 1)
    for method in ("standard", "lift", "brute"):
        assert dual(zero, method).cardinality == 16
    ex61 = load("sd_split")
    assert codes_equal(dual_brute_force(ex61), ex61)
    with pytest.raises(ValidationError):
        dual(zero, "magic")


def test_brute_force_cap():
    with pytest.raises(CapExceededError):
        dual_brute_force(new_code(2, 6), cap=100)


def test_dual_properties_on_corpus():
    for c in random_corpus()[:120]:
        d = dual(c)
        assert c.cardinality * d.cardinality == 2 ** (c.alpha + 2 * c.beta)
        assert d.type == dual_type(c.type)
        assert not inner_product_matrix(d.generator_array, c.generator_array, c.alpha).any()
        assert codes_equal(dual(d), c)
        assert codes_equal(dual_via_lift(c), d)
        sf = standard_form(c)
        assert check_canonical_layout(dual_canonical_matrix(sf), dual_type(c.type)) == []


def test_dual_type_involution():
    for a in range(4):
        for b in range(4):
            for g in range(a + b + 1):
                for d in range(b + 1):
                    for k in range(min(a, g) + 1):
                        try:
                            t = CodeType(a, b, g, d, k)
                        except ValidationError:
                            continue
                        assert dual_type(dual_type(t)) == t


def test_weight_enumerator_examples():
    w = weight_enumerator(load("sd_split"))
    assert w.coefficients == (1, 0, 2, 0, 1)
    assert weight_enumerator(new_code(1, 1)).coefficients == (1, 0, 0, 0)
    assert macwilliams_transform(w, 4) == w
    zero = weight_enumerator(new_code(1, 2))
    full = weight_enumerator(new_code(1, 2, np.eye(3, dtype=int)))
    assert macwilliams_transform(zero, 1) == full
    assert str(w) == "1*X^4*Y^0 + 2*X^2*Y^2 + 1*X^0*Y^4"


def test_macwilliams_sizes():
    for c in random_corpus()[:80]:
        w = weight_enumerator(c)
        assert w.size == c.cardinality and w[0] == 1
        wd = macwilliams_transform(w, c.cardinality)
        assert w.size * wd.size == 2**w.length


def test_macwilliams_rejects_bad_input():
    with pytest.raises(ConsistencyError):
        macwilliams_transform(WeightEnumerator(2, (1, 1, 0)), 4)
    with pytest.raises(ConsistencyError):
        macwilliams_transform(WeightEnumerator(2, (1, 0, 2)), 3)
    with pytest.raises(ConsistencyError):
        macwilliams_transform(WeightEnumerator(3, (1, 3, 0, 0)), 4)  # B_1 = 6/4
    with pytest.raises(ValidationError):
        WeightEnumerator(2, (1, 0))
