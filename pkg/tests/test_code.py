import numpy as np
import pytest

from corpus import load, random_corpus
from z2z4.algebra import MixedVector
from z2z4.code import (
    CodeType,
    Z2Z4Code,
    check_canonical_layout,
    codes_equal,
    codeword_array,
    compute_type,
    contains,
    contains_array,
    direct_sum,
    enumerate_codewords,
    new_code,
    order_two_subcode,
    permute_code,
    puncture_X,
    puncture_Y,
    standard_form,
)
from z2z4.exceptions import CapExceededError, ShapeError, ValidationError

EX31 = [[1, 2, 2, 2], [0, 1, 1, 0], [1, 1, 2, 3]]
EX31_ALT = [[1, 2, 2, 2], [0, 1, 1, 0], [0, 1, 0, 3]]
EX32 = [[1, 0, 0, 2, 2, 0, 0], [1, 1, 1, 2, 2, 2, 2], [1, 1, 0, 2, 2, 0, 0], [1, 1, 1, 1, 1, 1, 1]]


def vec(alpha, flat):
    return MixedVector.from_flat(alpha, flat)


def test_new_code_examples():
    c = new_code(1, 3, EX31)
    assert c.cardinality == 32
    assert len(codeword_array(c)) == 32
    z = new_code(2, 2, [])
    assert z.cardinality == 1
    with pytest.raises(ValidationError, match="entry 4"):
        new_code(1, 3, [[1, 4, 0, 0]])
    with pytest.raises(ValidationError):
        new_code(1, 3, [[2, 0, 0, 0]])
    with pytest.raises(ShapeError):
        new_code(1, 3, [[1, 0, 0]])


def test_accepts_mixed_vectors():
    c = new_code(2, 1, [vec(2, [1, 1, 0]), vec(2, [0, 0, 2])])
    assert codes_equal(c, load("sd_split"))


def test_compute_type_examples():
    assert compute_type(new_code(1, 3, EX31)).as_tuple() == (1, 3, 1, 2, 1)
    assert compute_type(new_code(3, 4, EX32)).as_tuple() == (3, 4, 3, 1, 3)
    assert compute_type(new_code(2, 2)).as_tuple() == (2, 2, 0, 0, 0)
    assert str(CodeType(1, 3, 1, 2, 1)) == "(1,3;1,2;1)"


def test_code_type_validation():
    with pytest.raises(ValidationError):
        CodeType(1, 3, 0, 2, 1)  # kappa > gamma
    with pytest.raises(ValidationError):
        CodeType(0, 2, 1, 2, 0)  # gamma - kappa + delta > beta


def test_enumerate_examples():
    words = enumerate_codewords(load("sd_split"))
    assert [str(w) for w in words] == ["(00|0)", "(00|2)", "(11|0)", "(11|2)"]
    assert [str(w) for w in enumerate_codewords(new_code(1, 2))] == ["(0|00)"]


def test_closure_example_31():
    c = new_code(1, 3, EX31)
    words = codeword_array(c)
    assert len({tuple(w) for w in words.tolist()}) == 32
    sums = (words[:, None, :] + words[None, :, :]).reshape(-1, 4)
    sums[:, 0] %= 2
    sums[:, 1:] %= 4
    assert contains_array(c, sums).all()


def test_contains():
    c = new_code(1, 3, EX31)
    words = {tuple(w) for w in codeword_array(c).tolist()}
    # (0|222) is not a codeword: only (1|222) is
    assert not contains(c, (0, 2, 2, 2))
    assert (0, 2, 2, 2) not in words
    assert contains(c, (1, 2, 2, 2))
    assert contains(c, vec(1, [0, 0, 0, 0]))
    assert not contains(new_code(2, 1), (0, 0, 1))
    assert vec(1, [0, 1, 1, 0]) in c


def test_contains_matches_enumeration():
    for c in random_corpus()[:60]:
        words = {tuple(w) for w in codeword_array(c).tolist()}
        rng = np.random.default_rng(c.alpha * 7 + c.beta)
        probe = np.hstack([rng.integers(0, 2, (40, c.alpha)), rng.integers(0, 4, (40, c.beta))])
        got = contains_array(c, probe)
        assert got.tolist() == [tuple(p) in words for p in probe.tolist()]


def test_order_two_subcode():
    cb = order_two_subcode(load("sd_twisted"))
    assert [str(w) for w in enumerate_codewords(cb)] == ["(00|00)", "(00|22)", "(11|02)", "(11|20)"]
    assert order_two_subcode(new_code(2, 2)).cardinality == 1


def test_punctures():
    c = load("sd_twisted")
    cy = puncture_Y(c)
    assert (cy.alpha, cy.beta, cy.cardinality) == (0, 2, 8)
    assert codes_equal(cy, new_code(0, 2, [[2, 0], [1, 1]]))
    assert puncture_X(new_code(2, 2)).cardinality == 1
    cb = order_two_subcode(new_code(3, 4, EX32))
    assert puncture_X(cb).type.gamma == 3


def test_standard_form_example_31():
    sf = standard_form(new_code(1, 3, EX31))
    assert sf.canonical_array().tolist() == [[1, 2, 0, 0], [0, 1, 1, 0], [0, 3, 0, 1]]
    assert sf.x_permutation == (0,) and sf.y_permutation == (0, 1, 2)
    assert check_canonical_layout(sf.canonical_array(), sf.code_type) == []


def test_standard_form_example_32():
    sf = standard_form(new_code(3, 4, EX32))
    assert sf.canonical_array().tolist() == [
        [1, 0, 0, 2, 2, 0, 0], [0, 1, 0, 0, 0, 0, 0], [0, 0, 1, 2, 2, 0, 0], [0, 0, 0, 1, 1, 1, 1]]
    assert sf.code_type.as_tuple() == (3, 4, 3, 1, 3)


def test_alternative_generators_agree():
    assert codes_equal(new_code(1, 3, EX31), new_code(1, 3, EX31_ALT))
    c = load("t34")
    assert codes_equal(c, c)
    with pytest.raises(ShapeError):
        codes_equal(load("sd_split"), load("sd_twisted"))


def test_standard_form_properties():
    for c in random_corpus():
        sf = standard_form(c)
        t = c.type
        g = sf.canonical_array()
        assert check_canonical_layout(g, t) == []
        assert codes_equal(permute_code(c, sf.x_permutation, sf.y_permutation), sf.code())
        again = standard_form(sf.code())
        assert again.x_permutation == tuple(range(c.alpha))
        assert again.y_permutation == tuple(range(c.beta))
        assert (again.canonical_array() == g).all()


def test_type_invariants():
    rng = np.random.default_rng(11)
    for c in random_corpus():
        t = c.type
        words = codeword_array(c)
        assert len(words) == 2 ** (t.gamma + 2 * t.delta)
        order_le2 = ~(words[:, c.alpha:] % 2).any(axis=1)
        assert order_le2.sum() == 2 ** (t.gamma + t.delta)
        assert order_two_subcode(c).cardinality == 2 ** (t.gamma + t.delta)
        assert t.kappa <= puncture_X(c).type.gamma <= min(t.alpha, t.kappa + t.delta)
        ty = puncture_Y(c).type
        assert ty.gamma <= t.gamma and ty.delta == t.delta
        g = c.generator_array
        if len(g):
            extra = (rng.integers(0, 4, (3, len(g))) @ g)
            extra[:, : c.alpha] %= 2
            extra[:, c.alpha:] %= 4
            bigger = Z2Z4Code.from_array(c.alpha, c.beta, np.vstack([g, extra]))
            assert bigger.type == t


def test_punctured_x_can_exceed_gamma():
    # order-four generators contribute to C_X too, so gamma_X <= gamma can fail
    c = new_code(1, 1, [[1, 1]])
    assert c.type.as_tuple() == (1, 1, 0, 1, 0)
    assert puncture_X(c).type.gamma == 1


def test_permute_and_direct_sum():
    c = new_code(2, 2, [[1, 0, 1, 2]])
    p = permute_code(c, [1, 0], [1, 0])
    assert p.generator_array.tolist() == [[0, 1, 2, 1]]
    with pytest.raises(ValidationError):
        permute_code(c, [0, 0], [0, 1])
    s = direct_sum(new_code(2, 0, [[1, 1]]), new_code(0, 1, [[2]]))
    assert codes_equal(s, load("sd_split"))
    with pytest.raises(ValidationError):
        direct_sum(c, c)


def test_cap():
    c = new_code(0, 12, np.eye(12, dtype=int))
    with pytest.raises(CapExceededError):
        codeword_array(c, cap=1000)
    assert len(codeword_array(new_code(0, 3, np.eye(3, dtype=int)), cap=64)) == 64


def test_degenerate_sizes():
    for a, b in [(0, 0), (0, 3), (3, 0)]:
        z = new_code(a, b)
        assert z.type.as_tuple() == (a, b, 0, 0, 0)
        full = new_code(a, b, np.eye(a + b, dtype=int))
        assert full.cardinality == 2**a * 4**b
        assert standard_form(full).code_type == full.type
