"""Self-dual Z2Z4-additive codes: predicates, structure checks and three families."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import (
    CodeType,
    Z2Z4Code,
    codeword_array,
    contains,
    direct_sum,
    order_two_subcode,
    puncture_X,
    puncture_Y,
)
from .duality import dual, inner_product_matrix, weight_enumerator
from .exceptions import ValidationError
from .algebra import gf2_rank


class PreconditionError(ValidationError):
    """A self-dual-only operation was called on a code that is not self-dual."""


def is_self_orthogonal(c: Z2Z4Code) -> bool:
    g = c.generator_array
    return not inner_product_matrix(g, g, c.alpha).any()


def is_self_dual(c: Z2Z4Code) -> bool:
    # |C|^2 = 2^(alpha + 2 beta) together with C in its dual forces equality
    return is_self_orthogonal(c) and c.cardinality**2 == 2 ** (c.alpha + 2 * c.beta)


def self_dual_type_check(t: CodeType) -> bool:
    """Whether ``t`` has the shape (2k, b; b + k - 2d, d; k) every self-dual code has."""
    return t.alpha == 2 * t.kappa and t.gamma == t.beta + t.kappa - 2 * t.delta


def _require_self_dual(c: Z2Z4Code, what: str):
    if not is_self_dual(c):
        raise PreconditionError(f"{what} needs a self-dual code; type {c.type} is not")


# -- classical self-duality of the punctured codes ----------------------------


def binary_self_orthogonal(c: Z2Z4Code) -> bool:
    """Mod-2 dot products of the X parts of the generators all vanish."""
    x = c.generator_array[:, : c.alpha]
    return not ((x @ x.T) % 2).any()


def binary_self_dual(c: Z2Z4Code) -> bool:
    x = c.generator_array[:, : c.alpha]
    return binary_self_orthogonal(c) and 2 * gf2_rank(x) == c.alpha


def quaternary_self_orthogonal(c: Z2Z4Code) -> bool:
    """Z4 dot products of the Y parts of the generators all vanish."""
    y = c.generator_array[:, c.alpha:]
    return not ((y @ y.T) % 4).any()


def quaternary_self_dual(c: Z2Z4Code) -> bool:
    cy = puncture_Y(c)
    return quaternary_self_orthogonal(c) and cy.cardinality**2 == 4**c.beta


def cx_self_dual(c: Z2Z4Code) -> bool:
    return binary_self_dual(puncture_X(c))


# -- structure of self-dual codes --------------------------------------------


def odd_coordinate_count(y) -> int:
    """Number of order-four (odd) entries of a quaternary vector."""
    return sum(1 for v in y if int(v) % 2)


def parity_law_check(c: Z2Z4Code, cap: int | None = None) -> bool:
    """Every codeword (x|y) has p(y) = 2 w(x) mod 4, and (0|2...2) is a codeword."""
    _require_self_dual(c, "parity_law_check")
    words = codeword_array(c, cap)
    w = words[:, : c.alpha].sum(axis=1)
    p = (words[:, c.alpha:] % 2).sum(axis=1)
    if np.any((p - 2 * w) % 4):
        return False
    return contains(c, (0,) * c.alpha + (2,) * c.beta)


def order_two_x_self_dual(c: Z2Z4Code) -> bool:
    """(C_b)_X is a binary self-dual code of length 2 kappa."""
    _require_self_dual(c, "order_two_x_self_dual")
    return binary_self_dual(puncture_X(order_two_subcode(c)))


def replication_exponent(c: Z2Z4Code, cap: int | None = None) -> int:
    """r with each element of C_Y appearing 2^r times in C.

    Counted directly as the number of codewords (x|0), then checked against
    |C| / |C_Y| and the bounds 0 <= r <= kappa, |C_Y| >= 2^beta.
    """
    _require_self_dual(c, "replication_exponent")
    words = codeword_array(c, cap)
    zero_y = int((~words[:, c.alpha:].any(axis=1)).sum())
    r = zero_y.bit_length() - 1
    if zero_y != 2**r:
        raise AssertionError(f"{zero_y} codewords with y = 0 is not a power of two")
    cy = puncture_Y(c).cardinality
    if cy * 2**r != c.cardinality:
        raise AssertionError(f"|C_Y| * 2^r = {cy} * 2^{r} differs from |C| = {c.cardinality}")
    if not 0 <= r <= c.type.kappa or cy < 2**c.beta:
        raise AssertionError(f"r = {r}, |C_Y| = {cy} outside the bounds for type {c.type}")
    return r


def structure_violations(c: Z2Z4Code, cap: int | None = None) -> list[str]:
    """Which of the general self-dual facts fail for ``c`` (empty when all hold)."""
    _require_self_dual(c, "structure_violations")
    t = c.type
    out = []
    if not self_dual_type_check(t):
        out.append(f"type {t} is not of the form (2k,b;b+k-2d,d;k)")
    if c.cardinality != 2 ** (t.kappa + t.beta):
        out.append(f"|C| = {c.cardinality}, expected 2^(kappa+beta)")
    if order_two_subcode(c).cardinality != 2 ** (t.kappa + t.beta - t.delta):
        out.append("|C_b| differs from 2^(kappa+beta-delta)")
    if not parity_law_check(c, cap):
        out.append("parity law p(y) = 2 w(x) mod 4 or (0|2) membership fails")
    if not order_two_x_self_dual(c):
        out.append("(C_b)_X is not binary self-dual")
    try:
        replication_exponent(c, cap)
    except AssertionError as e:
        out.append(f"replication exponent: {e}")
    if not punctured_duals_contained(c):
        out.append("C_X^perp + C_Y^perp is not inside C^perp")
    return out


def punctured_duals_contained(c: Z2Z4Code) -> bool:
    """C_X^perp (+) C_Y^perp is a subcode of C^perp."""
    inner = direct_sum(dual(puncture_X(c)), dual(puncture_Y(c)))
    g = inner.generator_array
    return not inner_product_matrix(g, c.generator_array, c.alpha).any()


# -- antipodality and separability --------------------------------------------


def all_ones_two(alpha: int, beta: int) -> tuple[int, ...]:
    """(1...1 | 2...2), the Gray preimage of the all-ones binary vector."""
    return (1,) * alpha + (2,) * beta


def is_antipodal(c: Z2Z4Code) -> bool:
    return contains(c, all_ones_two(c.alpha, c.beta))


def antipodal_by_enumerator(c: Z2Z4Code, cap: int | None = None) -> bool:
    """Antipodality of a self-dual code read off sum (-1)^i A_i, which is |C| or 0."""
    _require_self_dual(c, "antipodal_by_enumerator")
    s = weight_enumerator(c, cap).alternating_sum()
    if s == c.cardinality:
        return True
    if s == 0:
        return False
    raise AssertionError(f"alternating weight sum {s} is neither 0 nor |C| = {c.cardinality}")


def separability_chain(c: Z2Z4Code) -> dict[str, bool]:
    cx, cy = puncture_X(c), puncture_Y(c)
    t = c.type
    return {
        "cx_self_orthogonal": binary_self_orthogonal(cx),
        "cx_self_dual": binary_self_dual(cx),
        "cx_size": cx.cardinality == 2**t.kappa,
        "cy_self_orthogonal": quaternary_self_orthogonal(cy),
        "cy_self_dual": quaternary_self_dual(cy),
        "cy_size": cy.cardinality == 2**t.beta,
        "separable": c.cardinality == cx.cardinality * cy.cardinality,
    }


def is_separable(c: Z2Z4Code) -> bool:
    """C = C_X (+) C_Y. For self-dual codes the seven equivalent forms are cross-checked."""
    sep = c.cardinality == puncture_X(c).cardinality * puncture_Y(c).cardinality
    if is_self_dual(c):
        chain = separability_chain(c)
        if len(set(chain.values())) != 1:
            raise AssertionError(f"separability equivalences disagree: {chain}")
    return sep


def minimality_bounds_hold(c: Z2Z4Code) -> bool:
    """Self-dual, antipodal and C_X not self-dual together force alpha >= 4 and beta >= 4."""
    if not (is_self_dual(c) and is_antipodal(c) and not cx_self_dual(c)):
        return True
    return c.alpha >= 4 and c.beta >= 4


@dataclass(frozen=True)
class SelfDualReport:
    is_self_orthogonal: bool
    is_self_dual: bool
    is_antipodal: bool
    is_separable: bool
    cx_self_dual: bool
    replication_exponent_r: int | None = None

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def self_dual_report(c: Z2Z4Code, cap: int | None = None) -> SelfDualReport:
    sd = is_self_dual(c)
    anti = is_antipodal(c)
    if sd and antipodal_by_enumerator(c, cap) != anti:
        raise AssertionError("(1|2) membership and the alternating weight sum disagree")
    return SelfDualReport(
        is_self_orthogonal=is_self_orthogonal(c),
        is_self_dual=sd,
        is_antipodal=anti,
        is_separable=is_separable(c),
        cx_self_dual=cx_self_dual(c),
        replication_exponent_r=replication_exponent(c, cap) if sd else None,
    )


# -- families ------------------------------------------------------------------


def _check_params(kappa, delta, beta, strict=False):
    for name, v in (("kappa", kappa), ("delta", delta), ("beta", beta)):
        if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or v < 0:
            raise ValidationError(f"{name} must be a non-negative integer, got {v!r}")
    if strict and not delta < kappa:
        raise ValidationError(f"need delta < kappa, got delta={delta}, kappa={kappa}")
    if not delta <= kappa:
        raise ValidationError(f"need delta <= kappa, got delta={delta}, kappa={kappa}")
    if beta < 2 * delta:
        raise ValidationError(f"need beta >= 2*delta, got beta={beta}, delta={delta}")


def _assemble(a, b, rows):
    g = np.array(rows, dtype=np.int64) if rows else np.zeros((0, a + b), dtype=np.int64)
    return Z2Z4Code.from_array(a, b, g)


def _family_ab(kappa, delta, beta, twist):
    _check_params(kappa, delta, beta)
    k, d, b = kappa, delta, beta
    m = b - 2 * d
    a = 2 * k
    rows = []
    for i in range(d):
        r = np.zeros(a + b, dtype=np.int64)
        r[i] = r[k + i] = 1
        r[a + i] = 2
        rows.append(r)
    for j in range(k - d):
        r = np.zeros(a + b, dtype=np.int64)
        r[d + j] = r[k + d + j] = 1
        rows.append(r)
    for j in range(m):
        r = np.zeros(a + b, dtype=np.int64)
        r[a + d + j] = 2
        if twist:
            r[a:a + d] = 2
        rows.append(r)
    for i in range(d):
        r = np.zeros(a + b, dtype=np.int64)
        r[k + i] = 1
        r[a + i] = 1
        r[a + d + m + i] = 1
        if twist:
            r[a + d:a + d + m] = 1
        rows.append(r)
    return _assemble(a, b, rows)


def build_family_a(kappa: int, delta: int, beta: int) -> Z2Z4Code:
    """Self-dual code of type (2k, b; b+k-2d, d; k), for any delta <= kappa and beta >= 2 delta."""
    return _family_ab(kappa, delta, beta, twist=False)


def build_family_b(kappa: int, delta: int, beta: int) -> Z2Z4Code:
    """Family a with an all-2 block and an all-1 block u added.

    Self-duality hinges on beta - 2 delta mod 4; the code is returned either way.
    """
    return _family_ab(kappa, delta, beta, twist=True)


def build_family_c(kappa: int, delta: int, beta: int) -> Z2Z4Code:
    """Antipodal family with C_X not self-dual (when self-dual at all). Needs delta < kappa."""
    _check_params(kappa, delta, beta, strict=True)
    k, d, b = kappa, delta, beta
    m = b - 2 * d
    a = 2 * k
    e, f = d, k + d  # the two single X columns
    rows = []
    for i in range(d):
        r = np.zeros(a + b, dtype=np.int64)
        r[i] = r[k + i] = 1
        r[a + i] = 2
        rows.append(r)
    r = np.zeros(a + b, dtype=np.int64)
    r[e] = r[f] = 1
    r[a:a + d] = 2
    rows.append(r)
    for j in range(k - d - 1):
        r = np.zeros(a + b, dtype=np.int64)
        r[d + 1 + j] = r[k + d + 1 + j] = 1
        rows.append(r)
    for j in range(m):
        r = np.zeros(a + b, dtype=np.int64)
        r[a:a + d] = 2
        r[a + d + j] = 2
        rows.append(r)
    for i in range(d):
        r = np.zeros(a + b, dtype=np.int64)
        r[k + i] = 1
        r[f] = 1
        r[a + i] = 1
        r[a + d:a + d + m] = 1
        r[a + d + m + i] = 1
        rows.append(r)
    return _assemble(a, b, rows)


FAMILIES = {"a": build_family_a, "b": build_family_b, "c": build_family_c}


def build_family(name: str, kappa: int, delta: int, beta: int) -> Z2Z4Code:
    try:
        fn = FAMILIES[name]
    except KeyError:
        raise ValidationError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    return fn(kappa, delta, beta)
