"""Inner product, additive duals, parity-check matrices and weight enumerators."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .algebra import MixedVector, quaternary_row_reduce, z4_echelon
from .code import (
    CodeType,
    StandardFormDecomposition,
    Z2Z4Code,
    _check_cap,
    codeword_array,
    standard_form,
)
from .exceptions import ConsistencyError, ShapeError, ValidationError
from .graymap import chi, chi_array, chi_inverse_array, lee_weight_array, xi

ORACLE_CAP = 2**22
_CHUNK = 2**16


def inner_product(u: MixedVector, v: MixedVector) -> int:
    """Standard inner product 2*sum(x_i x'_i) + sum(y_j y'_j) in Z4."""
    if u.shape != v.shape:
        raise ShapeError(f"shape mismatch: {u.shape} vs {v.shape}")
    s = 2 * sum(a * b for a, b in zip(u.binary, v.binary))
    s += sum(a * b for a, b in zip(u.quaternary, v.quaternary))
    return s % 4


def inner_product_matrix(a, b, alpha: int) -> np.ndarray:
    """All pairwise inner products ``a J b^T mod 4`` with ``J = diag(2 I_alpha, I_beta)``."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    weights = np.ones(a.shape[-1], dtype=np.int64)
    weights[:alpha] = 2
    return ((a * weights) @ b.T) % 4


def quaternary_inner_product(u, v) -> int:
    if len(u) != len(v):
        raise ShapeError(f"length mismatch {len(u)} vs {len(v)}")
    return sum(int(a) * int(b) for a, b in zip(u, v)) % 4


def lift_inner_product_identity_check(u: MixedVector, v) -> bool:
    """Whether <chi(u), v>_4 equals <u, xi(v)> (it always should)."""
    if len(v) != u.alpha + u.beta:
        raise ShapeError(f"quaternary vector of length {len(v)}, expected {u.alpha + u.beta}")
    return quaternary_inner_product(chi(u), v) == inner_product(u, xi(v, u.alpha))


def dual_type(t: CodeType) -> CodeType:
    return CodeType(
        t.alpha,
        t.beta,
        t.alpha + t.gamma - 2 * t.kappa,
        t.beta - t.gamma - t.delta + t.kappa,
        t.alpha - t.kappa,
    )


def parity_check_matrix(sf: StandardFormDecomposition) -> np.ndarray:
    """Generator matrix of the dual of the canonical code, in canonical coordinates.

    Row blocks (any may be empty)::

        [ T_b^t  I_{a-k} | 0      0      2 S_b^t            ]
        [ 0      0       | 0      2I     2 R^t              ]
        [ T_2^t  0       | I      T_1^t  -(S_q + R T_1)^t   ]
    """
    t = sf.code_type
    a, b, k, g, d = t.alpha, t.beta, t.kappa, t.gamma, t.delta
    ky = b - (g - k) - d
    z = np.zeros
    i64 = dict(dtype=np.int64)
    tail = (-(sf.S_q + sf.R @ sf.T_1)).T % 4
    block1 = np.hstack([sf.T_b.T, np.eye(a - k, **i64), z((a - k, ky + g - k), **i64), (2 * sf.S_b.T) % 4])
    block2 = np.hstack([z((g - k, a + ky), **i64), 2 * np.eye(g - k, **i64), (2 * sf.R.T) % 4])
    block3 = np.hstack([sf.T_2.T, z((ky, a - k), **i64), np.eye(ky, **i64), sf.T_1.T, tail])
    return np.vstack([block1, block2, block3]).astype(np.int64)


def dual_canonical_matrix(sf: StandardFormDecomposition) -> np.ndarray:
    """The dual's own canonical matrix: ``parity_check_matrix`` with its blocks reordered.

    X columns become ``[I_{a-k}, T_b^t]`` and Y columns ``[delta, gamma-kappa, beta+kappa-gamma-delta]``.
    """
    t = sf.code_type
    a, b, k, g, d = t.alpha, t.beta, t.kappa, t.gamma, t.delta
    ky = b - (g - k) - d
    h = parity_check_matrix(sf)
    cols = list(range(k, a)) + list(range(k)) \
        + [a + ky + (g - k) + j for j in range(d)] + [a + ky + j for j in range(g - k)] + [a + j for j in range(ky)]
    return h[:, cols]


def _to_original(h: np.ndarray, x_perm, y_perm, alpha: int) -> np.ndarray:
    out = np.empty_like(h)
    out[:, list(x_perm)] = h[:, :alpha]
    out[:, [alpha + j for j in y_perm]] = h[:, alpha:]
    return out


def dual_from_standard_form(c: Z2Z4Code) -> Z2Z4Code:
    """Dual code from the block formula applied to the canonical form, in ``c``'s coordinates."""
    sf = standard_form(c)
    h = _to_original(parity_check_matrix(sf), sf.x_permutation, sf.y_permutation, c.alpha)
    return Z2Z4Code.from_array(c.alpha, c.beta, h)


def quaternary_dual_matrix(m) -> np.ndarray:
    """Generator matrix of the Euclidean dual of the Z4-linear code spanned by ``m``."""
    m = np.asarray(m, dtype=np.int64)
    width = m.shape[1]
    red = quaternary_row_reduce(m)
    g, d = red.order2_count, red.order4_count
    k = width - g - d
    gm = red.matrix
    T = gm[:g, :k] // 2
    S = gm[g:, :k]
    R = gm[g:, k:k + g]
    i64 = dict(dtype=np.int64)
    top = np.hstack([np.zeros((g, k), **i64), 2 * np.eye(g, **i64), (2 * R.T) % 4])
    bottom = np.hstack([np.eye(k, **i64), T.T, (-(S + R @ T)).T % 4])
    h = np.vstack([top, bottom])
    out = np.empty_like(h)
    out[:, list(red.permutation)] = h
    return out


def dual_via_lift(c: Z2Z4Code) -> Z2Z4Code:
    """Dual as chi^-1 of the quaternary dual of xi^-1(C)."""
    a = c.alpha
    lifted = np.vstack([
        np.hstack([2 * np.eye(a, dtype=np.int64), np.zeros((a, c.beta), dtype=np.int64)]),
        c.generator_array,  # iota is the identity on digits
    ])
    h = quaternary_dual_matrix(lifted)
    if np.any(h[:, :a] % 2):
        raise AssertionError("quaternary dual of xi^-1(C) has an odd entry on the binary coordinates")
    return Z2Z4Code.from_array(a, c.beta, chi_inverse_array(h, a))


def _ambient_chunk(start: int, stop: int, alpha: int, beta: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    radices = [2] * alpha + [4] * beta
    out = np.zeros((len(idx), alpha + beta), dtype=np.int64)
    for j in range(alpha + beta - 1, -1, -1):
        out[:, j] = idx % radices[j]
        idx //= radices[j]
    return out


def dual_brute_force(c: Z2Z4Code, cap: int | None = None) -> Z2Z4Code:
    """Dual by scanning the whole ambient space for vectors orthogonal to every generator."""
    a, b = c.alpha, c.beta
    total = 2**a * 4**b
    _check_cap(total, ORACLE_CAP if cap is None else cap, "brute-force dual")
    gens = c.generator_array
    basis = np.zeros((0, a + b), dtype=np.int64)
    found = 0
    for start in range(0, total, _CHUNK):
        chunk = _ambient_chunk(start, min(total, start + _CHUNK), a, b)
        if len(gens):
            chunk = chunk[~inner_product_matrix(chunk, gens, a).any(axis=1)]
        found += len(chunk)
        ech = z4_echelon(chi_array(np.vstack([basis, chunk]), a))
        basis = chi_inverse_array(np.vstack([ech.two_rows, ech.unit_rows]), a)
    out = Z2Z4Code.from_array(a, b, basis)
    if out.cardinality != found:
        raise AssertionError(f"orthogonal vectors ({found}) do not form the spanned group ({out.cardinality})")
    return out


_METHODS = {
    "standard": dual_from_standard_form,
    "lift": dual_via_lift,
    "brute": dual_brute_force,
}


def dual(c: Z2Z4Code, method: str = "standard") -> Z2Z4Code:
    try:
        fn = _METHODS[method]
    except KeyError:
        raise ValidationError(f"unknown dual method {method!r}; choose from {sorted(_METHODS)}") from None
    return fn(c)


@dataclass(frozen=True)
class WeightEnumerator:
    """Counts A_0..A_n of codewords by Lee weight (Hamming weight of the Gray image)."""

    length: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(v) for v in self.coefficients)
        if len(coeffs) != self.length + 1:
            raise ValidationError(f"{len(coeffs)} coefficients for length {self.length}")
        if any(v < 0 for v in coeffs):
            raise ValidationError("weight enumerator coefficients must be non-negative")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def size(self) -> int:
        return sum(self.coefficients)

    def alternating_sum(self) -> int:
        return sum((-1) ** i * v for i, v in enumerate(self.coefficients))

    def __getitem__(self, i):
        return self.coefficients[i]

    def __str__(self):
        return " + ".join(f"{v}*X^{self.length - i}*Y^{i}" for i, v in enumerate(self.coefficients) if v)


def weight_enumerator(c: Z2Z4Code, cap: int | None = None) -> WeightEnumerator:
    n = c.length
    weights = lee_weight_array(codeword_array(c, cap), c.alpha)
    return WeightEnumerator(n, tuple(np.bincount(weights, minlength=n + 1).tolist()))


def macwilliams_transform(w: WeightEnumerator, code_size: int) -> WeightEnumerator:
    """Coefficients of (1/|C|) W(X+Y, X-Y), in exact integer arithmetic."""
    n = w.length
    if w.size != code_size:
        raise ConsistencyError(f"coefficients sum to {w.size}, code size given as {code_size}")
    if code_size <= 0 or (2**n) % code_size:
        raise ConsistencyError(f"code size {code_size} does not divide 2^{n}")
    out = []
    for j in range(n + 1):
        total = 0
        for i, a in enumerate(w.coefficients):
            if a:
                total += a * sum((-1) ** k * comb(i, k) * comb(n - i, j - k) for k in range(min(i, j) + 1))
        q, r = divmod(total, code_size)
        if r or q < 0:
            raise ConsistencyError(f"transformed coefficient {j} is {total}/{code_size}, not a non-negative integer")
        out.append(q)
    return WeightEnumerator(n, tuple(out))
