"""Z2Z4-additive codes: construction, type, enumeration and canonical generator matrix."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .algebra import MixedMatrix, MixedVector, Z4Echelon, gf2_rank, gf2_rref, z4_echelon
from .exceptions import CapExceededError, ShapeError, ValidationError
from .graymap import chi_array, chi_inverse_array

ENUMERATION_CAP = 2**24


@dataclass(frozen=True)
class CodeType:
    """The parameters (alpha, beta; gamma, delta; kappa) of a Z2Z4-additive code.

    The code is isomorphic to Z2^gamma x Z4^delta as a group and kappa is the
    dimension of the binary projection of its order-two subcode.
    """

    alpha: int
    beta: int
    gamma: int
    delta: int
    kappa: int

    def __post_init__(self):
        a, b, g, d, k = self.alpha, self.beta, self.gamma, self.delta, self.kappa
        if min(a, b, g, d, k) < 0:
            raise ValidationError(f"negative entry in type {self}")
        if k > min(a, g):
            raise ValidationError(f"kappa={k} exceeds min(alpha, gamma) in type {self}")
        # order-two generators outside X plus order-four generators need room in Y
        if g - k + d > b:
            raise ValidationError(f"gamma - kappa + delta exceeds beta in type {self}")

    @property
    def length(self) -> int:
        return self.alpha + 2 * self.beta

    @property
    def cardinality(self) -> int:
        return 2 ** (self.gamma + 2 * self.delta)

    @property
    def order_two_count(self) -> int:
        return 2 ** (self.gamma + self.delta)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.delta, self.kappa)

    def __str__(self):
        return f"({self.alpha},{self.beta};{self.gamma},{self.delta};{self.kappa})"


def _row_to_flat(row, alpha, beta, index):
    if isinstance(row, MixedVector):
        if row.shape != (alpha, beta):
            raise ShapeError(f"row {index}: shape {row.shape}, expected {(alpha, beta)}")
        return list(row.flat())
    row = list(row)
    if len(row) == 2 and all(isinstance(p, (list, tuple, np.ndarray)) for p in row):
        x, y = (list(p) for p in row)
        if len(x) != alpha or len(y) != beta:
            raise ShapeError(f"row {index}: block lengths ({len(x)}, {len(y)}), expected {(alpha, beta)}")
        row = x + y
    if len(row) != alpha + beta:
        raise ShapeError(f"row {index}: {len(row)} entries, expected alpha + beta = {alpha + beta}")
    for j, v in enumerate(row):
        modulus = 2 if j < alpha else 4
        if isinstance(v, (bool, np.bool_)) or not isinstance(v, (int, np.integer)):
            raise ValidationError(f"row {index}, column {j + 1}: {v!r} is not an integer")
        if not 0 <= v < modulus:
            raise ValidationError(f"row {index}, column {j + 1}: entry {v} not in Z{modulus}")
    return [int(v) for v in row]


def _validated_array(rows: np.ndarray, alpha: int, beta: int) -> np.ndarray:
    if rows.shape[1] != alpha + beta:
        raise ShapeError(f"rows have {rows.shape[1]} entries, expected alpha + beta = {alpha + beta}")
    a = np.array(rows, dtype=np.int64)
    limit = np.array([2] * alpha + [4] * beta, dtype=np.int64)
    bad = np.argwhere((a < 0) | (a >= limit))
    if len(bad):
        i, j = bad[0]
        raise ValidationError(f"row {i + 1}, column {j + 1}: entry {a[i, j]} not in Z{limit[j]}")
    return a


class Z2Z4Code:
    """The subgroup of Z2^alpha x Z4^beta generated by a list of rows.

    Rows may be :class:`MixedVector` instances, flat sequences of length
    ``alpha + beta`` or ``(x, y)`` pairs. The generator list is kept as given;
    a reduced basis is computed on first use.
    """

    def __init__(self, alpha: int, beta: int, rows: Iterable = ()):
        if not isinstance(alpha, (int, np.integer)) or not isinstance(beta, (int, np.integer)):
            raise ValidationError("alpha and beta must be integers")
        if alpha < 0 or beta < 0:
            raise ValidationError(f"alpha and beta must be non-negative, got ({alpha}, {beta})")
        self.alpha = int(alpha)
        self.beta = int(beta)
        if isinstance(rows, np.ndarray) and rows.ndim == 2 and rows.dtype.kind in "iu":
            self._array = _validated_array(rows, self.alpha, self.beta)
        else:
            flat = [_row_to_flat(r, self.alpha, self.beta, i + 1) for i, r in enumerate(rows)]
            self._array = np.array(flat, dtype=np.int64).reshape(len(flat), self.alpha + self.beta)
        self._array.flags.writeable = False

    @classmethod
    def from_array(cls, alpha: int, beta: int, array) -> Z2Z4Code:
        array = np.asarray(array, dtype=np.int64)
        if array.ndim != 2:
            array = array.reshape(-1, alpha + beta) if alpha + beta else np.zeros((0, 0), dtype=np.int64)
        return cls(alpha, beta, array)

    @property
    def width(self) -> int:
        return self.alpha + self.beta

    @property
    def length(self) -> int:
        """Length of the binary Gray image."""
        return self.alpha + 2 * self.beta

    @property
    def generator_array(self) -> np.ndarray:
        return self._array

    @property
    def generators(self) -> MixedMatrix:
        return MixedMatrix.from_array(self.alpha, self.beta, self._array)

    @functools.cached_property
    def basis(self) -> Z4Echelon:
        """Reduced basis of the chi-image, order-two rows and order-four rows separated."""
        return z4_echelon(chi_array(self._array, self.alpha))

    @functools.cached_property
    def type(self) -> CodeType:
        b = self.basis
        kappa = gf2_rank(b.two_rows[:, : self.alpha] // 2) if self.alpha else 0
        return CodeType(self.alpha, self.beta, len(b.two_pivots), len(b.unit_pivots), kappa)

    @property
    def cardinality(self) -> int:
        return self.type.cardinality

    def reduced_array(self) -> np.ndarray:
        """Independent generators: gamma order-two rows, then delta order-four rows."""
        b = self.basis
        return chi_inverse_array(np.vstack([b.two_rows, b.unit_rows]), self.alpha)

    @property
    def reduced_generators(self) -> MixedMatrix:
        return MixedMatrix.from_array(self.alpha, self.beta, self.reduced_array())

    def reduced(self) -> Z2Z4Code:
        """The same code, generated by its independent generators."""
        return Z2Z4Code.from_array(self.alpha, self.beta, self.reduced_array())

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __len__(self):
        return self.cardinality

    def __repr__(self):
        return f"Z2Z4Code(alpha={self.alpha}, beta={self.beta}, type={self.type}, rows={len(self._array)})"


def new_code(alpha: int, beta: int, rows: Iterable = ()) -> Z2Z4Code:
    return Z2Z4Code(alpha, beta, rows)


def compute_type(c: Z2Z4Code) -> CodeType:
    return c.type


def _check_cap(count: int, cap: int | None, what="enumeration"):
    cap = ENUMERATION_CAP if cap is None else cap
    if count > cap:
        raise CapExceededError(count, cap, what)


def _lex_sort(a: np.ndarray) -> np.ndarray:
    if a.shape[1] == 0:
        return a
    return a[np.lexsort(a.T[::-1])]


def codeword_array(c: Z2Z4Code, cap: int | None = None) -> np.ndarray:
    """All codewords as a lexicographically sorted ``(|C|, alpha + beta)`` array."""
    t = c.type
    _check_cap(t.cardinality, cap)
    b = c.basis
    words = np.zeros((1, c.width), dtype=np.int64)
    for row in b.two_rows:
        words = np.concatenate([words, (words + row) % 4])
    for row in b.unit_rows:
        words = np.concatenate([(words + k * row) % 4 for k in range(4)])
    return _lex_sort(chi_inverse_array(words, c.alpha))


def enumerate_codewords(c: Z2Z4Code, cap: int | None = None) -> list[MixedVector]:
    return [MixedVector.from_flat(c.alpha, w) for w in codeword_array(c, cap).tolist()]


def _as_flat_array(c: Z2Z4Code, vectors) -> np.ndarray:
    if isinstance(vectors, MixedVector):
        vectors = [vectors]
    if isinstance(vectors, np.ndarray):
        a = np.asarray(vectors, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1)
        if a.shape[1] != c.width:
            raise ShapeError(f"vectors of width {a.shape[1]}, code has alpha + beta = {c.width}")
        return a
    flat = [_row_to_flat(v, c.alpha, c.beta, i + 1) for i, v in enumerate(vectors)]
    return np.array(flat, dtype=np.int64).reshape(len(flat), c.width)


def contains_array(c: Z2Z4Code, vectors) -> np.ndarray:
    """Membership of each row of ``vectors``, solved against the reduced basis."""
    t = chi_array(_as_flat_array(c, vectors), c.alpha) % 4
    b = c.basis
    for row, p in zip(b.unit_rows, b.unit_pivots):
        t = (t - np.outer(t[:, p], row)) % 4
    ok = np.ones(len(t), dtype=bool)
    for row, q in zip(b.two_rows, b.two_pivots):
        ok &= t[:, q] % 2 == 0
        t = (t - np.outer(t[:, q] // 2, row)) % 4
    return ok & ~t.any(axis=1)


def contains(c: Z2Z4Code, v) -> bool:
    return bool(contains_array(c, [v])[0])


def codes_equal(a: Z2Z4Code, b: Z2Z4Code) -> bool:
    """Equality of codeword sets, by mutual inclusion of generators."""
    if (a.alpha, a.beta) != (b.alpha, b.beta):
        raise ShapeError(f"cannot compare codes in Z2^{a.alpha} x Z4^{a.beta} and Z2^{b.alpha} x Z4^{b.beta}")
    return bool(contains_array(b, a.generator_array).all() and contains_array(a, b.generator_array).all())


def order_two_subcode(c: Z2Z4Code) -> Z2Z4Code:
    b = c.basis
    rows = np.vstack([b.two_rows, (2 * b.unit_rows) % 4])
    return Z2Z4Code.from_array(c.alpha, c.beta, chi_inverse_array(rows, c.alpha))


def puncture_X(c: Z2Z4Code) -> Z2Z4Code:
    """Binary code of the first alpha coordinates, as a code with beta = 0."""
    return Z2Z4Code.from_array(c.alpha, 0, c.reduced_array()[:, : c.alpha])


def puncture_Y(c: Z2Z4Code) -> Z2Z4Code:
    """Quaternary code of the last beta coordinates, as a code with alpha = 0."""
    return Z2Z4Code.from_array(0, c.beta, c.reduced_array()[:, c.alpha:])


def permute_code(c: Z2Z4Code, x_permutation: Sequence[int], y_permutation: Sequence[int]) -> Z2Z4Code:
    """New coordinate i of each block is old coordinate ``permutation[i]``."""
    if sorted(x_permutation) != list(range(c.alpha)) or sorted(y_permutation) != list(range(c.beta)):
        raise ValidationError("permutations must rearrange the X and Y blocks separately")
    cols = list(x_permutation) + [c.alpha + j for j in y_permutation]
    return Z2Z4Code.from_array(c.alpha, c.beta, c.generator_array[:, cols])


def direct_sum(cx: Z2Z4Code, cy: Z2Z4Code) -> Z2Z4Code:
    """The code C_X (+) C_Y from a binary code (beta = 0) and a quaternary code (alpha = 0)."""
    if cx.beta or cy.alpha:
        raise ValidationError("direct_sum expects a binary code and a quaternary code")
    a, b = cx.alpha, cy.beta
    gx, gy = cx.generator_array, cy.generator_array
    top = np.hstack([gx, np.zeros((len(gx), b), dtype=np.int64)])
    bottom = np.hstack([np.zeros((len(gy), a), dtype=np.int64), gy])
    return Z2Z4Code.from_array(a, b, np.vstack([top, bottom]))


@dataclass(frozen=True)
class StandardFormDecomposition:
    """Canonical generator matrix and its named blocks.

    ``canonical`` is laid out as::

        [ I_kappa  T_b | 2T_2  0           0       ]
        [ 0        0   | 2T_1  2I_{g-k}    0       ]
        [ 0        S_b | S_q   R           I_delta ]

    and generates ``permute_code(original, x_permutation, y_permutation)``.
    """

    canonical: MixedMatrix
    code_type: CodeType
    T_b: np.ndarray
    T_1: np.ndarray
    T_2: np.ndarray
    R: np.ndarray
    S_b: np.ndarray
    S_q: np.ndarray
    x_permutation: tuple[int, ...]
    y_permutation: tuple[int, ...]

    def canonical_array(self) -> np.ndarray:
        return self.canonical.to_array()

    def code(self) -> Z2Z4Code:
        return Z2Z4Code.from_array(self.canonical.alpha, self.canonical.beta, self.canonical_array())


def _blocks(g: np.ndarray, t: CodeType):
    a, k, gm, d = t.alpha, t.kappa, t.gamma, t.delta
    ky = t.beta - (gm - k) - d
    top, mid, bot = g[:k], g[k:gm], g[gm:]
    return dict(
        T_b=top[:, k:a],
        T_2=top[:, a:a + ky] // 2,
        T_1=mid[:, a:a + ky] // 2,
        S_b=bot[:, k:a],
        S_q=bot[:, a:a + ky],
        R=bot[:, a + ky:a + ky + gm - k],
    )


def check_canonical_layout(g, t: CodeType) -> list[str]:
    """Compare ``g`` with the canonical block layout; return the mismatches found."""
    g = np.asarray(g, dtype=np.int64)
    a, b, k, gm, d = t.alpha, t.beta, t.kappa, t.gamma, t.delta
    ky = b - (gm - k) - d
    problems = []
    if g.shape != (gm + d, a + b):
        return [f"shape {g.shape}, expected {(gm + d, a + b)}"]

    def want(name, block, expected):
        if block.shape != expected.shape or not np.array_equal(block % 4, expected % 4):
            problems.append(name)

    y0, y1, y2 = a, a + ky, a + ky + gm - k
    top, mid, bot = g[:k], g[k:gm], g[gm:]
    want("I_kappa", top[:, :k], np.eye(k, dtype=np.int64))
    want("top 0 (2I block)", top[:, y1:y2], np.zeros((k, gm - k), dtype=np.int64))
    want("top 0 (I_delta block)", top[:, y2:], np.zeros((k, d), dtype=np.int64))
    want("mid 0 (X)", mid[:, :a], np.zeros((gm - k, a), dtype=np.int64))
    want("2I_(gamma-kappa)", mid[:, y1:y2], 2 * np.eye(gm - k, dtype=np.int64))
    want("mid 0 (I_delta block)", mid[:, y2:], np.zeros((gm - k, d), dtype=np.int64))
    want("bottom 0 (X)", bot[:, :k], np.zeros((d, k), dtype=np.int64))
    want("I_delta", bot[:, y2:], np.eye(d, dtype=np.int64))
    if np.any(top[:, y0:y1] % 2) or np.any(mid[:, y0:y1] % 2):
        problems.append("2T_1/2T_2 not even")
    if np.any(g[:, :a] > 1) or np.any(bot[:, y1:y2] > 1):
        problems.append("binary block out of range")
    return problems


def standard_form(c: Z2Z4Code) -> StandardFormDecomposition:
    """Canonical generator matrix of a coordinate permutation of ``c``.

    Steps: Gauss-reduce the binary parts of the order-two generators to expose
    I_kappa; reduce the residual quaternary code on the remaining X columns
    (held fixed) and the Y columns; fold everything back into block form.
    """
    a, b = c.alpha, c.beta
    basis = c.basis
    units = basis.unit_rows.copy()

    bits, xpiv = gf2_rref(basis.two_rows // 2, columns=range(a))
    kappa = len(xpiv)
    top, rest = 2 * bits[:kappa], 2 * bits[kappa:]
    assert not rest[:, :a].any()
    for row, p in zip(top, xpiv):
        units = (units - np.outer(units[:, p] // 2, row)) % 4

    x_rest = [j for j in range(a) if j not in xpiv]
    cols = x_rest + list(range(a, a + b))
    minus = z4_echelon(np.vstack([rest, units])[:, cols], frozen=len(x_rest))

    def widen(rows):
        out = np.zeros((len(rows), a + b), dtype=np.int64)
        out[:, cols] = rows
        return out

    mid, bot = widen(minus.two_rows), widen(minus.unit_rows)
    assert not mid[:, :a].any()
    unit_cols = [cols[j] for j in minus.unit_pivots]
    two_cols = [cols[j] for j in minus.two_pivots]
    for row, p in zip(bot, unit_cols):
        top = (top - np.outer(top[:, p] // 2, 2 * row)) % 4
    for row, q in zip(mid, two_cols):
        top = (top - np.outer(top[:, q] // 2, row)) % 4

    x_perm = tuple(xpiv) + tuple(x_rest)
    y_perm = tuple(cols[j] - a for j in minus.free_columns) + tuple(q - a for q in two_cols) \
        + tuple(p - a for p in unit_cols)
    order = list(x_perm) + [a + j for j in y_perm]
    g = chi_inverse_array(np.vstack([top, mid, bot])[:, order], a)

    t = CodeType(a, b, len(top) + len(mid), len(bot), kappa)
    assert t == c.type
    return StandardFormDecomposition(
        canonical=MixedMatrix.from_array(a, b, g),
        code_type=t,
        x_permutation=x_perm,
        y_permutation=y_perm,
        **_blocks(g, t),
    )
