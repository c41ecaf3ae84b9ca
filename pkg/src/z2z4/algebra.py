"""Arithmetic in Z2^alpha x Z4^beta and row reduction over Z4.

Vectors are immutable tuples of small ints; matrices used by the reduction
kernels are plain ``numpy`` integer arrays. Z4 elements are ordinary ints
in ``{0, 1, 2, 3}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .exceptions import ShapeError, ValidationError

def z4_order(value: int) -> int:
    """Additive order of an element of Z4."""
    value %= 4
    if value == 0:
        return 1
    if value == 2:
        return 2
    return 4


def _as_digits(values, modulus, label):
    out = []
    for j, v in enumerate(values):
        if isinstance(v, (bool, np.bool_)) or not isinstance(v, (int, np.integer)):
            raise ValidationError(f"{label} coordinate {j + 1}: {v!r} is not an integer")
        if not 0 <= v < modulus:
            raise ValidationError(f"{label} coordinate {j + 1}: entry {v} not in Z{modulus}")
        out.append(int(v))
    return tuple(out)


@dataclass(frozen=True)
class MixedVector:
    """An element (x | y) of Z2^alpha x Z4^beta."""

    binary: tuple[int, ...] = ()
    quaternary: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "binary", _as_digits(self.binary, 2, "binary"))
        object.__setattr__(self, "quaternary", _as_digits(self.quaternary, 4, "quaternary"))

    @classmethod
    def zero(cls, alpha: int, beta: int) -> MixedVector:
        return cls((0,) * alpha, (0,) * beta)

    @classmethod
    def from_flat(cls, alpha: int, values: Sequence[int]) -> MixedVector:
        values = [int(v) for v in values]
        if len(values) < alpha:
            raise ShapeError(f"vector of length {len(values)} is shorter than alpha={alpha}")
        return cls(tuple(values[:alpha]), tuple(values[alpha:]))

    @property
    def alpha(self) -> int:
        return len(self.binary)

    @property
    def beta(self) -> int:
        return len(self.quaternary)

    @property
    def shape(self) -> tuple[int, int]:
        return self.alpha, self.beta

    def flat(self) -> tuple[int, ...]:
        return self.binary + self.quaternary

    def order(self) -> int:
        if any(y % 2 for y in self.quaternary):
            return 4
        if any(self.binary) or any(self.quaternary):
            return 2
        return 1

    def is_zero(self) -> bool:
        return not any(self.binary) and not any(self.quaternary)

    def __add__(self, other):
        if not isinstance(other, MixedVector):
            return NotImplemented
        return add_vectors(self, other)

    def __neg__(self):
        return MixedVector(self.binary, tuple((-y) % 4 for y in self.quaternary))

    def __sub__(self, other):
        if not isinstance(other, MixedVector):
            return NotImplemented
        return add_vectors(self, -other)

    def __rmul__(self, k):
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        return scalar_multiple(int(k), self)

    def __str__(self):
        x = "".join(map(str, self.binary))
        y = "".join(map(str, self.quaternary))
        return f"({x}|{y})"


def _check_same_shape(u: MixedVector, v: MixedVector):
    if u.shape != v.shape:
        raise ShapeError(f"shape mismatch: (alpha, beta) = {u.shape} vs {v.shape}")


def add_vectors(u: MixedVector, v: MixedVector) -> MixedVector:
    """Group operation of Z2^alpha x Z4^beta."""
    _check_same_shape(u, v)
    return MixedVector(
        tuple((a + b) % 2 for a, b in zip(u.binary, v.binary)),
        tuple((a + b) % 4 for a, b in zip(u.quaternary, v.quaternary)),
    )


def scalar_multiple(k: int, v: MixedVector) -> MixedVector:
    """The k-fold sum ``v + ... + v``; k may be any integer (negative means -|k| v)."""
    return MixedVector(
        tuple((k * a) % 2 for a in v.binary),
        tuple((k * b) % 4 for b in v.quaternary),
    )


@dataclass(frozen=True)
class MixedMatrix:
    """An ordered list of rows sharing one (alpha, beta) split."""

    alpha: int
    beta: int
    rows: tuple[MixedVector, ...] = ()

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise ValidationError(f"alpha and beta must be non-negative, got ({self.alpha}, {self.beta})")
        rows = tuple(self.rows)
        for i, row in enumerate(rows):
            if not isinstance(row, MixedVector):
                raise ValidationError(f"row {i + 1}: expected MixedVector, got {type(row).__name__}")
            if row.shape != (self.alpha, self.beta):
                raise ShapeError(f"row {i + 1}: shape {row.shape}, expected {(self.alpha, self.beta)}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_array(cls, alpha: int, beta: int, array) -> MixedMatrix:
        """Rows from an integer array whose first ``alpha`` columns are already bits."""
        array = np.asarray(array, dtype=np.int64)
        if array.ndim != 2:
            array = array.reshape(-1, alpha + beta) if alpha + beta else np.zeros((0, 0), dtype=np.int64)
        return cls(alpha, beta, tuple(MixedVector.from_flat(alpha, r) for r in array.tolist()))

    def to_array(self) -> np.ndarray:
        out = np.zeros((len(self.rows), self.alpha + self.beta), dtype=np.int64)
        for i, row in enumerate(self.rows):
            out[i] = row.flat()
        return out

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]


class Z4Reduction(NamedTuple):
    """Reduced generator matrix of a quaternary linear code.

    ``matrix`` has the block shape::

        [ F2  2T  2I_gamma  0       ]
        [ FS  S   R         I_delta ]

    where the first ``frozen`` columns (``F2``/``FS``) are the caller's frozen
    prefix. Column ``i`` of ``matrix`` is column ``permutation[i]`` of the input.
    """

    matrix: np.ndarray
    order4_count: int
    order2_count: int
    permutation: tuple[int, ...]


class Z4Echelon(NamedTuple):
    # reduced rows in the input's column order, grouped by pivot kind
    two_rows: np.ndarray
    two_pivots: tuple[int, ...]
    unit_rows: np.ndarray
    unit_pivots: tuple[int, ...]
    free_columns: tuple[int, ...]


def z4_echelon(m, frozen: int = 0) -> Z4Echelon:
    """Fully reduce the rows of ``m`` over Z4 without permuting columns.

    Pivots are searched from the rightmost column leftwards, unit pivots
    (1 or 3, scaled to 1) first, order-two pivots (2) only on what remains.
    Columns ``0..frozen-1`` never hold a pivot. Every pivot column is zero in
    all other rows, and unit rows hold only 0/1 in order-two pivot columns.
    """
    a = np.array(m, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValidationError(f"expected a 2-D matrix, got shape {a.shape}")
    a %= 4
    nrows, ncols = a.shape
    active = np.ones(nrows, dtype=bool)
    unit_pivots = []
    unit_rowidx = []
    candidates = list(range(ncols - 1, frozen - 1, -1))
    while True:
        hit = None
        for c in candidates:
            rows = np.flatnonzero(active & (a[:, c] % 2 == 1))
            if rows.size:
                hit = (int(rows[0]), c)
                break
        if hit is None:
            break
        r, c = hit
        if a[r, c] == 3:
            a[r] = (3 * a[r]) % 4
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % 4
        active[r] = False
        unit_pivots.append(c)
        unit_rowidx.append(r)
        candidates.remove(c)

    rest = a[active]
    if frozen and np.any(rest[:, :frozen] % 2):
        raise ValidationError("a unit entry survives only in frozen columns; no pivot allowed there")
    bits = rest // 2
    two_pivots = []
    two_rowidx = []
    bactive = np.ones(len(bits), dtype=bool)
    for c in candidates:
        rows = np.flatnonzero(bactive & (bits[:, c] == 1))
        if not rows.size:
            continue
        r = int(rows[0])
        mask = bits[:, c] == 1
        mask[r] = False
        bits[mask] ^= bits[r]
        bactive[r] = False
        two_pivots.append(c)
        two_rowidx.append(r)
    if np.any(bits[bactive]):
        raise ValidationError("an order-two row survives only in frozen columns; no pivot allowed there")

    two = 2 * bits[two_rowidx] if two_rowidx else np.zeros((0, ncols), dtype=np.int64)
    units = a[unit_rowidx] if unit_rowidx else np.zeros((0, ncols), dtype=np.int64)
    for row, c in zip(two, two_pivots):
        units = (units - np.outer(units[:, c] // 2, row)) % 4

    uorder = np.argsort(unit_pivots, kind="stable")
    torder = np.argsort(two_pivots, kind="stable")
    unit_pivots = tuple(int(unit_pivots[i]) for i in uorder)
    two_pivots = tuple(int(two_pivots[i]) for i in torder)
    pivots = set(unit_pivots) | set(two_pivots)
    free = tuple(c for c in range(frozen, ncols) if c not in pivots)
    return Z4Echelon(two[torder], two_pivots, units[uorder], unit_pivots, free)


def quaternary_row_reduce(m, frozen: int = 0) -> Z4Reduction:
    """Reduce a Z4 matrix to the standard block form, permuting columns.

    The output columns are ``frozen prefix, free, order-two pivots, unit pivots``;
    rows are the order-two rows followed by the order-four rows. A matrix
    already in that shape comes back unchanged with the identity permutation.
    """
    m = np.asarray(m, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    ech = z4_echelon(m, frozen)
    perm = tuple(range(frozen)) + ech.free_columns + ech.two_pivots + ech.unit_pivots
    matrix = np.vstack([ech.two_rows, ech.unit_rows])[:, list(perm)]
    return Z4Reduction(matrix, len(ech.unit_pivots), len(ech.two_pivots), perm)


def gf2_rref(m, columns: Iterable[int] | None = None):
    """Gauss-Jordan over GF(2), pivoting only on ``columns`` (in the given order).

    Returns ``(rows, pivots)``: the reduced matrix (pivot rows first, in pivot
    order, then the remaining rows) and the list of pivot columns.
    """
    a = np.array(m, dtype=np.int64, copy=True) % 2
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if columns is None:
        columns = range(a.shape[1])
    active = np.ones(len(a), dtype=bool)
    pivots, order = [], []
    for c in columns:
        rows = np.flatnonzero(active & (a[:, c] == 1))
        if not rows.size:
            continue
        r = int(rows[0])
        mask = a[:, c] == 1
        mask[r] = False
        a[mask] ^= a[r]
        active[r] = False
        pivots.append(c)
        order.append(r)
    order += [i for i in range(len(a)) if active[i]]
    return a[order], pivots


def gf2_rank(m) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(gf2_rref(m)[1])
