"""Gray map, Lee weight and the alphabet-change maps chi, xi and iota.

Scalar functions act on :class:`~z2z4.algebra.MixedVector`; the ``*_array``
variants act row-wise on integer arrays of shape ``(N, alpha + beta)`` and
are what the enumeration code uses.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .algebra import MixedVector
from .exceptions import ShapeError

GRAY = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}
GRAY_INVERSE = {bits: y for y, bits in GRAY.items()}
LEE = (0, 1, 2, 1)

_GRAY_TABLE = np.array([GRAY[y] for y in range(4)], dtype=np.int64)
_LEE_TABLE = np.array(LEE, dtype=np.int64)


def gray_scalar(y: int) -> tuple[int, int]:
    return GRAY[y % 4]


def gray_scalar_inverse(bits: Sequence[int]) -> int:
    return GRAY_INVERSE[tuple(int(b) for b in bits)]


def gray_extend(u: MixedVector) -> tuple[int, ...]:
    """Binary image of length alpha + 2*beta: x verbatim, then phi of each y_j."""
    out = list(u.binary)
    for y in u.quaternary:
        out.extend(GRAY[y])
    return tuple(out)


def gray_inverse(b: Sequence[int], alpha: int) -> MixedVector:
    b = [int(v) for v in b]
    rest = len(b) - alpha
    if rest < 0 or rest % 2:
        raise ShapeError(f"binary length {len(b)} minus alpha={alpha} must be even and non-negative")
    y = tuple(GRAY_INVERSE[(b[i], b[i + 1])] for i in range(alpha, len(b), 2))
    return MixedVector(tuple(b[:alpha]), y)


def hamming_weight(b: Sequence[int]) -> int:
    return sum(1 for v in b if v)


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ShapeError(f"length mismatch {len(a)} vs {len(b)}")
    return sum(1 for s, t in zip(a, b) if s != t)


def lee_weight(u: MixedVector) -> int:
    """Hamming weight on the binary block plus Lee weight (0,1,2,1) on the quaternary block."""
    return sum(u.binary) + sum(LEE[y] for y in u.quaternary)


def lee_distance(u: MixedVector, v: MixedVector) -> int:
    return lee_weight(u - v)


def chi(u: MixedVector) -> tuple[int, ...]:
    """Embed into Z4^(alpha+beta) sending binary 1 to 2."""
    return tuple(2 * x for x in u.binary) + u.quaternary


def chi_inverse(v: Sequence[int], alpha: int) -> MixedVector:
    v = [int(a) % 4 for a in v]
    if any(a % 2 for a in v[:alpha]):
        raise ShapeError("chi inverse needs even entries on the first alpha coordinates")
    return MixedVector(tuple(a // 2 for a in v[:alpha]), tuple(v[alpha:]))


def xi(v: Sequence[int], alpha: int) -> MixedVector:
    """Reduce the first alpha coordinates mod 2, keep the rest."""
    v = [int(a) % 4 for a in v]
    if len(v) < alpha:
        raise ShapeError(f"vector of length {len(v)} is shorter than alpha={alpha}")
    return MixedVector(tuple(a % 2 for a in v[:alpha]), tuple(v[alpha:]))


def iota(u: MixedVector) -> tuple[int, ...]:
    return u.binary + u.quaternary


# -- row-wise array versions -------------------------------------------------


def chi_array(a, alpha: int) -> np.ndarray:
    a = np.array(a, dtype=np.int64, copy=True)
    a[..., :alpha] *= 2
    return a


def chi_inverse_array(a, alpha: int) -> np.ndarray:
    a = np.array(a, dtype=np.int64, copy=True) % 4
    if np.any(a[..., :alpha] % 2):
        raise ShapeError("chi inverse needs even entries on the first alpha coordinates")
    a[..., :alpha] //= 2
    return a


def xi_array(a, alpha: int) -> np.ndarray:
    a = np.array(a, dtype=np.int64, copy=True) % 4
    a[..., :alpha] %= 2
    return a


def gray_array(a, alpha: int) -> np.ndarray:
    """Gray images of the rows of ``a``; shape ``(N, alpha + 2*beta)``."""
    a = np.asarray(a, dtype=np.int64)
    x = a[..., :alpha]
    y = _GRAY_TABLE[a[..., alpha:] % 4].reshape(*a.shape[:-1], -1)
    return np.concatenate([x, y], axis=-1)


def lee_weight_array(a, alpha: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    return a[..., :alpha].sum(axis=-1) + _LEE_TABLE[a[..., alpha:] % 4].sum(axis=-1)
