"""Seeded code collections shared by the tests."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

import numpy as np

from z2z4.cli import parse_code_file
from z2z4.code import Z2Z4Code, codeword_array, contains_array, direct_sum, new_code, permute_code
from z2z4.duality import dual, inner_product_matrix
from z2z4.selfdual import build_family_a, build_family_b, build_family_c, is_self_dual

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"
EXAMPLES = ["t13", "t34", "t13_std", "t34_std", "sd_split", "sd_twisted"]


def load(name: str) -> Z2Z4Code:
    p = DATA / f"{name}.code"
    return parse_code_file(p.read_text(), str(p))


def random_code(rng: np.random.Generator, max_alpha=4, max_beta=5, max_rows=6) -> Z2Z4Code:
    a = int(rng.integers(0, max_alpha + 1))
    b = int(rng.integers(0, max_beta + 1))
    k = int(rng.integers(0, max_rows + 1))
    rows = np.zeros((k, a + b), dtype=np.int64)
    for i in range(k):
        # mix of dense rows, order-two rows and sparse rows so types vary
        kind = rng.integers(3)
        rows[i, :a] = rng.integers(0, 2, a)
        if kind == 0:
            rows[i, a:] = rng.integers(0, 4, b)
        elif kind == 1:
            rows[i, a:] = 2 * rng.integers(0, 2, b)
        else:
            rows[i, a:] = rng.integers(0, 4, b) * (rng.random(b) < 0.3)
            rows[i, :a] *= rng.random(a) < 0.5
    return Z2Z4Code.from_array(a, b, rows)


@lru_cache(maxsize=None)
def random_corpus(n=200, seed=20240611) -> tuple[Z2Z4Code, ...]:
    rng = np.random.default_rng(seed)
    return tuple(random_code(rng) for _ in range(n))


def random_self_dual(rng: np.random.Generator, alpha: int, beta: int) -> Z2Z4Code | None:
    """Grow a self-orthogonal code one random vector at a time until it is self-dual."""
    c = new_code(alpha, beta)
    target = 2 ** (alpha + 2 * beta)
    while c.cardinality**2 < target:
        cand = codeword_array(dual(c))
        cand = cand[~contains_array(c, cand)]
        ok = np.diagonal(inner_product_matrix(cand, cand, alpha)) == 0
        cand = cand[ok]
        if not len(cand):
            return None
        v = cand[rng.integers(len(cand))]
        c = Z2Z4Code.from_array(alpha, beta, np.vstack([c.generator_array, v]))
    return c


def _scramble(rng, c: Z2Z4Code) -> Z2Z4Code:
    """Random X and Y permutations plus random Y sign flips; self-duality is preserved."""
    c = permute_code(c, rng.permutation(c.alpha).tolist(), rng.permutation(c.beta).tolist())
    g = c.generator_array.copy()
    signs = rng.choice([1, 3], c.beta)
    g[:, c.alpha:] = (g[:, c.alpha:] * signs) % 4
    return Z2Z4Code.from_array(c.alpha, c.beta, g)


BINARY_SELF_DUAL = [
    new_code(2, 0, [[1, 1]]),
    new_code(4, 0, [[1, 1, 0, 0], [0, 0, 1, 1]]),
    new_code(8, 0, [[1, 1, 1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 1, 1, 0, 0],
                    [0, 0, 0, 0, 1, 1, 1, 1], [1, 0, 1, 0, 1, 0, 1, 0]]),
]
QUATERNARY_SELF_DUAL = [
    new_code(0, 1, [[2]]),
    new_code(0, 3, [[2, 0, 0], [0, 2, 0], [0, 0, 2]]),
    new_code(0, 4, [[1, 1, 1, 1], [0, 2, 0, 2], [0, 0, 2, 2]]),
]


@lru_cache(maxsize=None)
def self_dual_corpus(seed=7) -> tuple[Z2Z4Code, ...]:
    rng = np.random.default_rng(seed)
    out = [load("sd_split"), load("sd_twisted"), build_family_c(2, 1, 4)]
    for k in range(1, 4):
        for d in range(0, k + 1):
            for b in range(max(1, 2 * d), 2 * d + 4):
                out.append(build_family_a(k, d, b))
                fb = build_family_b(k, d, b)
                if is_self_dual(fb):
                    out.append(fb)
                if d < k:
                    fc = build_family_c(k, d, b)
                    if is_self_dual(fc):
                        out.append(fc)
    for cx in BINARY_SELF_DUAL:
        for cy in QUATERNARY_SELF_DUAL:
            out.append(direct_sum(cx, cy))
    for a, b in [(2, 1), (2, 2), (2, 3), (4, 2), (4, 3), (4, 4), (2, 4), (6, 2)] * 3:
        c = random_self_dual(rng, a, b)
        if c is not None:
            out.append(c)
    out += [_scramble(rng, c) for c in list(out)]
    return tuple(out)
