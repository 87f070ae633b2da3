"""Exact linear algebra over a prime field or the rationals.

Matrices are numpy arrays: ``int64`` for the prime field, ``object`` arrays of
``Fraction`` for the rationals.  Only what the Hom/Ext computations need is
here: rank, reduced row echelon form, null space and column-space tests.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

# largest prime below 2**31; products of two residues fit in int64
DEFAULT_PRIME = 2147483647


class PrimeField:
    """The field Z/p for a prime ``p < 2**31``."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2 or p >= 2**31:
            raise ValueError("prime must satisfy 2 <= p < 2**31")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def element(self, x) -> int:
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {self.p}")
            return (x.numerator * pow(den, -1, self.p)) % self.p
        return int(x) % self.p

    def is_zero(self, x) -> bool:
        return int(x) % self.p == 0

    def inv(self, x) -> int:
        return pow(int(x) % self.p, -1, self.p)

    def mul(self, x, y) -> int:
        return (int(x) * int(y)) % self.p

    def neg(self, x) -> int:
        return (-int(x)) % self.p

    def random_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self.p)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] == 0 or b.shape[0] == 0:
            return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        # split b to keep partial sums inside int64
        lo = b & 0xFFFF
        hi = b >> 16
        out = (a @ lo) % self.p
        out = (out + ((a @ hi) % self.p) * 65536) % self.p
        return out

    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        p = self.p
        m = np.array(a, dtype=np.int64) % p
        rows, cols = m.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(m[r:, c])[0]
            if len(nz) == 0:
                continue
            piv = r + nz[0]
            if piv != r:
                m[[r, piv]] = m[[piv, r]]
            m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
            col = m[:, c].copy()
            col[r] = 0
            others = np.nonzero(col)[0]
            if len(others):
                m[others] = (m[others] - (col[others, None] * m[r]) % p) % p
            pivots.append(c)
            r += 1
        return m, pivots


class RationalField:
    """The rationals, used to audit prime-field results."""

    name = "QQ"

    def __repr__(self):
        return "RationalField()"

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        out = np.empty((rows, cols), dtype=object)
        out.fill(Fraction(0))
        return out

    def element(self, x) -> Fraction:
        return Fraction(x)

    def is_zero(self, x) -> bool:
        return x == 0

    def inv(self, x) -> Fraction:
        return 1 / Fraction(x)

    def mul(self, x, y) -> Fraction:
        return Fraction(x) * Fraction(y)

    def neg(self, x) -> Fraction:
        return -Fraction(x)

    def random_nonzero(self, rng: random.Random) -> Fraction:
        while True:
            x = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            if x != 0:
                return x

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = self.zeros(a.shape[0], b.shape[1])
        if a.shape[1] == 0:
            return out
        return np.dot(a.astype(object), b.astype(object)) + out

    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        m = np.array(a, dtype=object)
        m = np.vectorize(Fraction, otypes=[object])(m) if m.size else m
        rows, cols = m.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = next((i for i in range(r, rows) if m[i, c] != 0), None)
            if piv is None:
                continue
            if piv != r:
                m[[r, piv]] = m[[piv, r]]
            m[r] = m[r] / m[r, c]
            for i in range(rows):
                if i != r and m[i, c] != 0:
                    m[i] = m[i] - m[i, c] * m[r]
            pivots.append(c)
            r += 1
        return m, pivots


def rank(field, a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return len(field.rref(a)[1])


def nullspace(field, a: np.ndarray) -> np.ndarray:
    """Basis of ``{x : a @ x = 0}`` as the columns of the returned matrix."""
    rows, cols = a.shape
    if rows == 0:
        basis = field.zeros(cols, cols)
        for i in range(cols):
            basis[i, i] = field.element(1)
        return basis
    red, pivots = field.rref(a)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = field.zeros(cols, len(free))
    for k, f in enumerate(free):
        basis[f, k] = field.element(1)
        for r, pc in enumerate(pivots):
            basis[pc, k] = field.neg(red[r, f])
    return basis


def complement_columns(field, span: np.ndarray, candidates: np.ndarray) -> list[int]:
    """Indices of candidate columns that extend ``span`` to a basis of the sum.

    Candidates are taken greedily in order, so the choice is deterministic.
    """
    chosen = []
    current = span
    base = rank(field, current) if current.size else 0
    for k in range(candidates.shape[1]):
        trial = np.concatenate([current, candidates[:, k : k + 1]], axis=1) if current.size else candidates[:, k : k + 1]
        r = rank(field, trial)
        if r > base:
            chosen.append(k)
            current = trial
            base = r
    return chosen
