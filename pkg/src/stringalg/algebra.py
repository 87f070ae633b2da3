"""The algebras A(n), their dimension vectors and rank-sequence components.

Index convention
----------------
Every per-vertex tuple is stored in *display order*: position ``p`` is the
vertex ``x_{n-p}``, so position 0 is the source end ``x_n`` and position ``n``
is the sink ``x_0``.  Arrows ``a_{n-p}, b_{n-p}`` go from position ``p`` to
``p + 1``; rank tuples are indexed by that transition ``p``.  This is the order
in which band data ``[m_n, ..., m_1]`` is written, e.g. ``[2, 3, 1]`` has
dimension vector ``(2, 5, 4, 1)``.  With this order the Euler matrix is used
exactly as displayed (upper triangular, rows indexed by position), which is
what makes ``dim Hom - dim Ext^1`` agree with the Euler form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class AlgebraSpec:
    """A(n): the double-arrow A_{n+1} quiver with relations a_i a_{i+1} = b_i b_{i+1} = 0."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("A(n) needs n >= 1")

    @property
    def num_vertices(self) -> int:
        return self.n + 1


def _as_dims(values: Sequence[int], length: int | None = None, name: str = "vector") -> tuple[int, ...]:
    dims = tuple(int(x) for x in values)
    if length is not None and len(dims) != length:
        raise ValueError(f"{name} has length {len(dims)}, expected {length}")
    if any(x < 0 for x in dims):
        raise ValueError(f"{name} has a negative entry: {dims}")
    return dims


def check_ranks(beta: Sequence[int], ranks: Sequence[int]) -> bool:
    """True if consecutive ranks fit: ``r_{p-1} + r_p <= beta_p`` at every position."""
    n = len(beta) - 1
    if len(ranks) != n or any(r < 0 for r in ranks):
        return False
    padded = (0, *ranks, 0)
    return all(padded[p] + padded[p + 1] <= beta[p] for p in range(n + 1))


def is_maximal(beta: Sequence[int], ranks: Sequence[int]) -> bool:
    if not check_ranks(beta, ranks):
        return False
    for p in range(len(ranks)):
        bumped = list(ranks)
        bumped[p] += 1
        if check_ranks(beta, bumped):
            return False
    return True


def maximal_rank_sequences(beta: Sequence[int]) -> list[tuple[int, ...]]:
    """All beta-maximal rank sequences of one chain, in lexicographic order."""
    beta = _as_dims(beta, name="beta")
    n = len(beta) - 1
    found = []

    def extend(prefix):
        p = len(prefix)
        if p == n:
            if is_maximal(beta, prefix):
                found.append(tuple(prefix))
            return
        prev = prefix[-1] if prefix else 0
        top = min(beta[p] - prev, beta[p + 1])
        for r in range(top + 1):
            extend(prefix + [r])

    extend([])
    return sorted(found)


def alternating_sum(beta: Sequence[int]) -> int:
    return sum(b if p % 2 == 0 else -b for p, b in enumerate(beta))


def _exact_except(beta, ranks) -> int:
    padded = (0, *ranks, 0)
    return sum(1 for p in range(len(beta)) if padded[p] + padded[p + 1] != beta[p])


def _is_band(beta, r, s) -> bool:
    return r == s and len(r) > 0 and all(x >= 1 for x in r) and _exact_except(beta, r) == 0


def _is_string(beta, r, s) -> bool:
    return abs(alternating_sum(beta)) == 1 and _exact_except(beta, r) <= 1 and _exact_except(beta, s) <= 1


@dataclass(frozen=True)
class ComponentSpec:
    """An irreducible component C(beta; r, s) of Rep(A(n), beta)."""

    beta: tuple[int, ...]
    r: tuple[int, ...]
    s: tuple[int, ...]

    def __post_init__(self):
        beta = _as_dims(self.beta, name="beta")
        if len(beta) < 2:
            raise ValueError("beta needs at least two entries")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "r", _as_dims(self.r, len(beta) - 1, "r"))
        object.__setattr__(self, "s", _as_dims(self.s, len(beta) - 1, "s"))
        if not (check_ranks(self.beta, self.r) and check_ranks(self.beta, self.s)):
            raise ValueError(f"rank sequences violate r_(p-1) + r_p <= beta_p: {self}")

    @property
    def n(self) -> int:
        return len(self.beta) - 1

    @property
    def algebra(self) -> AlgebraSpec:
        return AlgebraSpec(self.n)

    @property
    def is_maximal(self) -> bool:
        return is_maximal(self.beta, self.r) and is_maximal(self.beta, self.s)

    @property
    def kind(self) -> str:
        if _is_band(self.beta, self.r, self.s):
            return "band"
        if _is_string(self.beta, self.r, self.s):
            return "string"
        return "other"

    def band_data(self) -> tuple[int, ...]:
        if self.kind != "band":
            raise ValueError("not a band module component")
        return self.r


def band_beta(m: Sequence[int]) -> tuple[int, ...]:
    """Dimension vector [m_n, ..., m_1] = (m_n, m_n + m_(n-1), ..., m_2 + m_1, m_1)."""
    padded = (0, *m, 0)
    return tuple(padded[p] + padded[p + 1] for p in range(len(m) + 1))


def band_component(m: Sequence[int]) -> ComponentSpec:
    m = tuple(int(x) for x in m)
    if not m or any(x < 1 for x in m):
        raise ValueError(f"band data must be positive: {m}")
    return ComponentSpec(band_beta(m), m, m)


def enumerate_components(beta: Sequence[int]) -> list[ComponentSpec]:
    """All components of Rep(A(n), beta): pairs of maximal rank sequences."""
    chains = maximal_rank_sequences(beta)
    return [ComponentSpec(tuple(beta), r, s) for r, s in itertools.product(chains, chains)]


def is_string_component(c: ComponentSpec) -> bool:
    return _is_string(c.beta, c.r, c.s)


def euler_matrix(n: int) -> list[list[int]]:
    return [[0 if q < p else 1 if q == p else 2 * (-1) ** (q - p) for q in range(n + 1)] for p in range(n + 1)]


def euler_form(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """<alpha, beta> = alpha E(n) beta^t, both vectors in display order."""
    if len(alpha) != len(beta):
        raise ValueError("dimension vectors have different lengths")
    e = euler_matrix(len(alpha) - 1)
    return sum(alpha[p] * e[p][q] * beta[q] for p in range(len(alpha)) for q in range(len(beta)))


def tits_form(beta: Sequence[int]) -> int:
    return alternating_sum(beta) ** 2


def lemma1_weight_check(alpha: Sequence[int], beta: Sequence[int], level: int) -> bool:
    """Whether S_alpha F (x) S_beta F contains a semi-invariant of weight ``level``.

    Both weights must be dominant (nonincreasing) and of equal length.
    """
    if len(alpha) != len(beta):
        raise ValueError("weights have different lengths")
    for w in (alpha, beta):
        if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
            raise ValueError(f"weight {tuple(w)} is not dominant")
    k = len(alpha)
    return all(alpha[i] + beta[k - 1 - i] == level for i in range(k))
