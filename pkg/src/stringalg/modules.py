"""Representations of A(n) given by matrices, and the modules built from words and graphs.

A representation stores one matrix per arrow: ``a[p]`` and ``b[p]`` map the
space at display position ``p`` to the one at ``p + 1`` (shape
``beta[p+1] x beta[p]``).  String, band and up-and-down modules are all "graph
modules": a basis vector per vertex and an arrow entry per edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import ComponentSpec
from .graph import build_updown_graph, decompose_graph
from .linalg import PrimeField

OTHER = {"a": "b", "b": "a"}


@dataclass
class Representation:
    field: object
    beta: tuple[int, ...]
    a: list
    b: list

    @property
    def n(self) -> int:
        return len(self.beta) - 1

    def arrow(self, letter: str, p: int) -> np.ndarray:
        return (self.a if letter == "a" else self.b)[p]

    def path_matrix(self, start: int, first: str, length: int) -> np.ndarray:
        """Matrix of the alternating path of ``length`` arrows leaving position ``start``."""
        out = self.field.zeros(self.beta[start], self.beta[start])
        for i in range(self.beta[start]):
            out[i, i] = self.field.element(1)
        letter = first
        for step in range(length):
            out = self.field.matmul(self.arrow(letter, start + step), out)
            letter = OTHER[letter]
        return out

    def relations_hold(self) -> bool:
        for mats in (self.a, self.b):
            for p in range(self.n - 1):
                prod = self.field.matmul(mats[p + 1], mats[p])
                if any(not self.field.is_zero(x) for x in prod.flat):
                    return False
        return True

    def is_zero(self) -> bool:
        return sum(self.beta) == 0


def graph_module(fld, beta: Sequence[int], edges) -> Representation:
    """Representation with one basis vector per vertex.

    ``edges`` holds ``(letter, p, row_from, row_to, scalar)`` with 1-based rows;
    the arrow at transition ``p`` sends row_from at ``p`` to row_to at ``p + 1``.
    """
    beta = tuple(beta)
    n = len(beta) - 1
    mats = {x: [fld.zeros(beta[p + 1], beta[p]) for p in range(n)] for x in "ab"}
    for letter, p, i, j, scalar in edges:
        mats[letter][p][j - 1, i - 1] = fld.element(scalar)
    return Representation(fld, beta, mats["a"], mats["b"])


@dataclass(frozen=True)
class ModuleSpec:
    """A string word, a band word or an up-and-down module.

    Words list quiver vertex indices ``i`` (vertex ``x_i``), consecutive ones
    differing by 1; letters alternate along the word starting with ``side``.
    For band words the last step returns to the first vertex.
    """

    kind: str
    n: int
    word: tuple[int, ...] = ()
    side: str = "a"
    scalar: object = 1
    component: ComponentSpec | None = None
    scalars: tuple = ()

    @classmethod
    def string_word(cls, n: int, word: Sequence[int], side: str = "a") -> "ModuleSpec":
        return cls("string_word", n, tuple(word), side)

    @classmethod
    def band_word(cls, n: int, word: Sequence[int], side: str = "a", scalar=1) -> "ModuleSpec":
        return cls("band_word", n, tuple(word), side, scalar)

    @classmethod
    def updown(cls, component: ComponentSpec, scalars: Sequence = ()) -> "ModuleSpec":
        return cls("updown", component.n, component=component, scalars=tuple(scalars))


def _word_edges(spec: ModuleSpec):
    word = list(spec.word)
    if not word:
        raise ValueError("empty word")
    if spec.side not in "ab" or len(spec.side) != 1:
        raise ValueError(f"side must be 'a' or 'b', not {spec.side!r}")
    if any(not 0 <= w <= spec.n for w in word):
        raise ValueError(f"word {word} leaves the quiver of A({spec.n})")
    cyclic = spec.kind == "band_word"
    steps = len(word) if cyclic else len(word) - 1
    if cyclic and (len(word) % 2 or len(word) < 2):
        raise ValueError("band words have even positive length")
    seq = word + [word[0]] if cyclic else word
    if any(abs(seq[t + 1] - seq[t]) != 1 for t in range(steps)):
        raise ValueError(f"consecutive letters of {word} must differ by one")
    if cyclic and spec.scalar == 0:
        raise ValueError("band scalar must be nonzero")
    # rows: order of first appearance at each position
    rows, counts = [], {}
    for w in word:
        p = spec.n - w
        counts[p] = counts.get(p, 0) + 1
        rows.append((p, counts[p]))
    beta = [0] * (spec.n + 1)
    for p, k in counts.items():
        beta[p] = k
    edges = []
    letter = spec.side
    for t in range(steps):
        u, v = rows[t], rows[(t + 1) % len(word)]
        scalar = spec.scalar if cyclic and t == 0 else 1
        if u[0] > v[0]:
            u, v = v, u
        edges.append((letter, u[0], u[1], v[1], scalar))
        letter = OTHER[letter]
    return beta, edges


def updown_edges(c: ComponentSpec, scalars: Sequence = ()):
    """Edges of Gamma(c) with one scalar per band component on its first edge.

    The marked edge is the one leaving the leftmost, topmost vertex of the band.
    Returns ``(edges, marked)`` where ``marked`` maps each band's marked edge to
    its scalar.
    """
    g = build_updown_graph(c)
    bands = [comp for comp in decompose_graph(g) if comp.kind == "band"]
    scalars = tuple(scalars) if scalars else (1,) * len(bands)
    if len(scalars) != len(bands):
        raise ValueError(f"need {len(bands)} band scalars, got {len(scalars)}")
    if any(x == 0 for x in scalars):
        raise ValueError("band scalars must be nonzero")
    marked = {}
    for comp, lam in zip(bands, scalars):
        first = min([(e, "a") for e in comp.red_edges] + [(e, "b") for e in comp.blue_edges])
        marked[first] = lam
    edges = []
    for (u, v), colour in g.edges():
        letter = "a" if colour == "red" else "b"
        edges.append((letter, u[0], u[1], v[1], marked.get(((u, v), letter), 1)))
    return edges, marked


def build_module(spec: ModuleSpec, fld=None) -> Representation:
    fld = fld or PrimeField()
    if spec.kind in ("string_word", "band_word"):
        beta, edges = _word_edges(spec)
    elif spec.kind == "updown":
        if spec.component is None:
            raise ValueError("updown spec needs a component")
        beta = spec.component.beta
        edges, _ = updown_edges(spec.component, spec.scalars)
    else:
        raise ValueError(f"unknown module kind {spec.kind!r}")
    rep = graph_module(fld, beta, edges)
    if not rep.relations_hold():
        raise ValueError("module violates the relations a_i a_(i+1) = b_i b_(i+1) = 0")
    return rep


def band_count(c: ComponentSpec) -> int:
    return sum(1 for comp in decompose_graph(build_updown_graph(c)) if comp.kind == "band")
