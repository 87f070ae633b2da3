"""Matching rings S(Theta): control equations, Hilbert bases, relations, classification.

Exponent vectors have ``2n`` coordinates ``(u_1..u_n, v_1..v_n)``, the powers of
``A_1..A_n`` and ``B_1..B_n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .linalg import RationalField, rank
from .matching import (
    Matching,
    is_even,
    is_irreducible,
    is_symmetric,
    is_unmixed,
    reducible_index,
)


def _link_vector(n: int, p) -> list[int]:
    """Coefficients of u_i + u_(i+1) (for x_i) or v_i + v_(i+1) (for y_i)."""
    out = [0] * (2 * n)
    base = 0 if p[0] == "x" else n
    out[base + p[1] - 1] += 1
    out[base + p[1]] += 1
    return out


@dataclass(frozen=True)
class ControlSystem:
    n: int
    equations: tuple[tuple[int, ...], ...]

    def matrix(self) -> np.ndarray:
        if not self.equations:
            return np.zeros((0, 2 * self.n), dtype=np.int64)
        return np.array(self.equations, dtype=np.int64)

    def satisfied(self, x: Sequence[int]) -> bool:
        return all(sum(a * b for a, b in zip(eq, x)) == 0 for eq in self.equations)

    def describe(self) -> list[str]:
        def side(p):
            return "+".join(_var_name(self.n, k) for k, c in enumerate(p) if c for _ in range(c))

        out = []
        for eq in self.equations:
            pos = [max(c, 0) for c in eq]
            neg = [max(-c, 0) for c in eq]
            out.append(f"{side(pos)} = {side(neg)}")
        return out


def _var_name(n: int, k: int) -> str:
    return f"u{k + 1}" if k < n else f"v{k - n + 1}"


def control_equations(t: Matching) -> ControlSystem:
    """One equation ``L(P) = L(Q)`` per linked pair, duplicates (up to sign) removed."""
    if not is_symmetric(t):
        raise ValueError("control equations need a symmetric matching")
    n = t.n
    seen, eqs = set(), []
    for a, b in t.theta:
        la, lb = _link_vector(n, a), _link_vector(n, b)
        eq = tuple(x - y for x, y in zip(la, lb))
        if not any(eq):
            continue
        lead = next(c for c in eq if c)
        if lead < 0:
            eq = tuple(-c for c in eq)
        if eq not in seen:
            seen.add(eq)
            eqs.append(eq)
    return ControlSystem(n, tuple(eqs))


# -- Hilbert basis ----------------------------------------------------------------


def hilbert_basis(cs: ControlSystem, max_frontier: int = 2_000_000) -> list[tuple[int, ...]]:
    """Minimal nonzero solutions in N^(2n) by Contejean-Devie completion.

    A candidate ``x`` with ``Ax != 0`` is extended by ``e_j`` only when
    ``<Ax, Ae_j> < 0``; candidates dominating a found solution are dropped.
    """
    a = cs.matrix()
    dim = 2 * cs.n
    cols = [tuple(int(v) for v in a[:, j]) for j in range(dim)]
    basis: list[tuple[int, ...]] = []

    def dominated(x):
        return any(all(xi >= bi for xi, bi in zip(x, b)) for b in basis)

    frontier = {}
    for j in range(dim):
        e = tuple(1 if k == j else 0 for k in range(dim))
        frontier[e] = cols[j]
    while frontier:
        nxt = {}
        for x, ax in frontier.items():
            if not any(ax):
                if not dominated(x):
                    basis.append(x)
        for x, ax in frontier.items():
            if not any(ax):
                continue
            for j in range(dim):
                if sum(p * q for p, q in zip(ax, cols[j])) >= 0:
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1 :]
                if y in nxt or dominated(y):
                    continue
                nxt[y] = tuple(p + q for p, q in zip(ax, cols[j]))
        if len(nxt) > max_frontier:
            raise RuntimeError("Hilbert basis frontier exceeded its cap")
        frontier = nxt
    return sorted(set(basis), reverse=True)


def monomial(n: int, x: Sequence[int]) -> str:
    parts = []
    for k, e in enumerate(x):
        if e:
            name = f"A{k + 1}" if k < n else f"B{k - n + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(n: int, text: str) -> tuple[int, ...]:
    out = [0] * (2 * n)
    for factor in text.replace(" ", "").split("*"):
        name, _, power = factor.partition("^")
        k = int(name[1:]) - 1
        out[k + (n if name[0] == "B" else 0)] += int(power or 1)
    return tuple(out)


def decomposes(x: Sequence[int], gens: Sequence[Sequence[int]], memo: dict | None = None) -> bool:
    """Whether ``x`` is a nonnegative integer combination of ``gens``."""
    memo = {} if memo is None else memo
    x = tuple(x)

    def go(y):
        if not any(y):
            return True
        if y in memo:
            return memo[y]
        ok = False
        for g in gens:
            if all(a >= b for a, b in zip(y, g)):
                if go(tuple(a - b for a, b in zip(y, g))):
                    ok = True
                    break
        memo[y] = ok
        return ok

    return go(x)


# -- minimal relations ----------------------------------------------------------


class BoundExceeded(RuntimeError):
    pass


class FiberSolver:
    """Enumerates fibers over a fixed generator list, sharing work between degrees."""

    def __init__(self, gens: Sequence[Sequence[int]], cap: int = 200_000):
        self.gens = [tuple(g) for g in gens]
        self.cap = cap
        k = len(self.gens)
        self.masks = [sum(1 << d for d, x in enumerate(g) if x) for g in self.gens]
        # coordinates still coverable by generators i, i+1, ...
        self.reach = [0] * (k + 1)
        for i in range(k - 1, -1, -1):
            self.reach[i] = self.reach[i + 1] | self.masks[i]
        self.memo: dict = {}

    def _solve(self, i: int, rest: tuple) -> tuple:
        """Sparse solutions ``((gen, count), ...)`` using generators ``i..``."""
        key = (i, rest)
        if key in self.memo:
            return self.memo[key]
        need = sum(1 << d for d, x in enumerate(rest) if x)
        if need & ~self.reach[i]:
            out = ()
        elif need == 0:
            out = ((),)
        else:
            found = []
            g = self.gens[i]
            c, r = 0, rest
            while True:
                for tail in self._solve(i + 1, r):
                    found.append(((i, c),) + tail if c else tail)
                r = tuple(x - y for x, y in zip(r, g))
                if min(r) < 0:
                    break
                c += 1
            if len(found) > self.cap:
                raise BoundExceeded(f"fiber has more than {self.cap} elements")
            out = tuple(found)
        self.memo[key] = out
        return out

    def fiber(self, b: Sequence[int]) -> list[tuple[int, ...]]:
        k = len(self.gens)
        out = []
        for sparse in self._solve(0, tuple(b)):
            dense = [0] * k
            for g, c in sparse:
                dense[g] = c
            out.append(tuple(dense))
        return sorted(out)


def fiber(b: Sequence[int], gens: Sequence[Sequence[int]], cap: int = 200_000) -> list[tuple[int, ...]]:
    """All coefficient vectors ``c`` with ``sum c_i g_i = b``."""
    return FiberSolver(gens, cap).fiber(b)


def _fiber_components(elements):
    """Components under 'shares a generator' (common support)."""
    parent = list(range(len(elements)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_gen: dict[int, int] = {}
    for idx, c in enumerate(elements):
        for g, e in enumerate(c):
            if e:
                if g in by_gen:
                    ri, rj = find(idx), find(by_gen[g])
                    if ri != rj:
                        parent[ri] = rj
                else:
                    by_gen[g] = idx
    groups: dict[int, list] = {}
    for idx in range(len(elements)):
        groups.setdefault(find(idx), []).append(elements[idx])
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


@dataclass(frozen=True)
class Relation:
    degree: tuple[int, ...]
    lhs: tuple[int, ...]  # coefficient vector over generators
    rhs: tuple[int, ...]
    level: int  # smallest number of generators in a fiber element

    def sides(self) -> tuple[list[int], list[int]]:
        """Generator-index multisets."""
        expand = lambda c: [i for i, e in enumerate(c) for _ in range(e)]
        return expand(self.lhs), expand(self.rhs)


def minimal_relations(
    gens: Sequence[Sequence[int]], degree_bound: int = 4, fiber_cap: int = 200_000
) -> tuple[list[Relation], bool]:
    """Minimal binomial relations among ``gens`` of generator-degree up to ``degree_bound``.

    Every multidegree reachable by at most ``degree_bound`` generators is
    examined; its whole fiber is enumerated, and ``#components - 1`` relations
    are emitted, joining the first component to each of the others.  The result
    counts as stabilised when no relation appears at levels ``degree_bound - 1``
    or ``degree_bound``.
    """
    gens = [tuple(g) for g in gens]
    k = len(gens)
    degrees = {}
    for size in range(2, degree_bound + 1):
        for combo in itertools.combinations_with_replacement(range(k), size):
            b = tuple(sum(gens[i][d] for i in combo) for d in range(len(gens[0])))
            degrees.setdefault(b, size)
    relations = []
    solver = FiberSolver(gens, fiber_cap)
    for b, level in sorted(degrees.items(), key=lambda kv: (kv[1], kv[0])):
        elements = solver.fiber(b)
        if len(elements) < 2:
            continue
        comps = _fiber_components(elements)
        for other in comps[1:]:
            relations.append(Relation(b, comps[0][0], other[0], level))
    stabilized = not any(r.level >= degree_bound - 1 for r in relations)
    return relations, stabilized


def lattice_rank(gens: Sequence[Sequence[int]]) -> int:
    if not gens:
        return 0
    mat = np.array([[Fraction(x) for x in g] for g in gens], dtype=object)
    return rank(RationalField(), mat)


@dataclass
class RingClassification:
    kind: str
    codim: int
    relation_count: int
    degree_bound_used: int
    stabilized: bool
    dim: int
    generators: list
    relations: list

    @property
    def provisional(self) -> bool:
        return not self.stabilized


def _kind(relations: int, codim: int) -> str:
    if relations == 0:
        return "polynomial"
    if relations == codim == 1:
        return "hypersurface"
    if relations == codim:
        return "complete_intersection"
    return "not_complete_intersection"


def classify_ring(t: Matching, degree_bound: int = 4) -> RingClassification:
    cs = control_equations(t)
    gens = hilbert_basis(cs)
    rels, stabilized = minimal_relations(gens, degree_bound)
    dim = lattice_rank(gens)
    codim = len(gens) - dim
    return RingClassification(_kind(len(rels), codim), codim, len(rels), degree_bound, stabilized, dim, gens, rels)


def ring_report(t: Matching, cl: RingClassification) -> dict:
    n = t.n
    return {
        **t.to_dict(),
        "generators": [{"exponents": list(g), "monomial": monomial(n, g)} for g in cl.generators],
        "relations": [list(map(list, r.sides())) for r in cl.relations],
        "dim": cl.dim,
        "codim": cl.codim,
        "classification": cl.kind,
        "degree_bound": cl.degree_bound_used,
        "stabilized": cl.stabilized,
    }


# -- reduction and enumeration ------------------------------------------------------


def strip_pair(t: Matching, k: int) -> Matching:
    """Remove the linked points ``k, k+1`` and shift later points down by two."""
    drop = {k, k + 1}
    shift = lambda p: (p[0], p[1] - 2 if p[1] > k + 1 else p[1])
    pairs = [(shift(a), shift(b)) for a, b in t.theta if a[1] not in drop and b[1] not in drop]
    return Matching(t.n - 2, tuple(pairs))


def reduce_matching(t: Matching) -> tuple[Matching, int]:
    """Strip reducible patterns ``x_k <-> x_(k+1)`` until none is left.

    Each strip frees two variables ``A_(k+1), B_(k+1)`` and identifies
    ``A_k`` with ``A_(k+2)`` (and likewise for ``B``).
    """
    stripped = 0
    while (k := reducible_index(t)) is not None:
        t = strip_pair(t, k)
        stripped += 1
    return t, stripped


def all_symmetric_matchings(n: int) -> list[Matching]:
    k = n - 1
    out = []

    def go(free, pairs):
        if not free:
            out.append(Matching(n, tuple(pairs)))
            return
        i, rest = free[0], free[1:]
        go(rest, pairs + [(("x", i), ("y", i))])
        for idx, j in enumerate(rest):
            remaining = rest[:idx] + rest[idx + 1 :]
            go(remaining, pairs + [(("x", i), ("x", j)), (("y", i), ("y", j))])
            go(remaining, pairs + [(("x", i), ("y", j)), (("y", i), ("x", j))])

    go(list(range(1, k + 1)), [])
    return sorted(set(out), key=lambda m: m.to_json())


def reverse_matching(t: Matching) -> Matching:
    flip = lambda p: (p[0], t.n - p[1])
    return Matching(t.n, tuple((flip(a), flip(b)) for a, b in t.theta))


PREDICATES = {"even": is_even, "unmixed": is_unmixed, "irreducible": is_irreducible, "symmetric": is_symmetric}


def enumerate_matchings(n: int, flags: Iterable[str] = (), up_to_reversal: bool = False) -> list[Matching]:
    flags = set(flags)
    unknown = flags - set(PREDICATES)
    if unknown:
        raise ValueError(f"unknown flags {sorted(unknown)}")
    found = [t for t in all_symmetric_matchings(n) if all(PREDICATES[f](t) for f in flags)]
    if up_to_reversal:
        keep, seen = [], set()
        for t in found:
            if t not in seen:
                keep.append(t)
                seen.update({t, reverse_matching(t)})
        found = keep
    return found


# -- oracles and scans ---------------------------------------------------------------


def torus_weights(t: Matching, x: Sequence[int]) -> list[int]:
    """Weights of the monomial ``x`` under one K^* per Theta-orbit."""
    n = t.n
    u, v = x[:n], x[n:]

    def level(p):
        vals = u if p[0] == "x" else v
        return vals[p[1] - 1] + vals[p[1]]

    return [level(a) - level(b) for a, b in t.theta]


def invariance_oracle(t: Matching, max_degree: int = 6) -> bool:
    """Monoid membership (via the Hilbert basis) agrees with torus invariance."""
    n = t.n
    gens = hilbert_basis(control_equations(t))
    memo: dict = {}
    for total in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(2 * n), total):
            x = [0] * (2 * n)
            for j in combo:
                x[j] += 1
            invariant = not any(torus_weights(t, x))
            if invariant != decomposes(x, gens, memo):
                return False
    return True


def brute_force_minimal(cs: ControlSystem, bound: int = 4) -> tuple[list[tuple[int, ...]], np.ndarray]:
    """(minimal nonzero solutions in the box [0, bound]^(2n), all solutions in the box)."""
    dim = 2 * cs.n
    grid = np.stack(np.meshgrid(*[np.arange(bound + 1)] * dim, indexing="ij"), -1).reshape(-1, dim)
    a = cs.matrix()
    sols = grid[np.all(grid @ a.T == 0, axis=1)] if a.size else grid
    nz = sols[sols.sum(axis=1) > 0]
    minimal = []
    for chunk in range(0, len(nz), 512):
        block = nz[chunk : chunk + 512]
        ge = np.all(block[:, None, :] >= nz[None, :, :], axis=2)
        eq = np.all(block[:, None, :] == nz[None, :, :], axis=2)
        has_smaller = np.any(ge & ~eq, axis=1)
        minimal += [tuple(int(v) for v in row) for row in block[~has_smaller]]
    return sorted(minimal, reverse=True), sols


def conjecture_scan(n_max: int = 6, degree_bound: int = 4) -> dict:
    """Check generator entries <= 1 and relation degrees <= 2 for every symmetric matching.

    Findings are reported, never asserted.  Each one records whether its
    matching is even, and ``summary`` splits the counts along that line.
    """
    part_a, part_b, provisional = [], [], []
    checked = 0
    for n in range(2, n_max + 1):
        for t in all_symmetric_matchings(n):
            checked += 1
            even = is_even(t)
            gens = hilbert_basis(control_equations(t))
            rels, stabilized = minimal_relations(gens, degree_bound)
            if not stabilized:
                provisional.append(t.to_dict())
            for g in gens:
                if max(g) > 1:
                    part_a.append({**t.to_dict(), "even": even, "generator": list(g), "monomial": monomial(n, g)})
            for r in rels:
                if max(r.degree) > 2:
                    part_b.append({**t.to_dict(), "even": even, "degree": list(r.degree),
                                   "relation": list(map(list, r.sides()))})
    summary = {
        name: {"total": len(found), "even": sum(1 for f in found if f["even"])}
        for name, found in (("part_a", part_a), ("part_b", part_b))
    }
    return {
        "n_max": n_max,
        "degree_bound": degree_bound,
        "matchings_checked": checked,
        "summary": summary,
        "part_a": part_a or "none found",
        "part_b": part_b or "none found",
        "unstabilized": provisional,
    }
