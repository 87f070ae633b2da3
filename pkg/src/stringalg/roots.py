"""The doubled simple-root set of a band component, its orbits and the matching Theta(m).

Here vertices carry their quiver index ``i = 0..n`` (vertex ``x_i``) and
``m_i`` is read from band data written ``[m_n, ..., m_1]``, so
``beta_i = m_i + m_(i+1)`` with ``m_0 = m_(n+1) = 0``.  A root is a triple
``(i, j, s)`` standing for ``eps_(i,j) - eps_(i,j+1)`` in copy ``s``.

* ``sigma`` reflects a root inside its vertex and switches copy:
  ``(i, j, s) <-> (i, beta_i - j, 1 - s)``.
* ``theta`` keeps the copy and crosses one edge of the quiver:
  ``(i + 1, j, s) <-> (i, beta_i - j, s)`` for ``1 <= j <= m_(i+1) - 1``.

The root ``(i, m_i, s)`` at an inner vertex has no theta partner; these are the
critical roots, ``x_i`` in copy 0 and ``y_i`` in copy 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import build_graph, band_graph, decompose_graph
from .matching import Matching

Root = tuple[int, int, int]


def _check_band(m):
    m = tuple(int(x) for x in m)
    if not m or any(x < 1 for x in m):
        raise ValueError(f"band data must be positive: {m}")
    return m


@dataclass(frozen=True)
class RootSet:
    m: tuple[int, ...]  # as written, m_n first
    elements: tuple[Root, ...]
    sigma: dict
    theta: dict

    @property
    def n(self) -> int:
        return len(self.m)

    def m_at(self, i: int) -> int:
        return self.m[self.n - i] if 1 <= i <= self.n else 0

    def beta_at(self, i: int) -> int:
        return self.m_at(i) + self.m_at(i + 1)

    def critical(self) -> list[Root]:
        return [e for e in self.elements if e not in self.theta]


def build_root_system(m: Sequence[int]) -> RootSet:
    m = _check_band(m)
    n = len(m)

    def mi(i):
        return m[n - i] if 1 <= i <= n else 0

    def bi(i):
        return mi(i) + mi(i + 1)

    elements = tuple((i, j, s) for s in (0, 1) for i in range(n + 1) for j in range(1, bi(i)))
    sigma = {(i, j, s): (i, bi(i) - j, 1 - s) for (i, j, s) in elements}
    theta = {}
    for s in (0, 1):
        for i in range(n):
            for j in range(1, mi(i + 1)):
                a, b = (i + 1, j, s), (i, bi(i) - j, s)
                theta[a] = b
                theta[b] = a
    return RootSet(m, elements, sigma, theta)


@dataclass(frozen=True)
class Orbit:
    elements: tuple[Root, ...]
    critical: tuple[Root, ...]

    @property
    def is_critical(self) -> bool:
        return bool(self.critical)


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[Orbit, ...]

    def critical_orbits(self) -> list[Orbit]:
        return [o for o in self.orbits if o.is_critical]

    def noncritical_orbits(self) -> list[Orbit]:
        return [o for o in self.orbits if not o.is_critical]

    def orbit_of(self) -> dict:
        return {e: k for k, o in enumerate(self.orbits) for e in o.elements}


def orbit_partition(r: RootSet) -> OrbitPartition:
    parent = {e: e for e in r.elements}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for mapping in (r.sigma, r.theta):
        for a, b in mapping.items():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for e in r.elements:
        groups.setdefault(find(e), []).append(e)
    crit = set(r.critical())
    orbits = []
    for members in sorted(groups.values(), key=lambda g: min(g)):
        members = sorted(members)
        c = tuple(e for e in members if e in crit)
        if len(c) not in (0, 2):
            raise AssertionError(f"orbit with {len(c)} critical elements: {members}")
        orbits.append(Orbit(tuple(members), c))
    return OrbitPartition(tuple(orbits))


def _point(root: Root):
    i, _, s = root
    return ("x" if s == 0 else "y", i)


def extract_matching(m: Sequence[int]) -> Matching:
    """Theta(m): the two critical ends of each critical orbit are matched."""
    r = build_root_system(m)
    o = orbit_partition(r)
    pairs = [(_point(a), _point(b)) for a, b in (orb.critical for orb in o.critical_orbits())]
    return Matching(r.n, tuple(pairs))


# -- weights -------------------------------------------------------------------


@dataclass(frozen=True)
class WeightPair:
    """Partitions ``(lambda_n, ..., lambda_1)`` and ``(mu_n, ..., mu_1)``; ``lambda_i`` has ``m_i`` parts."""

    lam: tuple[tuple[int, ...], ...]
    mu: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(tuple(int(x) for x in p) for p in self.lam))
        object.__setattr__(self, "mu", tuple(tuple(int(x) for x in p) for p in self.mu))
        for p in self.lam + self.mu:
            if any(x < 0 for x in p) or any(p[k] < p[k + 1] for k in range(len(p) - 1)):
                raise ValueError(f"{p} is not a partition")

    def check_shape(self, m: Sequence[int]):
        if len(self.lam) != len(m) or len(self.mu) != len(m):
            raise ValueError("weight pair has the wrong number of partitions")
        for p, q, k in zip(self.lam, self.mu, m):
            if len(p) != k or len(q) != k:
                raise ValueError(f"partition lengths must follow m = {tuple(m)}")

    def __add__(self, other: "WeightPair") -> "WeightPair":
        add = lambda xs, ys: tuple(tuple(a + b for a, b in zip(p, q)) for p, q in zip(xs, ys))
        return WeightPair(add(self.lam, other.lam), add(self.mu, other.mu))

    def last_parts(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(u_1..u_n, v_1..v_n): last parts of lambda_i and mu_i, in quiver order."""
        n = len(self.lam)
        return tuple(self.lam[n - i][-1] for i in range(1, n + 1)), tuple(self.mu[n - i][-1] for i in range(1, n + 1))


def _big_weight(parts, r: RootSet, i: int) -> tuple[int, ...]:
    """Lambda_i = (lambda_i, -reversed lambda_(i+1))."""
    n = r.n
    head = parts[n - i] if 1 <= i <= n else ()
    tail = parts[n - i - 1] if 1 <= i + 1 <= n else ()
    return tuple(head) + tuple(-x for x in reversed(tail))


def evaluate(w: WeightPair, r: RootSet) -> dict:
    """f(Lambda, M) on every root: the consecutive differences of Lambda_i or M_i."""
    w.check_shape(r.m)
    big = {(s, i): _big_weight(w.lam if s == 0 else w.mu, r, i) for s in (0, 1) for i in range(r.n + 1)}
    return {(i, j, s): big[(s, i)][j - 1] - big[(s, i)][j] for (i, j, s) in r.elements}


def contains_semiinvariant(w: WeightPair, r: RootSet, o: OrbitPartition | None = None) -> bool:
    o = o or orbit_partition(r)
    f = evaluate(w, r)
    return all(len({f[e] for e in orb.elements}) == 1 for orb in o.orbits)


def weight_from_values(r: RootSet, values: dict, u: Sequence[int], v: Sequence[int]) -> WeightPair:
    """Weight with prescribed last parts ``u_i, v_i`` whose head differences are ``values``.

    ``lambda_(i,j) = u_i + sum_(k >= j) values[(i, k, 0)]``; only roots in the
    upper block of each vertex are read.
    """
    n = r.n
    lam, mu = [], []
    for i in range(n, 0, -1):
        mi = r.m_at(i)
        for s, out, last in ((0, lam, u), (1, mu, v)):
            acc = last[i - 1]
            parts = [acc]
            for k in range(mi - 1, 0, -1):
                acc += values[(i, k, s)]
                parts.append(acc)
            out.append(tuple(reversed(parts)))
    return WeightPair(tuple(lam), tuple(mu))


def characteristic_weight(r: RootSet, orbit: Orbit) -> WeightPair:
    """The unique weight whose f is the indicator of a noncritical orbit (last parts 0)."""
    if orbit.is_critical:
        raise ValueError("characteristic weights exist for noncritical orbits only")
    members = set(orbit.elements)
    values = {e: int(e in members) for e in r.elements}
    zeros = [0] * r.n
    return weight_from_values(r, values, zeros, zeros)


def si_ring_structure(m: Sequence[int]) -> dict:
    r = build_root_system(m)
    o = orbit_partition(r)
    return {
        "polynomial_var_count": len(o.noncritical_orbits()),
        "base_matching": extract_matching(m),
    }


# -- reduction steps and the matching --------------------------------------------


def insert_identity_pair(t: Matching, k: int, twist: bool = False) -> Matching:
    """Shift points ``>= k`` up by one and add ``x_k <-> y_k``.

    With ``twist`` the shifted points also swap ``x`` and ``y``.
    """

    def shift(p):
        if p[1] < k:
            return p
        letter = ("y" if p[0] == "x" else "x") if twist else p[0]
        return (letter, p[1] + 1)

    pairs = [(shift(a), shift(b)) for a, b in t.theta] + [(("x", k), ("y", k))]
    return Matching(t.n + 1, tuple(pairs))


def swap_to_cross(t: Matching, k: int) -> Matching | None:
    """Replace ``x_k<->y_k, x_(k+1)<->y_(k+1)`` by ``x_k<->x_(k+1), y_k<->y_(k+1)``."""
    mp = t.as_map()
    if mp.get(("x", k)) != ("y", k) or mp.get(("x", k + 1)) != ("y", k + 1):
        return None
    keep = [pr for pr in t.theta if pr[0][1] not in (k, k + 1) and pr[1][1] not in (k, k + 1)]
    keep += [(("x", k), ("x", k + 1)), (("y", k), ("y", k + 1))]
    return Matching(t.n, tuple(keep))


def reduction_step(m: Sequence[int], i: int) -> tuple[str, tuple[int, ...]]:
    """One reduction at position ``i`` of ``[m_n, ..., m_1]`` (0-based, as written)."""
    m = list(_check_band(m))
    if not 0 <= i < len(m):
        raise ValueError("position out of range")
    padded = [0, *m, 0]
    left, right = padded[i], padded[i + 2]
    if i + 1 < len(m) and m[i] == m[i + 1]:
        return "a", tuple(m[: i + 1] + m[i + 2 :])
    if m[i] > max(left, right):
        if left == right and 0 < i < len(m) - 1:
            return "c", tuple(m[:i] + [left] + m[i + 1 :])
        if left != right:
            return "b", tuple(m[:i] + [m[i] - abs(left - right)] + m[i + 1 :])
    raise ValueError(f"no reduction rule applies to {tuple(m)} at position {i}")


def theorem_d_check(m: Sequence[int], i: int) -> dict:
    """Compare Theta before and after one reduction step.

    Rule a: the old matching is the new one with an identity pair inserted;
    ``literal`` says whether plain insertion works, ``twisted`` whether it works
    once the later points swap ``x`` and ``y``.
    Rule b: the matchings coincide.  Rule c: the old one is the new one with two
    consecutive identity pairs crossed into ``x_k<->x_(k+1), y_k<->y_(k+1)``.
    The index ``k`` where this happens is reported.
    """
    rule, reduced = reduction_step(m, i)
    before, after = extract_matching(m), extract_matching(reduced)
    found, extra = None, {}
    if rule == "a":
        literal = next((k for k in range(1, before.n) if insert_identity_pair(after, k) == before), None)
        twisted = next((k for k in range(1, before.n) if insert_identity_pair(after, k, True) == before), None)
        found = twisted if twisted is not None else literal
        holds = found is not None
        extra = {"literal": literal is not None, "twisted": twisted is not None}
    elif rule == "b":
        holds = before == after
    else:
        found = next((k for k in range(1, after.n - 1) if swap_to_cross(after, k) == before), None)
        holds = found is not None
    return {
        "m": list(m),
        "position": i,
        "rule": rule,
        "reduced": list(reduced),
        "before": before.to_dict(),
        "after": after.to_dict(),
        "holds": holds,
        "index": found,
        **extra,
    }


# -- the bicoloured graph on the root set -----------------------------------------


def root_graph(m: Sequence[int]):
    """Up-and-down-style graph on the roots.

    Vertex ``i`` shows copy ``i mod 2``; root ``j`` sits in row ``j`` at display
    position ``n - i``.  Between ``i + 1`` and ``i`` the composite
    ``sigma theta`` gives one edge family and ``theta sigma`` the other.
    Returns ``(beta_hat, sigma_theta_edges, theta_sigma_edges)``.
    """
    r = build_root_system(m)
    n = r.n
    st, ts = set(), set()
    for (i, j, s) in r.elements:
        if i == 0 or s != i % 2:
            continue
        e = (i, j, s)
        u = (n - i, j)
        t = r.theta.get(e)
        if t is not None and t[0] == i - 1:
            w = r.sigma[t]
            assert w[2] == (i - 1) % 2
            st.add((u, (n - w[0], w[1])))
        t = r.theta.get(r.sigma[e])
        if t is not None and t[0] == i - 1:
            assert t[2] == (i - 1) % 2
            ts.add((u, (n - t[0], t[1])))
    beta_hat = tuple(r.beta_at(n - p) - 1 for p in range(n + 1))
    return beta_hat, frozenset(st), frozenset(ts)


def remark6_check(m: Sequence[int]) -> dict:
    """Whether the root graph is Gamma(beta - 1; m - 1, m - 1).

    ``sigma theta`` edges are upper identities and ``theta sigma`` edges lower
    ones, so colouring them as Def-1 graphs do (upper is red at even display
    transitions) should reproduce the up-and-down graph exactly.
    """
    m = _check_band(m)
    beta_hat, st, ts = root_graph(m)
    r_hat = tuple(x - 1 for x in m)
    expected = build_graph(beta_hat, r_hat, r_hat)
    red = frozenset(e for e in st if e[0][0] % 2 == 0) | frozenset(e for e in ts if e[0][0] % 2 == 1)
    blue = frozenset(e for e in st if e[0][0] % 2 == 1) | frozenset(e for e in ts if e[0][0] % 2 == 0)
    return {
        "beta_hat": list(beta_hat),
        "ranks": list(r_hat),
        "equal": red == expected.red_edges and blue == expected.blue_edges,
    }


def graph_is_connected(m: Sequence[int]) -> bool:
    return len(decompose_graph(band_graph(m))) == 1
