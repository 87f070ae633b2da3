"""Up-and-down graphs and generic decompositions of A(n) components.

Vertices are ``(p, j)``: display position ``p`` (vertex ``x_{n-p}``) and row
``j`` counted from the top, starting at 1.  Edges always go from position
``p`` to ``p + 1``.  At an even transition the red edges are the "upper
identity" (top rows matched) and the blue ones the "lower identity" (bottom
rows matched); at an odd transition the roles swap.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .algebra import ComponentSpec, band_component, check_ranks, is_string_component

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


def _transition_edges(beta, p, top_rank, bottom_rank):
    top = [((p, j), (p + 1, j)) for j in range(1, top_rank + 1)]
    bottom = [((p, beta[p] + 1 - j), (p + 1, beta[p + 1] + 1 - j)) for j in range(1, bottom_rank + 1)]
    return top, bottom


@dataclass(frozen=True)
class UpDownGraph:
    beta: tuple[int, ...]
    red_edges: frozenset
    blue_edges: frozenset

    @property
    def n(self) -> int:
        return len(self.beta) - 1

    def vertices(self) -> list[Vertex]:
        return [(p, j) for p in range(len(self.beta)) for j in range(1, self.beta[p] + 1)]

    def edges(self) -> list[tuple[Edge, str]]:
        return sorted([(e, "red") for e in self.red_edges] + [(e, "blue") for e in self.blue_edges])

    def neighbours(self) -> dict[Vertex, dict[str, Vertex]]:
        """For each vertex, its red and blue neighbour (if any)."""
        nb: dict[Vertex, dict[str, Vertex]] = {v: {} for v in self.vertices()}
        for (u, v), colour in self.edges():
            for a, b in ((u, v), (v, u)):
                if colour in nb[a]:
                    raise AssertionError(f"vertex {a} has two {colour} edges")
                nb[a][colour] = b
        return nb


def build_graph(beta: Sequence[int], r: Sequence[int], s: Sequence[int]) -> UpDownGraph:
    """Gamma(beta; r, s) from raw data (no maximality required)."""
    beta = tuple(beta)
    if not (check_ranks(beta, r) and check_ranks(beta, s)):
        raise ValueError(f"rank constraints violated: beta={beta}, r={tuple(r)}, s={tuple(s)}")
    red, blue = [], []
    for p in range(len(beta) - 1):
        if p % 2 == 0:
            top, bottom = _transition_edges(beta, p, r[p], s[p])
            red += top
            blue += bottom
        else:
            top, bottom = _transition_edges(beta, p, s[p], r[p])
            blue += top
            red += bottom
    return UpDownGraph(beta, frozenset(red), frozenset(blue))


def build_updown_graph(c: ComponentSpec) -> UpDownGraph:
    return build_graph(c.beta, c.r, c.s)


@dataclass(frozen=True)
class GraphComponent:
    kind: str
    vertices: tuple[Vertex, ...]
    dimension_vector: tuple[int, ...]
    red_edges: frozenset
    blue_edges: frozenset
    endpoints: tuple[Vertex, Vertex] | None = None

    def ranks(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Red and blue edge counts per transition."""
        n = len(self.dimension_vector) - 1
        r, s = [0] * n, [0] * n
        for (u, _v) in self.red_edges:
            r[u[0]] += 1
        for (u, _v) in self.blue_edges:
            s[u[0]] += 1
        return tuple(r), tuple(s)

    def band_data(self) -> tuple[int, ...]:
        if self.kind != "band":
            raise ValueError("string components carry no band data")
        return self.ranks()[0]

    def canonical_edges(self) -> tuple[frozenset, frozenset]:
        """Edges after renumbering the rows of each position top to bottom."""
        rows: dict[int, list[int]] = {}
        for p, j in sorted(self.vertices):
            rows.setdefault(p, []).append(j)
        relabel = {(p, j): (p, k + 1) for p, js in rows.items() for k, j in enumerate(js)}
        red = frozenset((relabel[u], relabel[v]) for u, v in self.red_edges)
        blue = frozenset((relabel[u], relabel[v]) for u, v in self.blue_edges)
        return red, blue


def decompose_graph(g: UpDownGraph) -> list[GraphComponent]:
    """Connected components, each classified as a band (cycle) or string (path)."""
    parent = {v: v for v in g.vertices()}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (u, v), _ in g.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[Vertex, list[Vertex]] = {}
    for v in g.vertices():
        groups.setdefault(find(v), []).append(v)
    nb = g.neighbours()
    out = []
    for members in sorted(groups.values(), key=lambda vs: min(vs)):
        members = sorted(members)
        mset = set(members)
        red = frozenset(e for e in g.red_edges if e[0] in mset)
        blue = frozenset(e for e in g.blue_edges if e[0] in mset)
        dims = [0] * len(g.beta)
        for p, _ in members:
            dims[p] += 1
        n_edges = len(red) + len(blue)
        if n_edges == len(members):
            if any(len(nb[v]) != 2 for v in members):
                raise AssertionError("cycle component with a vertex missing a colour")
            out.append(GraphComponent("band", tuple(members), tuple(dims), red, blue))
        elif n_edges == len(members) - 1:
            ends = [v for v in members if len(nb[v]) < 2]
            if len(members) == 1:
                ends = members * 2
            if len(ends) != 2:
                raise AssertionError(f"path component with {len(ends)} endpoints")
            out.append(GraphComponent("string", tuple(members), tuple(dims), red, blue, (ends[0], ends[1])))
        else:
            raise AssertionError("component is neither a band nor a string graph")
    return out


def count_components(beta, r, s) -> int:
    return len(decompose_graph(build_graph(beta, r, s)))


def is_isomorphic_to_rebuilt(comp: GraphComponent) -> bool:
    """Whether a component, rows renumbered, is literally Gamma of its own data."""
    r, s = comp.ranks()
    red, blue = comp.canonical_edges()
    rebuilt = build_graph(comp.dimension_vector, r, s)
    return red == rebuilt.red_edges and blue == rebuilt.blue_edges


@dataclass(frozen=True)
class Summand:
    kind: str
    dimension_vector: tuple[int, ...]
    r: tuple[int, ...]
    s: tuple[int, ...]

    @property
    def band_data(self) -> tuple[int, ...] | None:
        return self.r if self.kind == "band" else None


@dataclass(frozen=True)
class GenericDecomposition:
    beta: tuple[int, ...]
    summands: tuple[tuple[Summand, int], ...]

    @property
    def count(self) -> int:
        return sum(k for _, k in self.summands)

    def as_dict(self) -> dict:
        return {
            "beta": list(self.beta),
            "count": self.count,
            "summands": [
                {
                    "kind": sm.kind,
                    "dimension_vector": list(sm.dimension_vector),
                    **({"band": list(sm.r)} if sm.kind == "band" else {"r": list(sm.r), "s": list(sm.s)}),
                    "multiplicity": k,
                }
                for sm, k in self.summands
            ],
        }


def generic_decomposition(c: ComponentSpec) -> GenericDecomposition:
    if c.kind not in ("band", "string"):
        raise ValueError("generic decomposition is computed for band and string components only")
    comps = decompose_graph(build_updown_graph(c))
    tally = Counter(Summand(g.kind, g.dimension_vector, *g.ranks()) for g in comps)
    ordered = tuple(sorted(tally.items(), key=lambda kv: (kv[0].kind, kv[0].dimension_vector, kv[0].r, kv[0].s)))
    return GenericDecomposition(c.beta, ordered)


# -- reductions -----------------------------------------------------------------


@dataclass
class Step:
    rule: str
    position: int | None
    before: tuple
    after: tuple
    added: int = 0


def reduce_band(m: Sequence[int]) -> tuple[int, list[Step]]:
    """Number of summands of the band component [m_n, ..., m_1] by the reduction rules.

    Rules a-c shorten the vector or lower an entry; once at most three entries
    remain the count is closed by gcd formulas.  Rule b is also applied at an end
    entry, with the missing neighbour read as 0.
    """
    m = [int(x) for x in m]
    if not m or any(x < 1 for x in m):
        raise ValueError(f"band data must be positive: {m}")
    trace: list[Step] = []
    count = 0
    while len(m) > 3:
        before = tuple(m)
        i = next((k for k in range(len(m) - 1) if m[k] == m[k + 1]), None)
        if i is not None:
            del m[i + 1]
            trace.append(Step("a", i, before, tuple(m)))
            continue
        padded = [0, *m, 0]
        interior = [k for k in range(1, len(m) - 1) if m[k] > max(m[k - 1], m[k + 1])]
        if interior:
            k = interior[0]
            left, right = m[k - 1], m[k + 1]
            if left == right:
                added = m[k] - left
                count += added
                m[k] = left
                trace.append(Step("c", k, before, tuple(m), added))
            else:
                m[k] -= abs(left - right)
                trace.append(Step("b", k, before, tuple(m)))
            continue
        k = max(range(len(m)), key=lambda q: (m[q], -q))
        left, right = padded[k], padded[k + 2]
        m[k] -= abs(left - right)
        trace.append(Step("b", k, before, tuple(m)))
    before = tuple(m)
    if len(m) == 3:
        closed, rule = math.gcd(m[1], abs(m[0] - m[2])), "e"
    elif len(m) == 2:
        closed, rule = math.gcd(m[0], m[1]), "d"
    else:
        closed, rule = m[0], "single"
    trace.append(Step(rule, None, before, before, closed))
    return count + closed, trace


def _swap(r, s):
    return s, r


def _local_moves(beta, r, s, trace, depth=0):
    """Count components of Gamma(beta; r, s) by count-preserving local moves.

    Moves: split at an empty position or an empty transition; strip vertex pairs
    joined by both colours; contract a pass-through position; lower a locally
    band-like transition by the rank difference of its neighbours.  Whatever is
    left is counted on the residual graph.
    """
    beta, r, s = list(beta), list(r), list(s)
    total = 0
    while True:
        n = len(beta) - 1
        state = (tuple(beta), tuple(r), tuple(s))
        if n == 0:
            trace.append(Step("points", None, state, state, beta[0]))
            return total + beta[0]
        # empty ends
        if beta[0] == 0:
            beta, r, s = beta[1:], *_swap(s[1:], r[1:])
            trace.append(Step("trim", 0, state, (tuple(beta), tuple(r), tuple(s))))
            continue
        if beta[-1] == 0:
            beta, r, s = beta[:-1], r[:-1], s[:-1]
            trace.append(Step("trim", n, state, (tuple(beta), tuple(r), tuple(s))))
            continue
        # split at an empty transition or an empty interior position
        cut = next((p for p in range(n) if r[p] == 0 and s[p] == 0), None)
        if cut is not None:
            left = (beta[: cut + 1], r[:cut], s[:cut])
            right_r, right_s = r[cut + 1 :], s[cut + 1 :]
            if (cut + 1) % 2:
                right_r, right_s = right_s, right_r
            right = (beta[cut + 1 :], right_r, right_s)
            trace.append(Step("split", cut, state, (left, right)))
            return total + _local_moves(*left, trace, depth + 1) + _local_moves(*right, trace, depth + 1)
        # rows between the upper and lower blocks touch no edge at all
        padded_r, padded_s = [0, *r, 0], [0, *s, 0]
        for c in range(n + 1):
            # at position c the incoming transition is c - 1, the outgoing one c
            tops, bottoms = [], []
            for t in (c - 1, c):
                rr, ss = padded_r[t + 1], padded_s[t + 1]
                top, bottom = (rr, ss) if t % 2 == 0 else (ss, rr)
                tops.append(top)
                bottoms.append(bottom)
            k = beta[c] - max(tops) - max(bottoms)
            if k > 0:
                beta[c] -= k
                total += k
                trace.append(Step("isolated", c, state, (tuple(beta), tuple(r), tuple(s)), k))
                break
        else:
            k = 0
        if k > 0:
            continue
        # pairs joined by both colours
        p = next((p for p in range(n) if beta[p] == beta[p + 1] and r[p] + s[p] > beta[p]), None)
        if p is not None:
            k = r[p] + s[p] - beta[p]
            beta[p] -= k
            beta[p + 1] -= k
            r[p] -= k
            s[p] -= k
            total += k
            trace.append(Step("double", p, state, (tuple(beta), tuple(r), tuple(s)), k))
            continue
        # contract a position where every vertex passes straight through
        c = next(
            (
                c
                for c in range(1, n)
                if r[c - 1] + r[c] == beta[c] == s[c - 1] + s[c] and r[c - 1] == s[c] and s[c - 1] == r[c]
            ),
            None,
        )
        if c is not None:
            tail_r, tail_s = s[c + 1 :], r[c + 1 :]
            beta = beta[:c] + beta[c + 1 :]
            r = r[:c] + tail_r
            s = s[:c] + tail_s
            trace.append(Step("contract", c, state, (tuple(beta), tuple(r), tuple(s))))
            continue
        # Euclid step on a transition that looks locally like a band
        moved = False
        for p in range(n):
            if r[p] != s[p]:
                continue
            rho = r[p]
            a = r[p - 1] if p > 0 else 0
            b = r[p + 1] if p < n - 1 else 0
            if p > 0 and s[p - 1] != a or p < n - 1 and s[p + 1] != b:
                continue
            if beta[p] != a + rho or beta[p + 1] != rho + b or rho <= max(a, b) or a == b:
                continue
            d = abs(a - b)
            beta[p] -= d
            beta[p + 1] -= d
            r[p] -= d
            s[p] -= d
            trace.append(Step("euclid", p, state, (tuple(beta), tuple(r), tuple(s))))
            moved = True
            break
        if moved:
            continue
        residual = count_components(beta, r, s)
        trace.append(Step("residual", None, state, state, residual))
        return total + residual


def reduce_string(c: ComponentSpec) -> tuple[int, list[Step]]:
    """N(beta; r, s) for a string component via count-preserving reductions."""
    if not is_string_component(c):
        raise ValueError("reduce_string needs a string component")
    trace: list[Step] = []
    return _local_moves(c.beta, c.r, c.s, trace), trace


def residual_share(trace: list[Step]) -> int:
    """How many summands were left to the residual graph count."""
    return sum(st.added for st in trace if st.rule == "residual")


# -- DOT ------------------------------------------------------------------------


def _name(n: int, v: Vertex) -> str:
    return f"e_{n - v[0]}_{v[1]}"


def to_dot(g: UpDownGraph, name: str = "updown") -> str:
    """Plain-text Graphviz DOT: red edges solid, blue edges dashed."""
    n = g.n
    lines = [f"graph {name} {{", "  node [shape=point];"]
    for v in g.vertices():
        lines.append(f"  {_name(n, v)} [pos=\"{v[0]},{-v[1]}!\"];")
    for (u, v), colour in g.edges():
        style = "solid" if colour == "red" else "dashed"
        lines.append(f"  {_name(n, u)} -- {_name(n, v)} [color={colour}, style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_as_dict(g: UpDownGraph) -> dict:
    n = g.n
    return {
        "beta": list(g.beta),
        "vertices": [_name(n, v) for v in g.vertices()],
        "red": [[_name(n, u), _name(n, v)] for (u, v), c in g.edges() if c == "red"],
        "blue": [[_name(n, u), _name(n, v)] for (u, v), c in g.edges() if c == "blue"],
        "components": [
            {"kind": comp.kind, "dimension_vector": list(comp.dimension_vector)} for comp in decompose_graph(g)
        ],
    }


def band_graph(m: Sequence[int]) -> UpDownGraph:
    return build_updown_graph(band_component(m))
