import itertools

import numpy as np
import pytest

from stringalg.matching import Matching, is_even, is_symmetric
from stringalg.roots import extract_matching
from stringalg.toric import (
    brute_force_minimal,
    classify_ring,
    conjecture_scan,
    control_equations,
    decomposes,
    enumerate_matchings,
    hilbert_basis,
    invariance_oracle,
    minimal_relations,
    monomial,
    parse_monomial,
    reduce_matching,
    reverse_matching,
    strip_pair,
)

SEVEN = extract_matching([1, 2, 2, 1, 2, 3, 1])


def test_identity_n2_equation():
    cs = control_equations(Matching.identity(2))
    assert cs.describe() == ["u1+u2 = v1+v2"]
    assert hilbert_basis(cs) == [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)]


def test_1221231_equations():
    assert control_equations(SEVEN).describe() == [
        "u1+u2 = v3+v4",
        "u3+u4 = v1+v2",
        "u2+u3 = v2+v3",
        "u4+u5 = v6+v7",
        "u6+u7 = v4+v5",
        "u5+u6 = v5+v6",
    ]


def test_adjacent_x_link_gives_two_terms():
    t = Matching.from_pairs(3, [("x1", "x2"), ("y1", "y2")])
    assert control_equations(t).describe() == ["u1 = u3", "v1 = v3"]


def test_n1_is_polynomial():
    cl = classify_ring(Matching.identity(1))
    assert cl.kind == "polynomial" and cl.generators == [(1, 0), (0, 1)]


def test_control_equations_reject_asymmetric():
    with pytest.raises(ValueError):
        control_equations(Matching.from_pairs(4, [("x1", "x2"), ("y1", "y3"), ("x3", "y2")]))


def test_monomial_roundtrip():
    x = (1, 0, 2, 0, 1, 1)
    text = monomial(3, x)
    assert text == "A1*A3^2*B2*B3"
    assert parse_monomial(3, text) == x


def test_1221231_hilbert_basis_and_brute_force():
    cs = control_equations(SEVEN)
    hb = hilbert_basis(cs)
    assert len(hb) == 11 and all(max(g) == 1 for g in hb)
    assert all(cs.satisfied(g) for g in hb)


@pytest.mark.parametrize("t", [Matching.identity(2), Matching.identity(3), enumerate_matchings(3)[0]])
def test_hilbert_basis_matches_box_oracle(t):
    cs = control_equations(t)
    minimal, _ = brute_force_minimal(cs, bound=3)
    assert sorted(hilbert_basis(cs), reverse=True) == minimal


@pytest.mark.parametrize("n, count", [(2, 1), (3, 3), (4, 7)])
def test_enumeration_counts(n, count):
    found = enumerate_matchings(n)
    assert len(found) == count and all(is_symmetric(t) for t in found)


@pytest.mark.parametrize("n, count", [(4, 2), (5, 4), (6, 8)])
def test_irreducible_even_unmixed_counts(n, count):
    assert len(enumerate_matchings(n, ["symmetric", "even", "unmixed", "irreducible"])) == count


def test_reduce_trivial_cases():
    assert reduce_matching(Matching.identity(1)) == (Matching.identity(1), 0)
    assert reduce_matching(Matching.identity(5)) == (Matching.identity(5), 0)


def test_enumeration_flags():
    evens = enumerate_matchings(5, ["even"])
    assert evens and all(is_even(t) for t in evens)
    assert len(enumerate_matchings(5, up_to_reversal=True)) < len(enumerate_matchings(5))
    with pytest.raises(ValueError):
        enumerate_matchings(3, ["nonsense"])


def test_reversal_is_involution():
    for t in enumerate_matchings(5):
        assert reverse_matching(reverse_matching(t)) == t


def test_relation_counts():
    assert classify_ring(Matching.identity(4)).relation_count == 1
    cl = classify_ring(SEVEN)
    assert (cl.kind, cl.codim, cl.relation_count, cl.dim) == ("not_complete_intersection", 3, 5, 8)
    assert not cl.provisional


def test_x1_x2_link_gives_polynomial_ring():
    t = Matching.from_pairs(3, [("x1", "x2"), ("y1", "y2")])
    assert classify_ring(t).kind == "polynomial"


@pytest.mark.parametrize("n", range(2, 9))
def test_identity_rings_are_hypersurfaces(n):
    cl = classify_ring(Matching.identity(n))
    assert cl.kind == "hypersurface" and len(cl.generators) == n + 2


def test_reduce_matching():
    t = Matching.from_pairs(4, [("x1", "x2"), ("y1", "y2"), ("x3", "y3")])
    r, k = reduce_matching(t)
    assert k == 1 and r == Matching.identity(2)
    assert strip_pair(t, 1) == r
    assert reduce_matching(SEVEN) == (SEVEN, 0)


def test_reduction_preserves_classification_up_to_polynomial_factor():
    for t in enumerate_matchings(5):
        r, k = reduce_matching(t)
        a, b = classify_ring(t), classify_ring(r)
        assert (a.relation_count, a.codim) == (b.relation_count, b.codim)
        assert a.dim == b.dim + 2 * k


@pytest.mark.parametrize("t", [Matching.identity(3), SEVEN, enumerate_matchings(4)[2]])
def test_invariance_oracle(t):
    assert invariance_oracle(t, max_degree=4)


def test_decomposes():
    gens = hilbert_basis(control_equations(Matching.identity(2)))
    assert decomposes((2, 0, 1, 1), gens)
    assert not decomposes((1, 0, 0, 0), gens)


# -- independent Markov-move oracle -------------------------------------------------


def _fiber(b, gens):
    """All exponent vectors e with sum e_i g_i = b, by plain recursion."""
    out = []

    def go(i, rest, acc):
        if i == len(gens):
            if not any(rest):
                out.append(tuple(acc))
            return
        g = gens[i]
        top = min((r // x for r, x in zip(rest, g) if x), default=0)
        for e in range(top + 1):
            go(i + 1, [r - e * x for r, x in zip(rest, g)], acc + [e])

    go(0, list(b), [])
    return out


def _connected(elements, moves):
    elements = set(elements)
    start = next(iter(elements))
    seen, stack = {start}, [start]
    while stack:
        e = stack.pop()
        for lhs, rhs in moves:
            for a, b in ((lhs, rhs), (rhs, lhs)):
                if all(x >= y for x, y in zip(e, a)):
                    f = tuple(x - y + z for x, y, z in zip(e, a, b))
                    if f not in seen:
                        seen.add(f)
                        stack.append(f)
    return seen == elements


@pytest.mark.parametrize("t", [Matching.identity(4), SEVEN, Matching.from_pairs(5, [("x1", "y3"), ("y1", "x3"), ("x2", "y2"), ("x4", "y4")])])
def test_relations_form_minimal_markov_basis(t):
    gens = hilbert_basis(control_equations(t))
    rels, _ = minimal_relations(gens, 4)
    moves = [(r.lhs, r.rhs) for r in rels]
    degrees = set()
    for size in range(2, 5):
        for combo in itertools.combinations_with_replacement(range(len(gens)), size):
            degrees.add(tuple(np.sum([gens[i] for i in combo], axis=0)))
    for b in degrees:
        fib = _fiber(b, gens)
        assert _connected(fib, moves), b
    for k, r in enumerate(rels):
        rest = moves[:k] + moves[k + 1 :]
        assert not _connected(_fiber(r.degree, gens), rest)


def test_relation_sides_have_equal_degree():
    gens = hilbert_basis(control_equations(SEVEN))
    for r in classify_ring(SEVEN).relations:
        lhs, rhs = r.sides()
        deg = lambda side: tuple(np.sum([gens[i] for i in side], axis=0))
        assert deg(lhs) == deg(rhs) == r.degree


def test_scan_small():
    rep = conjecture_scan(3, 4)
    assert rep["matchings_checked"] == 4
    assert rep["part_a"] == "none found" and rep["part_b"] == "none found"
    assert rep["summary"]["part_a"] == {"total": 0, "even": 0}
    assert rep["unstabilized"] == []


def test_scan_n5_findings_are_odd_only():
    rep = conjecture_scan(5, 4)
    for part in ("part_a", "part_b"):
        s = rep["summary"][part]
        assert s["even"] == 0
        if s["total"]:
            assert all(not f["even"] for f in rep[part])
