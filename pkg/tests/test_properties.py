"""Property-based checks of the structural invariants."""

import math

import numpy as np
from hypothesis import HealthCheck, given, settings, strategies as st

from stringalg.algebra import (
    alternating_sum,
    band_component,
    check_ranks,
    enumerate_components,
    euler_form,
    tits_form,
)
from stringalg.ext import check_resolution, hom_ext_dims, projective_resolution
from stringalg.graph import (
    band_graph,
    build_updown_graph,
    count_components,
    decompose_graph,
    generic_decomposition,
    is_isomorphic_to_rebuilt,
    reduce_band,
    reduce_string,
)
from stringalg.linalg import PrimeField
from stringalg.matching import is_even, is_symmetric, is_unmixed
from stringalg.modules import ModuleSpec, band_count, build_module
from stringalg.roots import (
    build_root_system,
    characteristic_weight,
    contains_semiinvariant,
    evaluate,
    extract_matching,
    orbit_partition,
)
from stringalg.toric import (
    classify_ring,
    control_equations,
    decomposes,
    enumerate_matchings,
    hilbert_basis,
    reduce_matching,
)

FAST = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

dims = st.lists(st.integers(0, 4), min_size=2, max_size=5)
bands = st.lists(st.integers(1, 4), min_size=1, max_size=4)
small_bands = st.lists(st.integers(1, 3), min_size=1, max_size=3)


# -- algebra -------------------------------------------------------------------------


@FAST
@given(dims)
def test_euler_diagonal_is_tits(beta):
    assert euler_form(beta, beta) == tits_form(beta) == alternating_sum(beta) ** 2


@FAST
@given(dims)
def test_components_are_maximal_and_incomparable(beta):
    comps = enumerate_components(beta)
    pairs = [c.r + c.s for c in comps]
    for c in comps:
        for seq, other in ((c.r, c.s), (c.s, c.r)):
            assert check_ranks(beta, seq)
            for i in range(len(seq)):
                bumped = list(seq)
                bumped[i] += 1
                assert not check_ranks(beta, bumped)
    for a in pairs:
        for b in pairs:
            if a != b:
                assert not all(x <= y for x, y in zip(a, b))


@FAST
@given(bands)
def test_band_beta_telescopes(m):
    assert alternating_sum(band_component(m).beta) == 0


# -- graphs ----------------------------------------------------------------------------


@FAST
@given(bands)
def test_band_graph_degrees(m):
    g = band_graph(m)
    red = [e for e, col in g.edges() if col == "red"]
    blue = [e for e, col in g.edges() if col == "blue"]
    assert len(red) == len(blue) == sum(m)
    nb = g.neighbours()
    assert all(set(nb[v]) == {"red", "blue"} for v in g.vertices())


@FAST
@given(bands)
def test_reduce_band_counts_components(m):
    c = band_component(m)
    assert reduce_band(m)[0] == count_components(c.beta, c.r, c.s)


@FAST
@given(dims)
def test_reduce_string_counts_components(beta):
    for c in enumerate_components(beta):
        if c.kind == "string":
            assert reduce_string(c)[0] == count_components(c.beta, c.r, c.s)


@FAST
@given(dims)
def test_component_levels_sum_to_beta(beta):
    for c in enumerate_components(beta):
        comps = decompose_graph(build_updown_graph(c))
        total = np.sum([k.dimension_vector for k in comps], axis=0) if comps else np.zeros(len(beta), int)
        assert tuple(int(x) for x in total) == tuple(beta)
        if c.kind in ("band", "string") and any(beta):
            dec = generic_decomposition(c)
            summed = np.sum([np.array(sm.dimension_vector) * k for sm, k in dec.summands], axis=0)
            assert tuple(int(x) for x in summed) == tuple(beta)


@FAST
@given(bands)
def test_band_components_rebuild(m):
    for comp in decompose_graph(band_graph(m)):
        assert comp.kind == "band" and is_isomorphic_to_rebuilt(comp)


@FAST
@given(st.integers(1, 12), st.integers(1, 12), st.integers(1, 12))
def test_small_band_gcd_formulas(a, b, c):
    assert reduce_band([a, b])[0] == math.gcd(a, b)
    assert reduce_band([a, b, c])[0] == math.gcd(b, abs(a - c))


# -- modules and ext ---------------------------------------------------------------------


@FAST
@given(dims)
def test_relations_hold(beta):
    fld = PrimeField()
    for c in enumerate_components(beta):
        assert build_module(ModuleSpec.updown(c), fld).relations_hold()


@FAST
@given(small_bands)
def test_band_resolution(m):
    fld = PrimeField()
    spec = ModuleSpec.updown(band_component(m))
    res = projective_resolution(spec, fld)
    assert res.length <= 1
    p0, p1 = np.array(res.dimension_vector(0)), np.array(res.dimension_vector(1))
    assert tuple(p0 - p1) == band_component(m).beta
    assert check_resolution(res, build_module(spec, fld))


@settings(max_examples=25, deadline=None)
@given(small_bands, small_bands, st.integers(0, 10**6))
def test_hom_minus_ext_is_euler(m1, m2, seed):
    if len(m1) != len(m2):
        m2 = (m2 * 4)[: len(m1)]
    c1, c2 = band_component(m1), band_component(m2)
    rng = np.random.default_rng(seed)
    draw = lambda c: [int(x) for x in rng.integers(1, 1000, size=band_count(c))]
    h, e = hom_ext_dims(ModuleSpec.updown(c1, draw(c1)), ModuleSpec.updown(c2, draw(c2)))
    assert h - e == euler_form(c1.beta, c2.beta)


# -- roots and matchings -----------------------------------------------------------------


@FAST
@given(bands)
def test_critical_orbits(m):
    parts = orbit_partition(build_root_system(m))
    crit = parts.critical_orbits()
    assert len(crit) == len(m) - 1
    assert all(len(o.critical) == 2 for o in crit)


@FAST
@given(bands)
def test_extracted_matching_is_regular(m):
    t = extract_matching(m)
    assert is_symmetric(t) and is_even(t) and is_unmixed(t)


@FAST
@given(bands)
def test_characteristic_weights(m):
    r = build_root_system(m)
    parts = orbit_partition(r)
    total = None
    for orbit in parts.noncritical_orbits():
        w = characteristic_weight(r, orbit)
        assert contains_semiinvariant(w, r, parts)
        assert all(x == 0 for side in w.last_parts() for x in side)
        f = evaluate(w, r)
        assert all(f[e] == int(e in orbit.elements) for e in r.elements)
        total = w if total is None else total + w
    if total is not None:
        assert contains_semiinvariant(total, r, parts)
        crit = {e for o in parts.critical_orbits() for e in o.elements}
        f = evaluate(total, r)
        assert all(f[e] == int(e not in crit) for e in r.elements)


# -- toric --------------------------------------------------------------------------------

MATCHINGS = [t for n in range(2, 6) for t in enumerate_matchings(n)]


@FAST
@given(st.sampled_from(MATCHINGS), st.lists(st.integers(0, 2), min_size=10, max_size=10))
def test_hilbert_basis_complete_and_minimal(t, raw):
    cs = control_equations(t)
    gens = hilbert_basis(cs)
    for g in gens:
        others = [h for h in gens if h != g]
        assert not decomposes(g, others)
    # any nonnegative combination is a solution and decomposes back
    coeffs = (raw * len(gens))[: len(gens)]
    x = tuple(int(v) for v in np.sum([np.array(g) * k for g, k in zip(gens, coeffs)], axis=0))
    assert cs.satisfied(x) and decomposes(x, gens)


@FAST
@given(st.sampled_from(MATCHINGS))
def test_relation_sides_balance(t):
    gens = hilbert_basis(control_equations(t))
    for r in classify_ring(t).relations:
        lhs, rhs = r.sides()
        deg = lambda side: tuple(int(v) for v in np.sum([gens[i] for i in side], axis=0))
        assert deg(lhs) == deg(rhs)


@FAST
@given(st.sampled_from(MATCHINGS))
def test_reduction_keeps_codim_and_relation_degrees(t):
    red, k = reduce_matching(t)
    a, b = classify_ring(t), classify_ring(red)
    assert a.codim == b.codim
    assert sorted(len(r.sides()[0]) + len(r.sides()[1]) for r in a.relations) == sorted(
        len(r.sides()[0]) + len(r.sides()[1]) for r in b.relations
    )
    assert a.dim == b.dim + 2 * k
