import itertools

import pytest

from stringalg.algebra import ComponentSpec, band_component, enumerate_components, euler_form
from stringalg.ext import (
    band_resolution,
    check_resolution,
    cocycle_dims,
    differential_matrix,
    ext_graph,
    extremal_vertices,
    hom_ext_dims,
    hom_ext_reps,
    minimal_resolution,
    projective_dimension_vector,
    projective_resolution,
    verify_rigidity,
)
from stringalg.linalg import PrimeField, RationalField, rank
from stringalg.modules import ModuleSpec, band_count, build_module, updown_edges

MIXED_23242 = ComponentSpec((2, 3, 2, 4, 2), (2, 0, 2, 2), (2, 1, 1, 2))


def test_simple_module_has_zero_maps():
    rep = build_module(ModuleSpec.string_word(2, [1]))
    assert rep.beta == (0, 1, 0)
    assert all(m.size == 0 for m in rep.a + rep.b)


def test_band_word_carries_scalar():
    fld = PrimeField()
    rep = build_module(ModuleSpec.band_word(1, [0, 1], "a", 3), fld)
    assert rep.a[0][0, 0] == 3 and rep.b[0][0, 0] == 1


@pytest.mark.parametrize(
    "spec",
    [
        ModuleSpec.string_word(2, [1, 1]),
        ModuleSpec.string_word(2, [0, 2]),
        ModuleSpec.band_word(1, [0, 1, 0], "a", 2),
        ModuleSpec.band_word(1, [0, 1], "a", 0),
        ModuleSpec.string_word(1, [0, 1], "c"),
    ],
)
def test_invalid_words(spec):
    with pytest.raises(ValueError):
        build_module(spec)


def test_alternating_word_satisfies_relations():
    rep = build_module(ModuleSpec.string_word(2, [2, 1, 0]))
    assert rep.relations_hold()


def test_updown_scalars_validated():
    c = band_component([1, 1])
    with pytest.raises(ValueError):
        updown_edges(c, (1, 2))
    with pytest.raises(ValueError):
        updown_edges(c, (0,))
    _, marked = updown_edges(c, (7,))
    assert list(marked.values()) == [7]


def test_projective_dimension_vectors():
    assert projective_dimension_vector(3, 1) == (0, 1, 2, 2)
    assert projective_dimension_vector(2, 2) == (0, 0, 1)


def test_band_11_resolution():
    res = projective_resolution(ModuleSpec.updown(band_component([1, 1])))
    assert res.summands(0) == ["P_2"] and res.summands(1) == ["P_0"]


def test_223_resolution():
    res = projective_resolution(ModuleSpec.updown(band_component([2, 2, 3]), (5,)))
    assert res.summands(0) == ["P_3", "P_1", "P_3"]
    assert res.summands(1) == ["P_0"] * 3
    d0, d1 = res.dimension_vector(0), res.dimension_vector(1)
    assert tuple(a - b for a, b in zip(d0, d1)) == (2, 4, 5, 3)


def test_simple_at_x0_is_projective():
    res = projective_resolution(ModuleSpec.string_word(1, [0]))
    assert res.summands(0) == ["P_0"] and res.length == 0


def test_uniserial_resolution():
    res = projective_resolution(ModuleSpec.string_word(2, [2, 1, 0]))
    assert [res.summands(j) for j in range(3)] == [["P_2"], ["P_1"], ["P_0"]]


@pytest.mark.parametrize("m", [[1, 1], [2, 3, 1], [2, 2, 3], [1, 2, 1], [3, 1, 2, 2]])
def test_band_resolutions_compose_to_zero(m):
    fld = PrimeField()
    spec = ModuleSpec.updown(band_component(m), tuple(range(3, 3 + band_count(band_component(m)))))
    res = band_resolution(spec, fld)
    assert check_resolution(res, build_module(spec, fld))


def test_minimal_resolution_of_band_agrees_in_shape():
    fld = PrimeField()
    spec = ModuleSpec.updown(band_component([2, 2, 3]), (5,))
    computed = minimal_resolution(build_module(spec, fld), max_degree=2)
    combinatorial = band_resolution(spec, fld)
    assert sorted(computed.summands(0)) == sorted(combinatorial.summands(0))
    assert sorted(computed.summands(1)) == sorted(combinatorial.summands(1))
    assert computed.summands(2) == []


def test_extremal_vertices_of_band_11():
    sources, sinks = extremal_vertices(band_component([1, 1]))
    assert sources == [(0, 1)] and sinks == [(2, 1)]


def test_hom_ext_band_11():
    c = band_component([1, 1])
    same = hom_ext_dims(ModuleSpec.updown(c, (3,)), ModuleSpec.updown(c, (3,)))
    other = hom_ext_dims(ModuleSpec.updown(c, (3,)), ModuleSpec.updown(c, (4,)))
    assert same == (1, 1) and other == (0, 0)


def test_string_module_is_a_brick():
    spec = ModuleSpec.updown(ComponentSpec((2, 1), (1,), (1,)))
    assert hom_ext_dims(spec, spec) == (1, 0)


def test_two_cycle_bands_use_the_scalar_once():
    # n = 1: every band is a red/blue double edge between the same two vertices
    c = band_component([1])
    assert hom_ext_dims(ModuleSpec.updown(c, (2,)), ModuleSpec.updown(c, (2,))) == (1, 1)


def test_rational_field_agrees():
    c = band_component([2, 3, 1])
    m, n = ModuleSpec.updown(c, (2,)), ModuleSpec.updown(c, (3,))
    assert hom_ext_dims(m, n, RationalField()) == hom_ext_dims(m, n, PrimeField())


def test_hom_ext_routes_agree_on_strings():
    fld = PrimeField()
    for beta in [(1, 2, 1, 1), (2, 3, 2), (1, 1, 2)]:
        for c in enumerate_components(beta):
            if c.kind != "string":
                continue
            k = band_count(c)
            a = build_module(ModuleSpec.updown(c, tuple(range(2, 2 + k))), fld)
            b = build_module(ModuleSpec.updown(c, tuple(range(9, 9 + k))), fld)
            assert hom_ext_reps(a, b) == cocycle_dims(a, b)


def test_presentation_matrix_injective():
    fld = PrimeField()
    for m in itertools.product(range(1, 4), repeat=3):
        res = band_resolution(ModuleSpec.updown(band_component(m), ()), fld)
        for c in range(4):
            mat = differential_matrix(res, 0, c, fld)
            if mat.size:
                assert rank(fld, mat) == mat.shape[1]


def test_rigidity_report():
    rep = verify_rigidity(band_component([2, 3, 1]), trials=5, seed=0)
    assert rep["passes"] == 5 and rep["failures"] == []
    assert all(r["hom"] - r["ext1"] == r["euler"] for r in rep["hom_ext_table"])
    assert verify_rigidity(MIXED_23242, trials=5, seed=0)["passes"] == 5


def test_rigidity_collision_reported():
    c = band_component([2, 4])  # two band summands
    rep = verify_rigidity(c, trials=1, scalars=((3, 3), (3, 3)))
    assert rep["failures"][0]["reason"] == "non-generic scalar collision"


def test_rigidity_is_deterministic():
    c = band_component([2, 2, 3])
    assert verify_rigidity(c, seed=7) == verify_rigidity(c, seed=7)


def test_rigidity_rejects_other_kinds():
    with pytest.raises(ValueError):
        verify_rigidity(ComponentSpec((2, 2), (1,), (1,)))


def test_ext_graph_band_11():
    eg = ext_graph(ModuleSpec.updown(band_component([1, 1])))
    assert len(eg.components) == 1
    kind, members, _ = eg.components[0]
    assert kind == "band" and len(members) == 2


def test_ext_graph_223():
    eg = ext_graph(ModuleSpec.updown(band_component([2, 2, 3])))
    bands = [c for c in eg.components if c[0] == "band"]
    assert len(bands) == 1 and len(bands[0][1]) == 6
    for kind, members, distinguished in eg.components:
        if kind == "string" and not distinguished:
            assert len(members) % 2 == 0


def test_ext_graph_needs_band():
    with pytest.raises(ValueError):
        ext_graph(ModuleSpec.updown(MIXED_23242))


def test_euler_pairs_on_bands():
    fld = PrimeField()
    for m1, m2 in [([1, 1], [2, 1]), ([2, 3, 1], [1, 1, 1]), ([1, 2], [2, 1])]:
        c1, c2 = band_component(m1), band_component(m2)
        h, e = hom_ext_dims(ModuleSpec.updown(c1, ()), ModuleSpec.updown(c2, ()), fld)
        assert h - e == euler_form(c1.beta, c2.beta)
