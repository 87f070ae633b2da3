"""Generic decompositions and semi-invariant rings for the string algebras A(n)."""

from .algebra import (
    AlgebraSpec,
    ComponentSpec,
    band_beta,
    band_component,
    enumerate_components,
    euler_form,
    is_string_component,
    lemma1_weight_check,
    tits_form,
)
from .ext import ext_graph, hom_ext_dims, projective_resolution, verify_rigidity
from .graph import (
    UpDownGraph,
    build_updown_graph,
    decompose_graph,
    generic_decomposition,
    reduce_band,
    reduce_string,
    to_dot,
)
from .matching import Matching, matching_predicates
from .modules import ModuleSpec, build_module
from .roots import (
    WeightPair,
    build_root_system,
    characteristic_weight,
    contains_semiinvariant,
    extract_matching,
    orbit_partition,
    si_ring_structure,
    theorem_d_check,
)
from .toric import (
    classify_ring,
    conjecture_scan,
    control_equations,
    enumerate_matchings,
    hilbert_basis,
    invariance_oracle,
    minimal_relations,
    reduce_matching,
)

__version__ = "0.1.0"
