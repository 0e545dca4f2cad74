"""Workbench for finite higher-rank graphs and their span algebras.

Layers: graph presentation and path normal forms (`graph`, `parser`),
common-extension calculus (`calculus`), structural analyses
(`structure`), exact symbolic algebra (`rings`, `algebra`),
classification (`classify`), examples and generation (`corpus`), and the
CLI (`cli`).
"""

from .algebra import (
    AlgebraElement,
    NormalForm,
    SpanTerm,
    PiEClosure,
    boundary_representation,
    compare,
    entrance_isometries,
    equal,
    generalized_cycle_comparison,
    generator,
    grading_decompose,
    ideal_IH_span,
    is_zero,
    matrix_unit_ideal,
    multiply,
    normal_form,
    pi_closure,
    quotient_family,
    range_projection,
    scalar_quotient,
    span_term,
    star,
    support_paths,
    theta,
    verify_kp_relations,
    vertex_idempotent,
    zero,
)
from .calculus import (
    BoundarySegment,
    ExhaustivenessVerdict,
    MinimalPair,
    boundary_segments,
    ext_set,
    has_prefix,
    is_exhaustive,
    lambda_min,
    le_paths,
    mce,
    shift,
)
from .classify import (
    Verdict,
    check_simplicity,
    check_vertex_cycle_witnesses,
    classify,
)
from .corpus import GeneratorConfig, build, random_graph
from .errors import KpaError
from .graph import (
    Edge,
    KGraph,
    Path,
    Square,
    compose,
    factorize,
    omega_graph,
    subpath,
    vertex_at,
)
from .parser import parse_graph, parse_graph_file, serialize_graph
from .rings import IntegerRing, IntegersMod, RationalRing, ring_from_name
from .structure import (
    GeneralizedCycle,
    PeriodicityWitness,
    ThreeValued,
    aperiodicity_analysis,
    find_cycles,
    find_entrance,
    find_generalized_cycles,
    find_initial_cycles,
    hereditary_closure,
    initial_cycle_reaching,
    is_cofinal,
    is_generalized_cycle,
    is_hereditary,
    quotient_graph,
    sat_hereditary_lattice,
    saturated_closure,
)

__version__ = "0.1.0"
