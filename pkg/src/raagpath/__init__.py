"""Graph-theoretic certificates for embeddings between graph groups.

The group of a graph here takes one generator per vertex and lets two
generators commute exactly when their vertices are NOT adjacent.  A map of
graphs induces a homomorphism against its direction by sending each
generator to the ordered product of its preimages; this package provides the
word engine for such groups, path-lifting checkers for immersions, a lazy
universal cover with deck transformations, and certifiers that settle
injectivity of the induced homomorphism in both directions where the
machinery applies.
"""

from .errors import (
    BadParameter,
    BaseMismatch,
    CertificateGap,
    Disconnected,
    DuplicateVertex,
    EmptyF,
    EmptyGraph,
    GraphMismatch,
    ImageEscapesCodomain,
    LoopEdge,
    NotAMapOfGraphs,
    NotForest,
    NotImmersion,
    NotSurjective,
    ParseError,
    ProjectionMismatch,
    RaagError,
    RootMismatch,
    StartMismatch,
    UnknownEndpoint,
    UnknownVertex,
)
from .graph import (
    Graph,
    complement,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    induced_subgraph,
    is_connected,
    is_forest,
    is_induced_subgraph,
    is_tree,
    link,
    lowerbound_graph,
    make_graph,
    make_order,
    path_graph,
    remove,
    restrict_order,
    standard_graph,
)
from .morphism import (
    GraphMap,
    compose,
    cycle_to_path_map,
    identity_map,
    is_covering,
    is_immersion,
    is_vertex_surjective,
    make_map,
    restrict,
)
from .paths import (
    LiftFailure,
    LiftReport,
    PathSeq,
    all_induced_paths_from,
    all_semi_induced_paths_from,
    has_ipl,
    has_pl,
    has_sipl,
    is_induced,
    is_semi_induced,
    lift_path,
    lift_path_with_prefix,
    make_path,
    maximal_induced_paths_from,
    maximal_paths_from,
    maximal_semi_induced_paths_from,
    minimal_failing_path,
)
from .words import (
    Letter,
    Word,
    canonical_word,
    commutes,
    concat,
    empty_word,
    enumerate_reduced_words,
    equal_elements,
    find_cancellation,
    find_innermost_cancellation,
    inverse_word,
    is_reduced,
    is_trivial,
    length_elem,
    make_word,
    parse_word,
    random_reduced_word,
    reduce_word,
    support_elem,
    support_letters,
    word_to_text,
)
from .cover import (
    CoverEmbedding,
    Deck,
    EnlargedCover,
    Walk,
    apply_deck,
    compose_decks,
    cover_step,
    deck_from_pair,
    embed_forest,
    empty_walk,
    enlarge,
    extend_walk_along,
    graph_from_walks,
    identity_deck,
    invert_deck,
    make_deck,
    make_walk,
    sigma_set,
    spanning_tree_lift,
    walk_prefixes,
)
from .hom import (
    DistortionStats,
    OrderedMap,
    SurvivingWitness,
    innermost_spans,
    ipl_witness_word,
    kernel_search,
    length_distortion_sample,
    make_ordered_map,
    phi_star_generator,
    phi_star_word,
    surviving_scan,
    surviving_violation_search,
)
from .certify import (
    CdkDecision,
    Certificate,
    LowerBoundSummary,
    PeelStep,
    SynthesizedTree,
    Verdict,
    certificate_to_dict,
    certify_injective,
    certify_noninjective,
    decide_cycle_into_path,
    lowerbound_count,
    synthesize_sipl_tree,
    validate_certificate,
)
from .reports import (
    ExperimentReport,
    default_bound_graphs,
    run_bounds,
    run_cdk_grid,
    verify_report,
    write_report,
)

__version__ = "0.1.0"
