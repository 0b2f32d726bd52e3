"""Graphs defined on finite groups: supergraph constructions over five base
adjacencies and three coarsenings, compressed and quotient forms, composition
identities for the Wiener index, prime-cycle universality embeddings, and
generating-graph containments."""

from .constructions import (
    KINDS,
    PARTITIONS,
    Partition,
    base_adjacent,
    build_base_graph,
    build_compressed,
    build_partition,
    build_supergraph,
    hierarchy_report,
    quotient_supergraph,
)
from .families import (
    FAMILIES,
    cscom,
    escom,
    family_graph,
    structure_expr,
    verify_family,
    wiener_closed_form,
)
from .generation import (
    containment_checks,
    equality_scan,
    generating_graph,
    invariable_generating_graph,
)
from .graphs import (
    Complete,
    Composition,
    CompositionWitness,
    DisconnectedGraphError,
    Empty,
    Graph,
    GraphExpr,
    Join,
    Union,
    compose_graphs,
    distance_matrix,
    eval_expr,
    induced_subgraph,
    intersection,
    is_comparability,
    is_isomorphic,
    strong_product,
    wiener_index,
    wiener_supergraph_formula,
    wiener_via_composition,
)
from .groups import (
    ConjugacyClass,
    FiniteGroup,
    InvalidGroupSpec,
    SizeCapError,
    Subgroup,
    SubgroupFlags,
    alternating,
    centralizer,
    classify_subgroup,
    conjugacy_classes,
    cyclic,
    dihedral,
    element_order,
    generated_subgroup,
    make_group,
    perm_group_order,
    product,
    quaternion,
    symmetric,
)
from .universality import (
    EmbeddingCertificate,
    class_adjacency,
    embed_graph,
    enhanced_embed,
    primes_first,
    step3_embedding,
    strong_product_identity_check,
)

__version__ = "0.1.0"
