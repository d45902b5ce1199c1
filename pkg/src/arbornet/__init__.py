"""arbornet: distance-hereditary graph recognition and explanation by
labelled multi-rooted arboreal networks."""

from .graphs import (
    FalseTwin,
    ForbiddenWitness,
    Graph,
    GraphClassReport,
    Initial,
    NotDistanceHereditary,
    Pendant,
    TrueTwin,
    classify,
    extension_sequence,
    is_cograph,
    is_distance_hereditary,
    is_ptolemaic,
    replay,
)
from .networks import (
    DirectedNetwork,
    LabelledArborealNetwork,
    NetworkViolation,
    connectivity_check,
    explained_graph,
    is_arboreal,
    is_binary,
    label_arboreal_network,
    lca,
    leaf_descendants,
    shared_ancestry_graph,
    validate_network,
    verify_explains,
)
from .construct import (
    BasicGalledTree,
    CycleKind,
    NotCograph,
    basic_galled_to_two_root,
    certify_basic_galled,
    check_two_root_conditions,
    classify_cycle,
    cotree,
    explain_dh,
    merge_disjoint,
    normalize_basic_to_zero,
    remove_leaf,
    restrict_to,
    two_root_to_basic_galled,
)
from .compat import (
    CompatibilityReport,
    Symbol,
    SymbolicMap,
    build_symbolic_map,
    check_axioms_A,
    check_conditions_E,
    find_asymmetric_diamond,
    support_graph,
)
from .oracle import (
    EnumerationBudget,
    EnumerationTruncated,
    enumerate_arboreal_networks,
    enumerate_graphs,
    explainable_bruteforce,
    run_suite,
)

__version__ = "0.1.0"
