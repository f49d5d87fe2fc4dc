"""Pure n-simplicial complexes: reduced paths, simplicial cycles and tree
certification, backed by the C++ core."""

from ._core import (
    PureComplex,
    SimplicialError,
    binomial,
    build_complex,
    canonical_form,
    certify_by_acyclic_counts,
    certify_by_complete_ordering,
    certify_by_count,
    certify_by_definition,
    certify_by_unique_paths,
    certify_tree,
    clique_complex,
    compare_paths,
    components,
    count_bounds,
    dewdney_count_formula,
    enumerate_complexes,
    find_circuit,
    find_cycle,
    find_ordering,
    find_path,
    find_reduced_path,
    fixtures,
    is_acyclic,
    is_connected,
    reduce_walk,
    search_counterexamples,
    test_conjecture,
    tree_count_formula,
    validate_circuit,
    validate_cycle,
    validate_path,
    validate_reduced_path,
    validate_walk,
)

__all__ = [
    "PureComplex",
    "SimplicialError",
    "binomial",
    "build_complex",
    "canonical_form",
    "certify_by_acyclic_counts",
    "certify_by_complete_ordering",
    "certify_by_count",
    "certify_by_definition",
    "certify_by_unique_paths",
    "certify_tree",
    "clique_complex",
    "compare_paths",
    "components",
    "count_bounds",
    "dewdney_count_formula",
    "enumerate_complexes",
    "find_circuit",
    "find_cycle",
    "find_ordering",
    "find_path",
    "find_reduced_path",
    "fixtures",
    "is_acyclic",
    "is_connected",
    "reduce_walk",
    "search_counterexamples",
    "test_conjecture",
    "tree_count_formula",
    "validate_circuit",
    "validate_cycle",
    "validate_path",
    "validate_reduced_path",
    "validate_walk",
]

__version__ = "0.1.0"
