"""Regrading of weighted quiver presentations and representation transport.

A weighted quiver presents a graded algebra as paths modulo uniform
relations.  This package splits heavy arrows until every generator sits in
degree one, rewrites the relations along the way, and transports graded
representations across each split in both directions, with exact linear
algebra throughout.  The :mod:`~quiver_regrade.verify` module turns the
structural claims into seeded property suites.
"""

from .fields import (
    DEFAULT_PRIME,
    GF,
    PRIME_ENV_VAR,
    QQ,
    Field,
    PrimeField,
    Rationals,
    default_prime,
    parse_field_spec,
)
from .fileformat import (
    Diagnostic,
    PresentationError,
    parse_presentation,
    render_representation,
    serialize_presentation,
)
from .hilbert import DEFAULT_MAX_DEGREE, graded_dim, graded_dim_naive
from .linalg import Matrix, nullspace, rank, rank_naive, rref, solve_columns
from .paths import (
    IdealPresentation,
    Path,
    PathCountLimit,
    PathSum,
    UniformElement,
    enumerate_paths,
    format_path_sum,
    multiply_paths,
    multiply_sums,
    path_from_arrows,
    trivial_path,
    uniform_components,
)
from .quiver import (
    Arrow,
    WeightedQuiver,
    fresh_split_names,
    fresh_vertex_name,
    validate,
    weight_discrepancy,
)
from .regrade import (
    RegradeResult,
    SplitError,
    SplitTrace,
    pick_split_target,
    regrade,
    rewrite_ideal,
    rewrite_path,
    rewrite_sum,
    split_arrow,
)
from .representation import (
    DegreeWindow,
    GradedMorphism,
    GradedRep,
    MorphismSquareError,
    QuiverMismatchError,
    WindowOverflowError,
    collapse_morphism,
    collapse_rep,
    collapse_rep_along,
    compose_morphisms,
    counit,
    evaluate_path,
    evaluate_relation,
    expand_morphism,
    expand_rep,
    expand_rep_along,
    identity_morphism,
    morphism_cokernel,
    morphism_kernel,
    satisfies,
    shift,
    zero_rep,
)
from .verify import (
    PropertyResult,
    SuiteConfig,
    SuiteReport,
    render_reports,
    reports_to_json,
    run_functor_suite,
    run_hilbert_suite,
    run_split_suite,
    run_suites,
)

__all__ = [
    "DEFAULT_MAX_DEGREE",
    "DEFAULT_PRIME",
    "GF",
    "PRIME_ENV_VAR",
    "QQ",
    "Arrow",
    "DegreeWindow",
    "Diagnostic",
    "Field",
    "GradedMorphism",
    "GradedRep",
    "IdealPresentation",
    "Matrix",
    "MorphismSquareError",
    "Path",
    "PathCountLimit",
    "PathSum",
    "PresentationError",
    "PrimeField",
    "PropertyResult",
    "QuiverMismatchError",
    "Rationals",
    "RegradeResult",
    "SplitError",
    "SplitTrace",
    "SuiteConfig",
    "SuiteReport",
    "UniformElement",
    "WeightedQuiver",
    "WindowOverflowError",
    "collapse_morphism",
    "collapse_rep",
    "collapse_rep_along",
    "compose_morphisms",
    "counit",
    "default_prime",
    "enumerate_paths",
    "evaluate_path",
    "evaluate_relation",
    "expand_morphism",
    "expand_rep",
    "expand_rep_along",
    "format_path_sum",
    "fresh_split_names",
    "fresh_vertex_name",
    "graded_dim",
    "graded_dim_naive",
    "identity_morphism",
    "morphism_cokernel",
    "morphism_kernel",
    "multiply_paths",
    "multiply_sums",
    "nullspace",
    "parse_field_spec",
    "parse_presentation",
    "path_from_arrows",
    "pick_split_target",
    "rank",
    "rank_naive",
    "regrade",
    "render_representation",
    "render_reports",
    "reports_to_json",
    "rewrite_ideal",
    "rewrite_path",
    "rewrite_sum",
    "rref",
    "run_functor_suite",
    "run_hilbert_suite",
    "run_split_suite",
    "run_suites",
    "satisfies",
    "serialize_presentation",
    "shift",
    "solve_columns",
    "split_arrow",
    "trivial_path",
    "uniform_components",
    "validate",
    "weight_discrepancy",
    "zero_rep",
]
