"""Exact arithmetic on the cuboid characteristic polynomials Q_pq."""

from ._core import (
    CheckpointMismatch,
    ContainmentFailure,
    CuboidError,
    HypothesisNotMet,
    InvalidSeed,
    NotARoot,
    NotSquarefree,
    admissible,
    build_characteristic,
    build_qpq,
    certify_roots,
    check_disjointness,
    classify_region,
    forward_intervals,
    half_polynomial,
    integer_sqrt_floor,
    isolate_roots,
    reverse_intervals,
    run_identities,
    run_search,
    search_seed,
    sign_checks,
    upper_bound_floor,
    upper_bound_holds,
    verify_correspondence,
    verify_factorization,
    verify_reversion,
)

__version__ = "0.1.0"
