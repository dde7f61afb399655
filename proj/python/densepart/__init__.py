"""Density partition functions of graphs: exact oracle, Taylor approximations,
dense-subset extraction and zero-location experiments."""

from ._densepart import (
    BudgetExceeded,
    ConvergenceError,
    Graph,
    IdentityCheck,
    ApproxResult,
    SubsetDensity,
    ZeroFreeParams,
    ZeroSummary,
    approx,
    complete_graph,
    den_exact,
    density,
    expectation_identity_check,
    extract_subset,
    h_derivatives,
    parse_edge_list,
    random_gnp,
    rho_for,
    run_zero_experiment,
    solve_params,
)

__all__ = [
    "ApproxResult",
    "BudgetExceeded",
    "ConvergenceError",
    "Graph",
    "IdentityCheck",
    "SubsetDensity",
    "ZeroFreeParams",
    "ZeroSummary",
    "approx",
    "complete_graph",
    "den_exact",
    "density",
    "expectation_identity_check",
    "extract_subset",
    "h_derivatives",
    "parse_edge_list",
    "random_gnp",
    "rho_for",
    "run_zero_experiment",
    "solve_params",
]
