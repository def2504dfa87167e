"""Fractionally diffusive MG active scalar on the 3-torus."""

from ._mgslab import (
    ConfigError,
    EigenResult,
    Error,
    InvalidArgument,
    NoUnstableEigenvalue,
    Params,
    RootSign,
    critical_kappa_half,
    eigenvalue_bounds,
    experiment_names,
    growth_constant,
    max_divergence_residual,
    mg_symbol,
    run_config,
    run_json,
    solve_eigenvalue,
    symbol_sup,
)

__all__ = [
    "ConfigError",
    "EigenResult",
    "Error",
    "InvalidArgument",
    "NoUnstableEigenvalue",
    "Params",
    "RootSign",
    "critical_kappa_half",
    "eigenvalue_bounds",
    "experiment_names",
    "growth_constant",
    "max_divergence_residual",
    "mg_symbol",
    "run_config",
    "run_json",
    "solve_eigenvalue",
    "symbol_sup",
]
