"""Exact umbral discretization of linear second-order ODEs."""

from ._dfrob import (
    DfrobError,
    InvalidProblem,
    LogarithmicCaseRequired,
    NoAdmissibleRoot,
    ParseError,
    Problem,
    Underdetermined,
    UnsupportedCase,
    basic_polynomials,
    continuum_error,
    discretize,
    family_problem,
    family_solutions,
    ordinary_problem,
    problem_from_json,
    residuals,
    run_cli,
    singular_problem,
    solve_series,
    star_product,
    u_to_zeta,
    zeta_to_u,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
