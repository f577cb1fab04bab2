"""Random-walk and resistance invariants on simple connected graphs."""

from ._walkres import (  # noqa: F401
    Graph,
    InvalidInput,
    NumericError,
    ParseError,
    PreconditionError,
    bounds,
    check_return_time_identity,
    cluster,
    from_edge_list,
    generate,
    hitting_matrix,
    is_highly_symmetric,
    is_walk_regular,
    kemeny,
    make_graph,
    resistance_matrix,
    sandwich_check,
    screen_necessary_conditions,
    simulate_hitting,
    stationary,
    to_edge_list,
    verify_cluster,
    walk_spectrum,
)

__all__ = [
    "Graph",
    "InvalidInput",
    "NumericError",
    "ParseError",
    "PreconditionError",
    "bounds",
    "check_return_time_identity",
    "cluster",
    "from_edge_list",
    "generate",
    "hitting_matrix",
    "is_highly_symmetric",
    "is_walk_regular",
    "kemeny",
    "make_graph",
    "resistance_matrix",
    "sandwich_check",
    "screen_necessary_conditions",
    "simulate_hitting",
    "stationary",
    "to_edge_list",
    "verify_cluster",
    "walk_spectrum",
]
