from ._core import (
    ArrowingError,
    Graph,
    arrows,
    check_tk_equivalence,
    combine_on_edge,
    complete_graph,
    complete_minus_edge,
    count_copies,
    cycle_graph,
    decide_p3_k3,
    epl,
    forge_p3_suite,
    generate_formulas,
    is_connected,
    is_good,
    is_isomorphic,
    is_k_connected,
    mepl,
    parse_formula,
    path_graph,
    prune_non_h_edges,
    reduce,
    sat_oracle,
    star_graph,
    tailed_complete,
)

__all__ = [name for name in dir() if not name.startswith("_")]
