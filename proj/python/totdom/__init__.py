"""Total domination number versus twice the domination number.

Graphs are ``Graph`` objects with vertices ``0..order-1``. Analyses return
plain dicts with the same keys as the ``totdom`` command's ``--json`` output.
"""

from ._totdom import (
    DEFAULT_ORACLE_CAP,
    MAX_ORACLE_CAP,
    MAX_ORDER,
    DomainError,
    EligibilityError,
    Graph,
    OracleCapError,
    ParseError,
    TotdomError,
    UsageError,
    check_free,
    classify,
    construction,
    corona_p2,
    count_gamma_sets,
    count_gamma_sets_formula,
    fixture,
    fixture_names,
    gamma,
    gamma_total,
    girth,
    is_chordal,
    is_dominating,
    is_eligible,
    is_gamma2_exact,
    is_packing,
    is_total_dominating,
    parse_edgelist,
    parse_graph6,
    random_block_graph,
    random_tree,
    s_set,
    small_graphs,
    special_vertices,
    sweep,
    tdm_partition,
    twin_classes,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
