"""Lexicographic products of positional objectives.

Thin Python layer over the C++ core: ordinal arithmetic, lasso words,
objective membership, universal graph constructions, game solving and
prefix-function reductions. All graph, game and machine values travel as
their canonical text formats.
"""

from _lexigraph import (
    LassoWord,
    Ordinal,
    auto_universal,
    chain_graph,
    chain_reduction,
    check_universality,
    cobuchi_sem,
    directed_sum,
    double_map,
    expand,
    lex_product,
    limit_collapse,
    loop_graph,
    member,
    morphism_exists,
    oracle_solve,
    power_graph,
    reduce_max,
    reduce_union,
    satisfies,
    signature_graph,
    solve,
    wrap,
)

__all__ = [
    "LassoWord",
    "Ordinal",
    "auto_universal",
    "chain_graph",
    "chain_reduction",
    "check_universality",
    "cobuchi_sem",
    "directed_sum",
    "double_map",
    "expand",
    "lex_product",
    "limit_collapse",
    "loop_graph",
    "member",
    "morphism_exists",
    "oracle_solve",
    "power_graph",
    "reduce_max",
    "reduce_union",
    "satisfies",
    "signature_graph",
    "solve",
    "wrap",
]
