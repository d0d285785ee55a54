"""Fault-tolerant additive spanners of unweighted graphs.

Thin wrapper around the C++ core: seeded graph generators, the construction
pipelines, and the fault-enumeration verifier.
"""

from ftspan._core import (
    Claim,
    Graph,
    Spanner,
    acim_2additive,
    bkmp_6additive,
    build_pipeline,
    eft_multiplicative,
    generate,
    greedy_multiplicative,
    read_edge_list,
    recommended_p,
    stretch_claim,
    union_spanner,
    verify,
    verify_sourcewise,
    write_edge_list,
)

__all__ = [
    "Claim",
    "Graph",
    "Spanner",
    "acim_2additive",
    "bkmp_6additive",
    "build_pipeline",
    "eft_multiplicative",
    "generate",
    "greedy_multiplicative",
    "read_edge_list",
    "recommended_p",
    "stretch_claim",
    "union_spanner",
    "verify",
    "verify_sourcewise",
    "write_edge_list",
]
