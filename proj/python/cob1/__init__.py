"""Cobordism calculator for k-fold simple branched coverings of surfaces.

Covering data are exchanged as JSON document strings; use ``json.loads`` /
``json.dumps`` to inspect or build them. See the project README for the
document schema and for the meaning of each operation.
"""

from cob1._core import (
    basis_row,
    cobordant,
    decompose,
    disjoint_union,
    enumerate_count,
    euler,
    generator,
    group,
    group_orders,
    in_image,
    invariants,
    negate,
    partition_count,
    random_valid_data,
    rank,
    rank_breakdown,
    realize,
    recompose,
    search_minimal,
    validate,
    verify_nonexistence,
    verify_parity,
)

__version__ = "0.1.0"

__all__ = [
    "basis_row",
    "cobordant",
    "decompose",
    "disjoint_union",
    "enumerate_count",
    "euler",
    "generator",
    "group",
    "group_orders",
    "in_image",
    "invariants",
    "negate",
    "partition_count",
    "random_valid_data",
    "rank",
    "rank_breakdown",
    "realize",
    "recompose",
    "search_minimal",
    "validate",
    "verify_nonexistence",
    "verify_parity",
]
