"""Exact intersection-theory engine for skew curves and families of lines.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (  # noqa: F401
    DEFAULT_SEED,
    ConsistencyError,
    PreconditionError,
    castelnuovo_bound,
    classify_p4,
    classify_report,
    contact_order_test,
    count_nonskew_pairs,
    count_report,
    dagger_intersection,
    degree_ledger,
    dim_Dr,
    dual_partition,
    excess_term,
    msdim_bounds,
    nonskew_count,
    nonskew_count_symbolic,
    p3_intersection,
    p4_scroll_count,
    pieri,
    schubert_product,
    scroll_degree,
    scroll_skew_test,
    tangent_meet,
    twisted_cubic_identity,
    veronese_sample_test,
)

__all__ = [
    "DEFAULT_SEED",
    "ConsistencyError",
    "PreconditionError",
    "castelnuovo_bound",
    "classify_p4",
    "classify_report",
    "contact_order_test",
    "count_nonskew_pairs",
    "count_report",
    "dagger_intersection",
    "degree_ledger",
    "dim_Dr",
    "dual_partition",
    "excess_term",
    "msdim_bounds",
    "nonskew_count",
    "nonskew_count_symbolic",
    "p3_intersection",
    "p4_scroll_count",
    "pieri",
    "schubert_product",
    "scroll_degree",
    "scroll_skew_test",
    "tangent_meet",
    "twisted_cubic_identity",
    "veronese_sample_test",
]

__version__ = "0.1.0"
