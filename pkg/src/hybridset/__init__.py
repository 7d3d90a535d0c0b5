"""Hybrid sets, complementary symmetric functions and connection constants."""

from .algebra import LaurentPoly, TruncatedSeries, pq_number, q_number
from .connect import (
    MonicRationalFn,
    PersistantSequence,
    connection_matrix,
    expand,
    invert_connection,
    parse_rational_fn,
    persistant_q,
    verify_expansion,
)
from .errors import (
    HybridSetError,
    NotAMemberError,
    NotInvertibleError,
    NotRepresentableError,
    ParseError,
    UnsupportedInputError,
    UnsupportedRegionError,
)
from .hybrid_core import (
    EMPTY,
    HybridSet,
    NewSetKind,
    SubsetDecision,
    ellipsis,
    enumerate_subsets,
    is_subset,
    polynomial_sum,
    prod_limits,
    prod_over,
    remove_element,
    sum_limits,
    sum_over,
)
from .numbers import (
    Region,
    binomial,
    binomial_series,
    gaussian,
    region,
    stirling1,
    stirling1_pq,
    stirling1_q,
    stirling1_region2,
    stirling2,
    stirling2_pq,
    stirling2_q,
    table,
)
from .symfunc import (
    comp,
    comp_ellipsis,
    comp_incseq,
    comp_monomial,
    comp_recursion,
    comp_series,
    complete,
    elementary,
    star,
)
from .tableaux import (
    GenPartition,
    HybridRelation,
    PartitionKind,
    Tableau01,
    enumerate_partitions,
    enumerate_tableaux,
    ferrers,
    hybrid_less,
    inv,
    nin,
    tableau_sum,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "GenPartition",
    "HybridRelation",
    "HybridSet",
    "HybridSetError",
    "LaurentPoly",
    "MonicRationalFn",
    "NewSetKind",
    "NotAMemberError",
    "NotInvertibleError",
    "NotRepresentableError",
    "ParseError",
    "PartitionKind",
    "PersistantSequence",
    "Region",
    "SubsetDecision",
    "Tableau01",
    "TruncatedSeries",
    "UnsupportedInputError",
    "UnsupportedRegionError",
    "binomial",
    "binomial_series",
    "comp",
    "comp_ellipsis",
    "comp_incseq",
    "comp_monomial",
    "comp_recursion",
    "comp_series",
    "complete",
    "connection_matrix",
    "elementary",
    "ellipsis",
    "enumerate_partitions",
    "enumerate_subsets",
    "enumerate_tableaux",
    "expand",
    "ferrers",
    "gaussian",
    "hybrid_less",
    "inv",
    "invert_connection",
    "is_subset",
    "nin",
    "parse_rational_fn",
    "persistant_q",
    "polynomial_sum",
    "pq_number",
    "prod_limits",
    "prod_over",
    "q_number",
    "region",
    "remove_element",
    "star",
    "stirling1",
    "stirling1_pq",
    "stirling1_q",
    "stirling1_region2",
    "stirling2",
    "stirling2_pq",
    "stirling2_q",
    "sum_limits",
    "sum_over",
    "table",
    "tableau_sum",
    "verify_expansion",
]
