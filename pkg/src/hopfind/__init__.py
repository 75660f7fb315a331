"""Exact computations with finite-dimensional Hopf algebras over GF(p).

The central object is the indicator sequence nu_n(H) = Tr(S o P^(n-1)),
together with the filtrations and predicates needed to test when it is
p-pertinent.
"""
from .gf_linear import PrimeField, Subspace, berlekamp_massey, kernel, min_poly_matrix, rref, sequence_period
from .hopf_core import (
    HopfAlgebraData,
    is_cocommutative,
    is_commutative,
    co_opposite,
    convolution_power,
    convolve,
    dual,
    opposite,
    tensor,
    validate,
)
from .constructors import (
    GroupTable,
    RestrictedLieData,
    cyclic_group,
    direct_product,
    function_algebra,
    group_algebra,
    abelian_lie,
    h_delta,
    heisenberg_lie,
    load_group,
    restricted_enveloping,
)
from .indicators import (
    LRSequence,
    check_p_pertinent,
    indicator,
    indicator_min_poly,
    indicator_report,
    indicator_sequence,
    sweedler_power,
)
from .filtration import (
    GradingError,
    chevalley_summary,
    coradical,
    coradical_filtration,
    graded_from_coradical,
    graded_from_jadic,
    jacobson_radical,
    jadic_filtration,
)

__version__ = "0.1.0"

__all__ = [
    "PrimeField",
    "Subspace",
    "berlekamp_massey",
    "kernel",
    "min_poly_matrix",
    "rref",
    "sequence_period",
    "HopfAlgebraData",
    "is_cocommutative",
    "is_commutative",
    "co_opposite",
    "convolution_power",
    "convolve",
    "dual",
    "opposite",
    "tensor",
    "validate",
    "GroupTable",
    "RestrictedLieData",
    "cyclic_group",
    "direct_product",
    "function_algebra",
    "group_algebra",
    "abelian_lie",
    "h_delta",
    "heisenberg_lie",
    "load_group",
    "restricted_enveloping",
    "LRSequence",
    "check_p_pertinent",
    "indicator",
    "indicator_min_poly",
    "indicator_report",
    "indicator_sequence",
    "sweedler_power",
    "GradingError",
    "chevalley_summary",
    "coradical",
    "coradical_filtration",
    "graded_from_coradical",
    "graded_from_jadic",
    "jacobson_radical",
    "jadic_filtration",
]
