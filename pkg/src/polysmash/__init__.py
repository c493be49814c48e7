"""Exact combinatorial models of polyhedral smash products of disk/sphere
pairs, vertex-doubling reductions, and geometric-join verification, all over
exact integer and rational arithmetic."""

from .chains import (
    ChainComplex,
    HomologyGroup,
    HomologyTable,
    MalformedComplexError,
    homology,
    homology_equal,
    homology_shift,
    simplicial_chain_complex,
)
from .complexes import (
    RenameMap,
    SimplicialComplex,
    double,
    double_iterated,
    empty_complex,
    facet_equal_upto_relabel,
    from_facets,
    full_simplex,
    join_abstract,
    random_complex,
    simplex_boundary,
    suspension,
)
from .exactlin import (
    KERNEL,
    LPResult,
    RationalLP,
    SmithForm,
    SparseIntMatrix,
    lp_max,
    rank_rational,
    smith_normal_form,
)
from .geomjoin import (
    EmbeddedComplex,
    StandardConfig,
    geometric_join,
    joinable,
    standard_config,
    verify_W_union,
    verify_gji,
    verify_gjs,
)
from .report import Check, VerificationReport
from .smashmodel import (
    cubical_polyprod_model,
    direct_smash_model,
    expected_homology,
    quotient_outer_boundary,
    reduction_path_model,
    verify_main,
)

__version__ = "1.0.0"

__all__ = [
    "ChainComplex",
    "Check",
    "EmbeddedComplex",
    "HomologyGroup",
    "HomologyTable",
    "KERNEL",
    "LPResult",
    "MalformedComplexError",
    "RationalLP",
    "RenameMap",
    "SimplicialComplex",
    "SmithForm",
    "SparseIntMatrix",
    "StandardConfig",
    "VerificationReport",
    "cubical_polyprod_model",
    "direct_smash_model",
    "double",
    "double_iterated",
    "empty_complex",
    "expected_homology",
    "facet_equal_upto_relabel",
    "from_facets",
    "full_simplex",
    "geometric_join",
    "homology",
    "homology_equal",
    "homology_shift",
    "join_abstract",
    "joinable",
    "lp_max",
    "quotient_outer_boundary",
    "random_complex",
    "rank_rational",
    "reduction_path_model",
    "simplex_boundary",
    "simplicial_chain_complex",
    "smith_normal_form",
    "standard_config",
    "suspension",
    "verify_W_union",
    "verify_gji",
    "verify_gjs",
    "verify_main",
]
