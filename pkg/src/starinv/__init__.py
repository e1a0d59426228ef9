"""Exact generalized inverses of projections in rings with involution.

The package provides three concrete ring instances (dense matrices over
the rationals, Gaussian rationals, and prime fields; plus finite
structure-constant algebras over GF(2)), constructive and brute-force
inverse engines for them, and a battery of identity and existence
checks over projection pairs, all in exact arithmetic.
"""
from ._version import __version__
from .algebra import (
    AlgebraConstructionError,
    AlgebraElement,
    AlgebraParseError,
    ExhaustiveEngine,
    StructureConstantAlgebra,
    brute_force_drazin,
    brute_force_mp,
    enumerate_projections,
    example26_algebra,
    format_algebra,
    parse_algebra,
)
from .campaign import (
    THEOREM_IDS,
    CampaignConfig,
    CampaignReport,
    TheoremCounts,
    TrialRecord,
    run_battery,
    run_campaign,
)
from .generators import (
    GenerationFailedError,
    SplitMix64,
    TooLargeError,
    TrialSpec,
    all_projections_matrix,
    pair_from_spec,
    random_projection,
    trial_pair,
)
from .matrices import (
    ExactMatrix,
    MatrixInverseEngine,
    MatrixParseError,
    MatrixRing,
    RankFactorization,
    ZeroMatrixError,
    drazin_inverse,
    format_matrix,
    full_rank_factorization,
    group_inverse,
    inverse,
    isotropic_vector,
    mp_inverse,
    parse_matrix,
    rank,
    rref,
    same_column_space,
)
from .ring import (
    DrazinReport,
    InvalidWitnessError,
    InverseEngine,
    NotAProjectionError,
    PenroseReport,
    ProjectionPairContext,
    element_power,
    is_ep,
    is_projection,
    verify_drazin,
    verify_mp,
)
from .scalars import (
    QI,
    QQ,
    Field,
    GaussianRational,
    GaussianRationalField,
    PrimeField,
    RationalField,
    is_prime,
    parse_rational,
)
from .theorems import (
    ExistenceEntry,
    ExistenceProfile,
    SubCheck,
    TheoremVerdict,
    anticommutator_mp_formula,
    cor25_battery,
    cor26_battery,
    cor28_battery,
    cor29_chains,
    diff_mp_formula,
    eq215_formula,
    existence_profile,
    lemma21_checks,
    lemma22_identities,
    lemma23_identities,
    lemma210_battery,
    lemma211_check,
    lemma212_check,
    pxp_extraction,
    thm24_battery,
    thm27_check,
    thm213_check,
    thm214_check,
)

__all__ = [
    "__version__",
    "AlgebraConstructionError",
    "AlgebraElement",
    "AlgebraParseError",
    "CampaignConfig",
    "CampaignReport",
    "DrazinReport",
    "ExactMatrix",
    "ExhaustiveEngine",
    "ExistenceEntry",
    "ExistenceProfile",
    "Field",
    "GaussianRational",
    "GaussianRationalField",
    "GenerationFailedError",
    "InvalidWitnessError",
    "InverseEngine",
    "MatrixInverseEngine",
    "MatrixParseError",
    "MatrixRing",
    "NotAProjectionError",
    "PenroseReport",
    "PrimeField",
    "ProjectionPairContext",
    "QI",
    "QQ",
    "RankFactorization",
    "RationalField",
    "SplitMix64",
    "StructureConstantAlgebra",
    "SubCheck",
    "THEOREM_IDS",
    "TheoremCounts",
    "TheoremVerdict",
    "TooLargeError",
    "TrialRecord",
    "TrialSpec",
    "ZeroMatrixError",
    "all_projections_matrix",
    "anticommutator_mp_formula",
    "brute_force_drazin",
    "brute_force_mp",
    "cor25_battery",
    "cor26_battery",
    "cor28_battery",
    "cor29_chains",
    "diff_mp_formula",
    "drazin_inverse",
    "element_power",
    "enumerate_projections",
    "eq215_formula",
    "example26_algebra",
    "existence_profile",
    "format_algebra",
    "format_matrix",
    "full_rank_factorization",
    "group_inverse",
    "inverse",
    "is_ep",
    "is_prime",
    "is_projection",
    "isotropic_vector",
    "lemma21_checks",
    "lemma22_identities",
    "lemma23_identities",
    "lemma210_battery",
    "lemma211_check",
    "lemma212_check",
    "mp_inverse",
    "pair_from_spec",
    "parse_algebra",
    "parse_matrix",
    "parse_rational",
    "pxp_extraction",
    "random_projection",
    "rank",
    "rref",
    "run_battery",
    "run_campaign",
    "same_column_space",
    "thm24_battery",
    "thm27_check",
    "thm213_check",
    "thm214_check",
    "trial_pair",
    "verify_drazin",
    "verify_mp",
]
