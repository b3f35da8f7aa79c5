"""Exact-arithmetic toolkit for matroid log-concavity phenomena.

Construct matroids (explicit, uniform, graphic, linear), build their
independence generating polynomials, certify complete log-concavity by
reduction to finitely many quadratic semidefiniteness checks, and test
the ultra-log-concavity of independent-set count sequences, all over
exact rationals.  Floating point appears only in clearly marked
spectral diagnostics.
"""

from .corpus import (
    SCHEMA_VERSION,
    CorpusConfig,
    analyze_instance,
    connected_graphs,
    corpus_instances,
    run_sweep,
)
from .errors import (
    AllLoops,
    AxiomViolation,
    ConsistencyError,
    DegreeTooLow,
    DimensionMismatch,
    ElementOutOfRange,
    EmptyFamily,
    EnumerationLimitExceeded,
    InvalidRank,
    InvalidVertexIndex,
    LengthMismatch,
    MatroidLCError,
    NegativeCoefficient,
    NegativeEntry,
    NonPrimeModulus,
    NotAMatroid,
    NotBivariate,
    NotHomogeneous,
    NotIndependent,
    ZeroAtPoint,
)
from .linalg import (
    NsdResult,
    SymmetricMatrix,
    float_eigenvalues,
    is_negative_semidefinite,
)
from .logconcavity import (
    CertificateCheck,
    CLCCertificate,
    FunctionalSampleReport,
    IndecomposabilityResult,
    LogConcavityConditionReport,
    SpectralReport,
    certify_clc_matroid,
    certify_clc_quadratic_criterion,
    is_indecomposable,
    log_concave_at,
    log_concavity_condition_report,
    log_concavity_test_matrix,
    log_hessian_numerator,
    matroid_quadratic_matrix,
    sample_functional_log_concavity,
    spectral_nd_report,
    verify_certificate_failure,
)
from .mason import (
    FormComparison,
    MasonReport,
    MinorCheck,
    RankSequenceReport,
    UlcEntry,
    check_ultra_log_concave,
    gurvits_minor_checks,
    mason_report,
)
from .matroid import (
    DEFAULT_ENUMERATION_LIMIT,
    ExplicitMatroid,
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    ParallelPartition,
    UniformMatroid,
    from_independence_family,
    graphic,
    linear,
    matroid_from_json,
    matroid_to_json,
    uniform,
)
from .polynomial import (
    SparsePolynomial,
    bases_polynomial,
    bivariate_restriction,
    format_polynomial,
    independence_polynomial,
    matroid_variable_names,
    polynomial_from_json,
    polynomial_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "SCHEMA_VERSION",
    "CorpusConfig",
    "analyze_instance",
    "connected_graphs",
    "corpus_instances",
    "run_sweep",
    "AllLoops",
    "AxiomViolation",
    "ConsistencyError",
    "DegreeTooLow",
    "DimensionMismatch",
    "ElementOutOfRange",
    "EmptyFamily",
    "EnumerationLimitExceeded",
    "InvalidRank",
    "InvalidVertexIndex",
    "LengthMismatch",
    "MatroidLCError",
    "NegativeCoefficient",
    "NegativeEntry",
    "NonPrimeModulus",
    "NotAMatroid",
    "NotBivariate",
    "NotHomogeneous",
    "NotIndependent",
    "ZeroAtPoint",
    "NsdResult",
    "SymmetricMatrix",
    "float_eigenvalues",
    "is_negative_semidefinite",
    "CertificateCheck",
    "CLCCertificate",
    "FunctionalSampleReport",
    "IndecomposabilityResult",
    "LogConcavityConditionReport",
    "SpectralReport",
    "certify_clc_matroid",
    "certify_clc_quadratic_criterion",
    "is_indecomposable",
    "log_concave_at",
    "log_concavity_condition_report",
    "log_concavity_test_matrix",
    "log_hessian_numerator",
    "matroid_quadratic_matrix",
    "sample_functional_log_concavity",
    "spectral_nd_report",
    "verify_certificate_failure",
    "FormComparison",
    "MasonReport",
    "MinorCheck",
    "RankSequenceReport",
    "UlcEntry",
    "check_ultra_log_concave",
    "gurvits_minor_checks",
    "mason_report",
    "DEFAULT_ENUMERATION_LIMIT",
    "ExplicitMatroid",
    "GraphicMatroid",
    "LinearMatroid",
    "Matroid",
    "ParallelPartition",
    "UniformMatroid",
    "from_independence_family",
    "graphic",
    "linear",
    "matroid_from_json",
    "matroid_to_json",
    "uniform",
    "SparsePolynomial",
    "bases_polynomial",
    "bivariate_restriction",
    "format_polynomial",
    "independence_polynomial",
    "matroid_variable_names",
    "polynomial_from_json",
    "polynomial_to_json",
]
