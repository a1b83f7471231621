"""Exact Leibniz algebra toolkit.

Structure-constant tables over the rationals, identity checks, series and
annihilators, derivation spaces, completeness tests, and a builder for the
maximal solvable extension of a nilpotent Leibniz algebra given by words in
its generators.
"""

from .algebra import (
    AlgebraTable,
    Violation,
    basis_change,
    bracket,
    check_leibniz,
    direct_sum,
    is_antisymmetric,
    is_ideal,
    is_leibniz,
    is_lie,
    leibniz_defect,
    permutation_matrix,
    quotient_algebra,
    table_differences,
    tables_equal,
)
from .catalog import CatalogInstance, catalog_get, catalog_list
from .derivations import (
    CompletenessReport,
    completeness_report,
    derivation_space,
    inner_derivations,
    is_complete,
    is_derivation,
    is_ernie_complete,
)
from .errors import (
    BasisNotAdaptedError,
    CatalogError,
    ComponentError,
    DimensionMismatch,
    ExtensionError,
    FormatError,
    LeibnizError,
    NotAnIdealError,
    NotContainedError,
    NotLeibnizError,
    NotNilpotentError,
    ParameterError,
    PresentationError,
    SingularMatrixError,
)
from .extension import (
    ExtensionResult,
    WordPresentation,
    beta_constraint_violations,
    build_extension,
    compute_alpha,
    compute_beta,
    detect_components,
    enumerate_flag_family,
    evaluate_word,
    lie_normal_form,
    lie_specialize_check,
    validate_presentation,
    verify_isomorphism,
)
from .linalg import Matrix, Subspace, nullspace, rank, rref, solve, span
from .structure import (
    center,
    derived_series,
    generator_data,
    ideal_closure,
    is_nilpotent,
    is_solvable,
    left_annihilator,
    lower_central_series,
    right_annihilator,
    series_profile,
    squares_ideal,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
