"""prodfn: production functions as invariants of exponential growth systems.

Fit labor/capital/output index series to a diagonal exponential system,
then derive Cobb-Douglas, generalized CES and textbook CES production
functions as its time-independent invariants, each verifiable numerically
along the fitted trajectories.
"""

from .core import (
    CES,
    CobbDouglas,
    DomainError,
    ExponentialModel,
    Factor,
    FitDiagnostics,
    GeneralizedCES,
    PowerLaw,
    ProdfnError,
    ProductionFunction,
    evaluate,
    trajectory,
)
from .fit import SeriesAlignmentError, fit_log_linear, fit_system
from .ingest import CsvFormatError, TimeSeries, load_series, normalize_base100, write_series
from .invariants import (
    DegenerateRateError,
    NotReducibleError,
    ShareRangeWarning,
    SubstitutionRangeWarning,
    ces_like_member,
    ces_reduction,
    cobb_douglas_member,
    constancy_check,
    crs_elasticities,
    fundamental_invariant_K,
    fundamental_invariant_L,
    identity_chain_check,
)
from .modelspec import (
    DuplicateDeclarationError,
    MissingRateError,
    MissingRoleError,
    ModelSpec,
    ModelSpecError,
    ModelSyntaxError,
    OffDiagonalRateError,
    UnknownVariableError,
    VariableCountError,
    VariableDef,
    parse_model,
    render,
    to_model,
)

__version__ = "0.1.0"
