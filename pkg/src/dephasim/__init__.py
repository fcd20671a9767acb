"""Stationary-state entanglement and total correlation under collective dephasing."""

from .engine import (
    ModelParams,
    StationaryXForm,
    Superoperator,
    build_liouvillian,
    collective_jz,
    dephasing_fixed_point,
    evolve,
    extract_xform,
    stationary_state,
)
from .errors import (
    DephasimError,
    DimensionMismatchError,
    DriveNotSupportedError,
    GridMismatchError,
    LabelError,
    NonHermitianError,
    NotHermitianError,
    NotPositiveError,
    NotXFormError,
    ParseError,
    StateValidationError,
    TraceNotOneError,
    UnsupportedDimensionError,
    ZeroNormError,
)
from .linalg import (
    hermitian_eigensystem,
    matrix_exponential,
    partial_trace,
    partial_transpose,
    tensor_product,
)
from .measures import (
    CriterionReport,
    concurrence,
    concurrence_xform,
    min_pt_eigenvalue,
    mutual_information,
    mutual_information_xform,
    qutrit_cubic_coefficients,
    qutrit_sufficient_entangled,
    von_neumann_entropy,
)
from .states import DensityMatrix, StateVector, parse_ket_expression, pure_density, validate
from .sweep import (
    SweepConfig,
    SweepResult,
    WindowOverlapReport,
    compare_windows,
    detect_local_maxima,
    detect_transitions,
    read_csv,
    run_qutrit_scan,
    run_sweep,
    write_csv,
)

__version__ = "0.1.0"

__all__ = [
    "CriterionReport",
    "DensityMatrix",
    "DephasimError",
    "DimensionMismatchError",
    "DriveNotSupportedError",
    "GridMismatchError",
    "LabelError",
    "ModelParams",
    "NonHermitianError",
    "NotHermitianError",
    "NotPositiveError",
    "NotXFormError",
    "ParseError",
    "StateValidationError",
    "StateVector",
    "StationaryXForm",
    "Superoperator",
    "SweepConfig",
    "SweepResult",
    "TraceNotOneError",
    "UnsupportedDimensionError",
    "WindowOverlapReport",
    "ZeroNormError",
    "build_liouvillian",
    "collective_jz",
    "compare_windows",
    "concurrence",
    "concurrence_xform",
    "dephasing_fixed_point",
    "detect_local_maxima",
    "detect_transitions",
    "evolve",
    "extract_xform",
    "hermitian_eigensystem",
    "matrix_exponential",
    "min_pt_eigenvalue",
    "mutual_information",
    "mutual_information_xform",
    "parse_ket_expression",
    "partial_trace",
    "partial_transpose",
    "pure_density",
    "qutrit_cubic_coefficients",
    "qutrit_sufficient_entangled",
    "read_csv",
    "run_qutrit_scan",
    "run_sweep",
    "stationary_state",
    "tensor_product",
    "validate",
    "von_neumann_entropy",
    "write_csv",
]
