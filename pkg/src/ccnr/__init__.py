"""Realignment (CCNR) separability criterion and its operator Schmidt form."""

from .criteria import (
    CriterionReport,
    OperatorSchmidt,
    RealignedMatrix,
    ccnr_value,
    ccnr_verdict,
    evaluate,
    inverse_realign,
    operator_schmidt,
    partial_transpose,
    ppt_verdict,
    pure_state_value,
    realign,
    schmidt_coefficients,
)
from .linalg import eig_hermitian, hs_inner, hs_norm, kron, svd, trace_norm, unvec_r, vec_r
from .states import (
    DensityMatrix,
    PureState,
    horodecki_3x3,
    isotropic,
    max_entangled,
    max_mixed,
    pure_density,
    random_ginibre,
    random_separable,
    validate_density,
    werner_qubit,
)

__version__ = "0.1.0"
