"""Numerical settings shared by the kernels, constructors and criteria."""

from dataclasses import dataclass


@dataclass(frozen=True)
class LinalgConfig:
    """Limits and convergence thresholds for the dense kernels.

    ``svd_tol`` and ``eig_tol`` are relative to the Hilbert-Schmidt norm of the
    input. ``sweep_factor`` times the smaller matrix dimension caps the number
    of Jacobi sweeps.
    """

    max_entries: int = 2**20
    svd_tol: float = 1e-13
    eig_tol: float = 1e-13
    sweep_factor: int = 100
    hermitian_tol: float = 1e-10


@dataclass(frozen=True)
class ValidationConfig:
    hermitian_tol: float = 1e-10
    trace_tol: float = 1e-10
    psd_tol: float = 1e-10
    norm_tol: float = 1e-10


DEFAULT_LINALG = LinalgConfig()
DEFAULT_VALIDATION = ValidationConfig()

# verdict threshold for both criteria; the CLI exposes it as --tol
DEFAULT_TOL = 1e-9
