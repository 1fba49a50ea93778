"""Realignment (CCNR) and partial-transpose separability tests.

The realignment map sends ``rho[(i,k),(j,l)]`` to ``R[(i,j),(k,l)]``. It is a
permutation of entries, hence an isometry for the Hilbert-Schmidt norm, and it
turns a product ``A (x) B`` into the rank-one matrix ``vec_r(A) vec_r(B)^T``.
Consequently the singular value decomposition of ``R(rho)`` *is* the operator
Schmidt decomposition of ``rho``, and the trace norm ``||R(rho)||_1`` equals the
sum of operator Schmidt coefficients.  Both numbers are bounded by 1 for
separable states; a larger value certifies entanglement.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .config import DEFAULT_TOL
from .linalg import LinalgError, as_matrix, eig_hermitian, svd, unvec_r
from .states import DensityMatrix, PureState


@dataclass(frozen=True)
class RealignedMatrix:
    dim_a: int
    dim_b: int
    mat: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class OperatorSchmidt:
    """``rho = sum_k sigmas[k] * kron(g_factors[k], h_factors[k])``."""

    sigmas: np.ndarray
    g_factors: list = field(repr=False)
    h_factors: list = field(repr=False)

    def reconstruct(self) -> np.ndarray:
        return sum(s * np.kron(g, h) for s, g, h in zip(self.sigmas, self.g_factors, self.h_factors))


@dataclass(frozen=True)
class CriterionReport:
    ccnr_value: float
    ccnr_entangled: bool
    ppt_min_eig: float
    ppt_entangled: bool
    tolerance: float

    def to_json_dict(self) -> dict:
        d = asdict(self)
        return {
            "ccnrValue": d["ccnr_value"],
            "ccnrEntangled": d["ccnr_entangled"],
            "pptMinEig": d["ppt_min_eig"],
            "pptEntangled": d["ppt_entangled"],
            "tolerance": d["tolerance"],
        }


def _operator(rho, dims):
    if isinstance(rho, DensityMatrix):
        return rho.mat, rho.dim_a, rho.dim_b
    if dims is None:
        raise TypeError("dims=(dim_a, dim_b) is required for a bare matrix")
    m = as_matrix(rho)
    dim_a, dim_b = dims
    d = dim_a * dim_b
    if m.shape != (d, d):
        raise LinalgError(f"operator is {m.shape}, dims {dims} need ({d}, {d})")
    return m, dim_a, dim_b


def realign(rho, dims: tuple[int, int] | None = None) -> RealignedMatrix:
    """Realign a density matrix, or any operator on ``C^dim_a (x) C^dim_b`` given ``dims``.

    Block ``(i, j)`` of ``rho`` (a ``dim_b x dim_b`` matrix) becomes row
    ``i * dim_a + j`` of the result, flattened row-major.
    """
    m, da, db = _operator(rho, dims)
    r = m.reshape(da, db, da, db).transpose(0, 2, 1, 3).reshape(da * da, db * db)
    return RealignedMatrix(da, db, r.copy())


def inverse_realign(r) -> np.ndarray:
    """Undo :func:`realign`; returns the ``(dim_a*dim_b)``-square operator."""
    if not isinstance(r, RealignedMatrix):
        raise TypeError("inverse_realign expects a RealignedMatrix")
    da, db = r.dim_a, r.dim_b
    m = as_matrix(r.mat)
    if m.shape != (da * da, db * db):
        raise LinalgError(f"realigned matrix is {m.shape}, expected ({da * da}, {db * db})")
    return m.reshape(da, da, db, db).transpose(0, 2, 1, 3).reshape(da * db, da * db).copy()


def ccnr_value(rho, dims: tuple[int, int] | None = None) -> float:
    """Trace norm of the realigned matrix."""
    return float(np.sum(svd(realign(rho, dims).mat).s))


def ccnr_verdict(rho, tol: float = DEFAULT_TOL) -> bool:
    """True certifies entanglement; False only means the test did not detect any."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return ccnr_value(rho) > 1.0 + tol


def operator_schmidt(rho, dims: tuple[int, int] | None = None) -> OperatorSchmidt:
    re = realign(rho, dims)
    dec = svd(re.mat)
    g = [unvec_r(dec.u[:, k], re.dim_a, re.dim_a) for k in range(dec.s.size)]
    # R = sum s_k u_k (vdag_k), and R(A (x) B) = vec_r(A) vec_r(B)^T, so the
    # second factor is the row of vdag itself, without conjugation.
    h = [unvec_r(dec.vdag[k, :], re.dim_b, re.dim_b) for k in range(dec.s.size)]
    return OperatorSchmidt(sigmas=dec.s, g_factors=g, h_factors=h)


def partial_transpose(rho, dims: tuple[int, int] | None = None) -> np.ndarray:
    """Transpose on the second factor: ``[(i,k),(j,l)] -> [(i,l),(j,k)]``."""
    m, da, db = _operator(rho, dims)
    return m.reshape(da, db, da, db).transpose(0, 3, 2, 1).reshape(da * db, da * db).copy()


def ppt_verdict(rho, tol: float = DEFAULT_TOL) -> tuple[float, bool]:
    """Smallest eigenvalue of the partial transpose, and whether it is below ``-tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    min_eig = float(eig_hermitian(partial_transpose(rho)).eigenvalues[0])
    return min_eig, min_eig < -tol


def schmidt_coefficients(psi: PureState) -> np.ndarray:
    """Vector Schmidt coefficients (the square roots of the reduced-state eigenvalues)."""
    return svd(unvec_r(psi.amplitudes, psi.dim_a, psi.dim_b)).s


def pure_state_value(psi: PureState) -> float:
    """Closed form of the realignment statistic for ``|psi><psi|``: ``(sum_i sqrt(mu_i))^2``."""
    return float(np.sum(schmidt_coefficients(psi)) ** 2)


def evaluate(rho: DensityMatrix, tol: float = DEFAULT_TOL) -> CriterionReport:
    if tol <= 0:
        raise ValueError("tol must be positive")
    value = ccnr_value(rho)
    min_eig, ppt_ent = ppt_verdict(rho, tol)
    return CriterionReport(
        ccnr_value=value,
        ccnr_entangled=value > 1.0 + tol,
        ppt_min_eig=min_eig,
        ppt_entangled=ppt_ent,
        tolerance=tol,
    )
