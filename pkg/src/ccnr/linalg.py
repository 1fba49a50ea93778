"""Dense complex linear algebra used by the separability criteria.

Matrices are ``numpy`` arrays of dtype ``complex128`` with two dimensions.
The decompositions are written out here (Jacobi rotations) rather than
delegated to LAPACK so that their convergence contract is explicit:

* :func:`svd` is a one-sided (Hestenes) Jacobi iteration.
* :func:`eig_hermitian` is a two-sided cyclic Jacobi iteration.

Both sweep the column pairs in round-robin order, so every round touches a
set of disjoint pairs and is applied as one vectorised update.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .config import DEFAULT_LINALG, LinalgConfig

_EPS = np.finfo(float).eps


class LinalgError(ValueError):
    """Raised for malformed matrices or shape mismatches."""


class DimensionOverflow(LinalgError):
    pass


class NotHermitianError(LinalgError):
    def __init__(self, deviation: float):
        self.deviation = deviation
        super().__init__(f"NotHermitian({deviation:.6g})")


class ConvergenceError(ArithmeticError):
    """A Jacobi iteration hit its sweep cap."""


@dataclass(frozen=True)
class SvdResult:
    u: np.ndarray
    s: np.ndarray
    vdag: np.ndarray


@dataclass(frozen=True)
class EigResult:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex array (a copy is not guaranteed)."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise LinalgError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise LinalgError("matrix has non-finite entries")
    return m


def kron(a, b, config: LinalgConfig = DEFAULT_LINALG) -> np.ndarray:
    """Kronecker product with ``out[i*p + k, j*q + l] = a[i, j] * b[k, l]``."""
    a, b = as_matrix(a), as_matrix(b)
    (m, n), (p, q) = a.shape, b.shape
    if m * n * p * q > config.max_entries:
        raise DimensionOverflow(
            f"kron result has {m * n * p * q} entries, limit is {config.max_entries}"
        )
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(m * p, n * q)


def vec_r(a) -> np.ndarray:
    """Row-major flatten into a column vector."""
    a = as_matrix(a)
    return a.reshape(-1, 1).copy()


def unvec_r(v, rows: int, cols: int) -> np.ndarray:
    v = np.asarray(v, dtype=np.complex128)
    if v.size != rows * cols:
        raise LinalgError(f"cannot reshape {v.size} entries into {rows}x{cols}")
    return v.reshape(rows, cols).copy()


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product ``Tr(a^dagger b)``."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise LinalgError(f"shape mismatch {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def hs_norm(a) -> float:
    a = as_matrix(a)
    return float(np.sqrt(np.vdot(a, a).real))


@lru_cache(maxsize=None)
def _rounds(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Round-robin schedule: n-1 (or n) rounds of disjoint index pairs."""
    size = n + (n % 2)
    players = list(range(size))
    out = []
    for _ in range(size - 1):
        pairs = [(players[i], players[size - 1 - i]) for i in range(size // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if p < n and q < n]
        if pairs:
            p, q = zip(*pairs)
            out.append((np.array(p), np.array(q)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(out)


def _rotation(alpha, beta, gamma):
    """Real Jacobi rotation zeroing the off-diagonal |gamma| of [[alpha, g], [g, beta]].

    Returns ``c, s, phase`` with ``phase = gamma / |gamma|``.
    """
    g = np.abs(gamma)
    safe = np.where(g > 0, g, 1.0)
    phase = np.where(g > 0, gamma / safe, 1.0)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        zeta = (beta - alpha) / (2.0 * safe)
        t = np.where(zeta >= 0, 1.0, -1.0) / (np.abs(zeta) + np.hypot(1.0, zeta))
    t = np.where(np.isfinite(t), t, 0.0)
    c = 1.0 / np.sqrt(1.0 + t * t)
    return c, c * t, phase


def _complete_columns(u: np.ndarray, keep: np.ndarray) -> np.ndarray:
    """Replace columns not in ``keep`` by an orthonormal completion of the kept ones."""
    m, r = u.shape
    basis = [u[:, k] for k in range(r) if keep[k]]
    for k in range(r):
        if keep[k]:
            continue
        best, best_norm = None, 0.0
        for j in range(m):
            v = np.zeros(m, dtype=np.complex128)
            v[j] = 1.0
            for _ in range(2):
                for b in basis:
                    v -= b * np.vdot(b, v)
            nv = np.linalg.norm(v)
            if nv > best_norm:
                best, best_norm = v, nv
            if nv > 0.5:
                break
        best = best / best_norm
        basis.append(best)
        u[:, k] = best
    return u


def _rotate_rows(x, p, q, c, s, phase):
    """In place ``x <- J^dagger x`` for the pair rotations ``J`` of :func:`eig_hermitian`."""
    xp, xq = x[p], x[q] * phase
    x[p] = c * xp - s * xq
    x[q] = s * xp + c * xq


def svd(a, config: LinalgConfig = DEFAULT_LINALG) -> SvdResult:
    """Thin SVD ``a = u @ diag(s) @ vdag`` with ``s`` descending.

    Singular vectors belonging to (near-)zero singular values are an arbitrary
    orthonormal completion.
    """
    a = as_matrix(a)
    m, n = a.shape
    if m < n:
        r = svd(a.conj().T, config)
        return SvdResult(u=r.vdag.conj().T.copy(), s=r.s, vdag=r.u.conj().T.copy())

    # columns of a are stored as rows so that pair gathers are contiguous
    w = a.T.copy()
    v = np.eye(n, dtype=np.complex128)
    norm = hs_norm(a)
    floor = config.svd_tol * norm
    cos_tol = max(np.sqrt(m), 1.0) * _EPS
    rounds = _rounds(n)
    for _ in range(config.sweep_factor * n):
        rotated = False
        for p, q in rounds:
            wp, wq = w[p], w[q]
            alpha = np.einsum("ij,ij->i", wp.conj(), wp).real
            beta = np.einsum("ij,ij->i", wq.conj(), wq).real
            gamma = np.einsum("ij,ij->i", wp.conj(), wq)
            scale = np.sqrt(alpha * beta)
            active = (np.abs(gamma) > cos_tol * scale) & (scale > floor * floor)
            if not active.any():
                continue
            rotated = True
            c, s, phase = _rotation(alpha, beta, gamma)
            c = np.where(active, c, 1.0)[:, None]
            s = np.where(active, s, 0.0)[:, None]
            ph = phase.conj()[:, None]
            bq = wq * ph
            w[p] = c * wp - s * bq
            w[q] = s * wp + c * bq
            vp, vq = v[p], v[q] * ph
            v[p] = c * vp - s * vq
            v[q] = s * vp + c * vq
        if not rotated:
            break
    else:
        raise ConvergenceError(f"SVD did not converge in {config.sweep_factor * n} sweeps")
    # v holds V^T, w holds (A V)^T
    w, v = w.T, v.T

    sig = np.sqrt(np.einsum("ij,ij->j", w.conj(), w).real)
    order = np.argsort(-sig, kind="stable")
    sig, w, v = sig[order], w[:, order], v[:, order]
    keep = sig > max(floor, np.finfo(float).tiny)
    u = np.zeros((m, n), dtype=np.complex128)
    u[:, keep] = w[:, keep] / sig[keep]
    if not keep.all():
        u = _complete_columns(u, keep)
    return SvdResult(u=u, s=sig, vdag=v.conj().T.copy())


def singular_values(a, config: LinalgConfig = DEFAULT_LINALG) -> np.ndarray:
    return svd(a, config).s


def trace_norm(a, config: LinalgConfig = DEFAULT_LINALG) -> float:
    """Sum of singular values."""
    return float(np.sum(svd(a, config).s))


def eig_hermitian(a, config: LinalgConfig = DEFAULT_LINALG) -> EigResult:
    """Eigen-decomposition of a Hermitian matrix, eigenvalues ascending."""
    a = as_matrix(a)
    n, cols = a.shape
    if n != cols:
        raise LinalgError(f"eig_hermitian needs a square matrix, got {a.shape}")
    norm = hs_norm(a)
    deviation = hs_norm(a - a.conj().T)
    if deviation > config.hermitian_tol * max(1.0, norm):
        raise NotHermitianError(deviation)

    w = 0.5 * (a + a.conj().T)
    # vh holds V^dagger; every update is J^dagger acting on rows, and the
    # column half of J^dagger W J is done as a row update of the adjoint
    vh = np.eye(n, dtype=np.complex128)
    threshold = config.eig_tol * norm
    rounds = _rounds(n)
    for _ in range(config.sweep_factor * n + 1):
        off = hs_norm(w - np.diag(np.diagonal(w)))
        if off <= threshold:
            break
        for p, q in rounds:
            gamma = w[p, q]
            active = np.abs(gamma) > 0
            if not active.any():
                continue
            c, s, phase = _rotation(w[p, p].real, w[q, q].real, gamma)
            c = np.where(active, c, 1.0)[:, None]
            s = np.where(active, s, 0.0)[:, None]
            phase = phase[:, None]
            _rotate_rows(w, p, q, c, s, phase)
            w = w.conj().T.copy()
            _rotate_rows(w, p, q, c, s, phase)
            w = w.conj().T.copy()
            _rotate_rows(vh, p, q, c, s, phase)
    else:
        raise ConvergenceError(f"eigensolver did not converge in {config.sweep_factor * n} sweeps")
    v = vh.conj().T

    lam = np.diagonal(w).real.copy()
    order = np.argsort(lam, kind="stable")
    return EigResult(eigenvalues=lam[order], eigenvectors=v[:, order].copy())


def eigvals_hermitian(a, config: LinalgConfig = DEFAULT_LINALG) -> np.ndarray:
    return eig_hermitian(a, config).eigenvalues
