"""Bipartite density matrices: validation and the example families.

Composite indices are row-major, ``(i, k) -> i * dim_b + k`` with ``i`` on the
first factor.  The named families (Werner, isotropic, the 3x3 Horodecki
family) are representative test states; their entanglement properties are
checked numerically in the test-suite rather than assumed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_VALIDATION, ValidationConfig
from .linalg import as_matrix, eig_hermitian, hs_norm, kron
from .rng import complex_gaussian, make_rng, random_unit_vector, simplex_weights


def _fmt(x: float) -> str:
    return repr(float(f"{x:.10g}"))


class ValidationError(ValueError):
    """A matrix failed one of the density-matrix invariants.

    ``magnitude`` carries the size of the violation; ``str(err)`` reads like
    ``TraceNotOne(1.0)``.
    """

    kind = "Invalid"

    def __init__(self, magnitude: float, detail: str = ""):
        self.magnitude = float(magnitude)
        self.detail = detail
        super().__init__(f"{self.kind}({_fmt(self.magnitude)})")


class NotHermitian(ValidationError):
    kind = "NotHermitian"


class TraceNotOne(ValidationError):
    kind = "TraceNotOne"


class NotPSD(ValidationError):
    kind = "NotPSD"


class ShapeMismatch(ValidationError):
    kind = "ShapeMismatch"

    def __init__(self, detail: str):
        self.magnitude = float("nan")
        self.detail = detail
        ValueError.__init__(self, f"ShapeMismatch({detail})")


class DomainError(ValueError):
    """A constructor parameter lies outside the family's domain."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.complex128, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class DensityMatrix:
    dim_a: int
    dim_b: int
    mat: np.ndarray = field(repr=False)

    @property
    def dims(self) -> tuple[int, int]:
        return self.dim_a, self.dim_b

    @property
    def size(self) -> int:
        return self.dim_a * self.dim_b

    def purity(self) -> float:
        return float(np.vdot(self.mat, self.mat).real)


@dataclass(frozen=True)
class PureState:
    dim_a: int
    dim_b: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if self.dim_a < 1 or self.dim_b < 1 or amp.size != self.dim_a * self.dim_b:
            raise ShapeMismatch(
                f"{amp.size} amplitudes for dims ({self.dim_a}, {self.dim_b})"
            )
        if not np.all(np.isfinite(amp)):
            raise ValueError("amplitudes must be finite")
        norm = float(np.linalg.norm(amp))
        if abs(norm - 1.0) > DEFAULT_VALIDATION.norm_tol:
            raise ValueError(f"amplitudes have norm {norm!r}, expected 1")
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    @classmethod
    def normalized(cls, dim_a: int, dim_b: int, amplitudes) -> "PureState":
        amp = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        return cls(dim_a, dim_b, amp / np.linalg.norm(amp))


def validate_density(
    m, dim_a: int, dim_b: int, config: ValidationConfig = DEFAULT_VALIDATION
) -> DensityMatrix:
    """Check ``m`` is a density matrix on ``dim_a x dim_b`` and wrap it.

    Checks run in the order shape, Hermiticity, trace, positivity; the first
    failure is raised.
    """
    if dim_a < 1 or dim_b < 1:
        raise ShapeMismatch(f"dimensions must be positive, got ({dim_a}, {dim_b})")
    try:
        m = as_matrix(m)
    except ValueError as exc:
        raise ShapeMismatch(str(exc)) from exc
    d = dim_a * dim_b
    if m.shape != (d, d):
        raise ShapeMismatch(f"matrix is {m.shape[0]}x{m.shape[1]}, dims need {d}x{d}")

    herm = hs_norm(m - m.conj().T)
    if herm > config.hermitian_tol:
        raise NotHermitian(herm)
    tr = complex(np.trace(m))
    if abs(tr - 1.0) > config.trace_tol:
        raise TraceNotOne(tr.real - 1.0 if abs(tr.imag) <= config.trace_tol else abs(tr - 1.0))
    lam_min = float(eig_hermitian(m).eigenvalues[0])
    if lam_min < -config.psd_tol:
        raise NotPSD(lam_min)
    return DensityMatrix(dim_a, dim_b, _frozen(m))


def pure_density(psi: PureState) -> DensityMatrix:
    amp = psi.amplitudes
    return DensityMatrix(psi.dim_a, psi.dim_b, _frozen(np.outer(amp, amp.conj())))


def product(rho_a, rho_b) -> DensityMatrix:
    """``rho_a (x) rho_b`` for two single-party density matrices."""
    a, b = as_matrix(rho_a), as_matrix(rho_b)
    return validate_density(kron(a, b), a.shape[0], b.shape[0])


def _max_entangled_vector(d: int) -> np.ndarray:
    v = np.zeros(d * d, dtype=np.complex128)
    v[np.arange(d) * (d + 1)] = 1.0 / np.sqrt(d)
    return v


def max_entangled(d: int) -> DensityMatrix:
    if d < 2:
        raise DomainError(f"max_entangled needs d >= 2, got {d}")
    return pure_density(PureState(d, d, _max_entangled_vector(d)))


def max_mixed(dim_a: int, dim_b: int) -> DensityMatrix:
    if dim_a < 1 or dim_b < 1:
        raise DomainError(f"dimensions must be positive, got ({dim_a}, {dim_b})")
    d = dim_a * dim_b
    return DensityMatrix(dim_a, dim_b, _frozen(np.eye(d) / d))


def _check_unit_interval(name: str, x: float) -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {x!r}")
    return x


def singlet() -> DensityMatrix:
    psi = np.array([0, 1, -1, 0], dtype=np.complex128) / np.sqrt(2)
    return pure_density(PureState(2, 2, psi))


def werner_qubit(p: float) -> DensityMatrix:
    """``p |psi-><psi-| + (1 - p) I/4`` on two qubits."""
    p = _check_unit_interval("p", p)
    mat = p * singlet().mat + (1.0 - p) * np.eye(4) / 4.0
    return DensityMatrix(2, 2, _frozen(mat))


def isotropic(d: int, fidelity: float) -> DensityMatrix:
    """``F P+ + (1 - F)(I - P+)/(d^2 - 1)`` with ``P+`` the maximally entangled projector."""
    if d < 2:
        raise DomainError(f"isotropic needs d >= 2, got {d}")
    f = _check_unit_interval("F", fidelity)
    proj = max_entangled(d).mat
    mat = f * proj + (1.0 - f) * (np.eye(d * d) - proj) / (d * d - 1)
    return DensityMatrix(d, d, _frozen(mat))


def horodecki_3x3(a: float) -> DensityMatrix:
    """Horodecki's one-parameter 3x3 family, PPT for every ``a`` in [0, 1]."""
    a = _check_unit_interval("a", a)
    m = np.zeros((9, 9), dtype=np.complex128)
    for i in (0, 1, 2, 3, 4, 5, 7):
        m[i, i] = a
    for i, j in ((0, 4), (0, 8), (4, 8)):
        m[i, j] = m[j, i] = a
    m[6, 6] = m[8, 8] = (1.0 + a) / 2.0
    m[6, 8] = m[8, 6] = np.sqrt(1.0 - a * a) / 2.0
    return DensityMatrix(3, 3, _frozen(m / (8.0 * a + 1.0)))


def random_ginibre(dim_a: int, dim_b: int, rank: int | None = None, seed: int = 0) -> DensityMatrix:
    """``G G^dagger / Tr(G G^dagger)`` with ``G`` a ``d x rank`` complex Ginibre matrix."""
    d = dim_a * dim_b
    if dim_a < 1 or dim_b < 1:
        raise DomainError(f"dimensions must be positive, got ({dim_a}, {dim_b})")
    rank = d if rank is None else rank
    if not 1 <= rank <= d:
        raise DomainError(f"rank must lie in [1, {d}], got {rank}")
    g = complex_gaussian(make_rng(seed), (d, rank))
    m = g @ g.conj().T
    m = 0.5 * (m + m.conj().T)
    return DensityMatrix(dim_a, dim_b, _frozen(m / np.trace(m).real))


def random_pure(dim_a: int, dim_b: int, seed: int = 0) -> PureState:
    return PureState(dim_a, dim_b, random_unit_vector(make_rng(seed), dim_a * dim_b))


def separable_components(dim_a: int, dim_b: int, terms: int, seed: int = 0):
    """Weights and pure local vectors ``(x_k, y_k)`` behind :func:`random_separable`."""
    if dim_a < 1 or dim_b < 1:
        raise DomainError(f"dimensions must be positive, got ({dim_a}, {dim_b})")
    if terms < 1:
        raise DomainError(f"terms must be >= 1, got {terms}")
    rng = make_rng(seed)
    weights = simplex_weights(rng, terms)
    factors = [(random_unit_vector(rng, dim_a), random_unit_vector(rng, dim_b)) for _ in weights]
    return weights, factors


def random_separable(dim_a: int, dim_b: int, terms: int, seed: int = 0) -> DensityMatrix:
    """Convex mixture of ``terms`` random pure product states."""
    weights, factors = separable_components(dim_a, dim_b, terms, seed)
    d = dim_a * dim_b
    m = np.zeros((d, d), dtype=np.complex128)
    for w, (x, y) in zip(weights, factors):
        m += w * kron(np.outer(x, x.conj()), np.outer(y, y.conj()))
    return DensityMatrix(dim_a, dim_b, _frozen(0.5 * (m + m.conj().T)))
