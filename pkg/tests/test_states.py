import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccnr.criteria import ccnr_value, partial_transpose
from ccnr.states import (
    DensityMatrix,
    DomainError,
    NotHermitian,
    NotPSD,
    PureState,
    ShapeMismatch,
    TraceNotOne,
    horodecki_3x3,
    isotropic,
    max_entangled,
    max_mixed,
    product,
    pure_density,
    random_ginibre,
    random_pure,
    random_separable,
    separable_components,
    singlet,
    validate_density,
    werner_qubit,
)

from conftest import partial_trace_b, partial_transpose_loops

BELL = np.array([1, 0, 0, 1]) / np.sqrt(2)
BELL_PROJ = np.zeros((4, 4))
BELL_PROJ[np.ix_([0, 3], [0, 3])] = 0.5


def revalidate(rho: DensityMatrix) -> DensityMatrix:
    return validate_density(rho.mat, rho.dim_a, rho.dim_b)


# validate_density

def test_validate_accepts_pure_product():
    rho = validate_density(np.diag([1.0, 0, 0, 0]), 2, 2)
    assert rho.dims == (2, 2)
    assert not rho.mat.flags.writeable


def test_validate_not_psd():
    with pytest.raises(NotPSD) as exc:
        validate_density(np.diag([0.5, 0.6, 0, -0.1]), 2, 2)
    assert exc.value.magnitude == pytest.approx(-0.1, abs=1e-12)
    assert str(exc.value) == "NotPSD(-0.1)"


def test_validate_trace_not_one():
    with pytest.raises(TraceNotOne) as exc:
        validate_density(2 * np.eye(4) / 4, 2, 2)
    assert str(exc.value) == "TraceNotOne(1.0)"
    assert exc.value.magnitude == 1.0


def test_validate_not_hermitian():
    m = np.diag([0.5, 0.5, 0, 0]).astype(complex)
    m[0, 1] = 0.1
    with pytest.raises(NotHermitian) as exc:
        validate_density(m, 2, 2)
    assert exc.value.magnitude == pytest.approx(np.sqrt(2) * 0.1)


@pytest.mark.parametrize(
    "mat, dims",
    [(np.eye(4) / 4, (2, 3)), (np.ones((4, 3)), (2, 2)), (np.eye(4) / 4, (0, 4))],
)
def test_validate_shape(mat, dims):
    with pytest.raises(ShapeMismatch):
        validate_density(mat, *dims)


def test_validate_tolerates_rounding():
    m = np.diag([1.0 + 5e-11, -5e-11, 0, 0])
    validate_density(m, 2, 2)


# pure states

def test_pure_density_product():
    rho = pure_density(PureState(2, 2, [1, 0, 0, 0]))
    np.testing.assert_array_equal(rho.mat, np.diag([1, 0, 0, 0]))


def test_pure_density_bell():
    np.testing.assert_allclose(pure_density(PureState(2, 2, BELL)).mat, BELL_PROJ, atol=1e-15)


def test_pure_density_purity():
    for seed in range(10):
        rho = pure_density(random_pure(3, 2, seed))
        assert rho.purity() == pytest.approx(1.0, abs=1e-12)
        revalidate(rho)


def test_pure_state_rejects_bad_norm():
    with pytest.raises(ValueError):
        PureState(2, 2, [1, 1, 0, 0])
    with pytest.raises(ShapeMismatch):
        PureState(2, 2, [1, 0, 0])


# families

def test_max_entangled_qubits():
    np.testing.assert_allclose(max_entangled(2).mat, BELL_PROJ, atol=1e-15)


@pytest.mark.parametrize("d", [2, 3])
def test_max_entangled_reductions(d):
    rho = max_entangled(d)
    assert rho.purity() == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(partial_trace_b(rho.mat, d, d), np.eye(d) / d, atol=1e-15)
    revalidate(rho)


def test_max_entangled_domain():
    with pytest.raises(DomainError):
        max_entangled(1)


@pytest.mark.parametrize("dims", [(2, 2), (3, 3), (2, 3)])
def test_max_mixed(dims):
    rho = max_mixed(*dims)
    d = dims[0] * dims[1]
    np.testing.assert_array_equal(rho.mat, np.eye(d) / d)
    prod = product(np.eye(dims[0]) / dims[0], np.eye(dims[1]) / dims[1])
    np.testing.assert_allclose(prod.mat, rho.mat, atol=1e-16)


def test_werner_endpoints():
    np.testing.assert_allclose(werner_qubit(0).mat, np.eye(4) / 4, atol=1e-16)
    psi = np.array([0, 1, -1, 0]) / np.sqrt(2)
    np.testing.assert_allclose(werner_qubit(1).mat, np.outer(psi, psi), atol=1e-15)
    np.testing.assert_allclose(singlet().mat, np.outer(psi, psi), atol=1e-15)


def test_werner_half_spectrum():
    # singlet projector has spectrum {1, 0, 0, 0}; mixing with I/4 shifts every eigenvalue by (1-p)/4
    p = 0.5
    expected = np.sort(p * np.array([1, 0, 0, 0]) + (1 - p) / 4)
    np.testing.assert_allclose(np.linalg.eigvalsh(werner_qubit(p).mat), expected, atol=1e-14)
    from ccnr.linalg import eig_hermitian

    np.testing.assert_allclose(eig_hermitian(werner_qubit(p).mat).eigenvalues, [1 / 8, 1 / 8, 1 / 8, 5 / 8], atol=1e-14)


def test_werner_domain():
    for p in (-0.1, 1.1):
        with pytest.raises(DomainError):
            werner_qubit(p)


def test_isotropic_examples():
    np.testing.assert_allclose(isotropic(2, 0.25).mat, np.eye(4) / 4, atol=1e-16)
    np.testing.assert_allclose(isotropic(2, 1.0).mat, BELL_PROJ, atol=1e-15)
    rng = np.random.default_rng(1)
    proj = max_entangled(3).mat
    for f in rng.uniform(0, 1, 5):
        assert np.trace(isotropic(3, f).mat @ proj).real == pytest.approx(f, abs=1e-12)
    with pytest.raises(DomainError):
        isotropic(2, 1.5)
    with pytest.raises(DomainError):
        isotropic(1, 0.5)


@settings(max_examples=40, deadline=None)
@given(st.floats(0, 1), st.floats(0, 1), st.floats(0, 1))
def test_families_affine(p1, p2, lam):
    mix = lam * p1 + (1 - lam) * p2
    mix = min(max(mix, 0.0), 1.0)
    for build in (werner_qubit, lambda f: isotropic(2, f), lambda f: isotropic(3, f)):
        lhs = build(mix).mat
        rhs = lam * build(p1).mat + (1 - lam) * build(p2).mat
        np.testing.assert_allclose(lhs, rhs, atol=1e-12, rtol=0)


def test_horodecki_endpoints():
    rho0 = horodecki_3x3(0.0)
    assert np.trace(rho0.mat).real == pytest.approx(1.0, abs=1e-15)
    revalidate(rho0)
    rho1 = horodecki_3x3(1.0)
    assert rho1.mat[6, 8] == 0 and rho1.mat[8, 6] == 0
    assert rho1.mat[0, 0] == pytest.approx(1 / 9)
    assert rho1.mat[6, 6] == pytest.approx(1 / 9)


def test_horodecki_layout():
    a = 0.3
    m = horodecki_3x3(a).mat * (8 * a + 1)
    assert m[0, 4] == m[4, 8] == m[0, 8] == pytest.approx(a)
    assert m[6, 6] == m[8, 8] == pytest.approx((1 + a) / 2)
    assert m[6, 8] == pytest.approx(np.sqrt(1 - a * a) / 2)
    assert m[2, 2] == pytest.approx(a)
    with pytest.raises(DomainError):
        horodecki_3x3(-0.01)


@pytest.mark.parametrize("a", np.round(np.linspace(0, 1, 11), 10))
def test_horodecki_valid_and_ppt(a):
    rho = horodecki_3x3(a)
    revalidate(rho)
    # independent route: loop-built partial transpose, LAPACK spectrum
    pt = partial_transpose_loops(rho.mat, 3, 3)
    np.testing.assert_allclose(pt, partial_transpose(rho), atol=0)
    assert np.linalg.eigvalsh(pt).min() >= -1e-10


# random ensembles

def test_ginibre_valid_and_deterministic():
    for seed in range(10):
        rho = random_ginibre(2, 3, seed=seed)
        revalidate(rho)
    np.testing.assert_array_equal(random_ginibre(3, 3, 4, 11).mat, random_ginibre(3, 3, 4, 11).mat)
    assert not np.array_equal(random_ginibre(3, 3, 4, 11).mat, random_ginibre(3, 3, 4, 12).mat)


def test_ginibre_rank_one_is_pure():
    for seed in range(5):
        assert random_ginibre(3, 3, 1, seed).purity() == pytest.approx(1.0, abs=1e-10)


def test_ginibre_rank_controls_spectrum():
    ev = np.linalg.eigvalsh(random_ginibre(3, 3, 2, 0).mat)
    assert np.sum(ev > 1e-12) == 2


def test_ginibre_bad_rank():
    with pytest.raises(DomainError):
        random_ginibre(2, 2, 5, 0)
    with pytest.raises(DomainError):
        random_ginibre(2, 2, 0, 0)


def test_separable_weights_on_simplex():
    for seed in range(20):
        w, factors = separable_components(3, 3, 10, seed)
        assert len(factors) == 10
        assert np.all(w >= 0)
        assert abs(w.sum() - 1) <= 1e-12


def test_separable_single_term_is_product():
    rho = random_separable(2, 3, 1, seed=4)
    assert rho.purity() == pytest.approx(1.0, abs=1e-12)
    assert ccnr_value(rho) <= 1 + 1e-9


def test_separable_valid():
    for seed in range(20):
        revalidate(random_separable(3, 3, 10, seed))
    with pytest.raises(DomainError):
        random_separable(2, 2, 0)


def test_separable_is_ppt_and_undetected():
    for seed in range(50):
        rho = random_separable(3, 3, 1 + seed % 10, seed)
        assert np.linalg.eigvalsh(partial_transpose_loops(rho.mat, 3, 3)).min() >= -1e-9
        assert ccnr_value(rho) <= 1 + 1e-9


def test_density_immutable():
    rho = max_mixed(2, 2)
    with pytest.raises(ValueError):
        rho.mat[0, 0] = 1
