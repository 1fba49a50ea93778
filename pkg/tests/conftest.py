"""Shared oracles for the test-suite.

The helpers here are deliberately written with plain loops or numpy/LAPACK so
they stay independent of the code under test.
"""

import numpy as np
import pytest

PAULI = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def partial_trace_b(rho, dim_a, dim_b):
    out = np.zeros((dim_a, dim_a), dtype=complex)
    for i in range(dim_a):
        for j in range(dim_a):
            out[i, j] = sum(rho[i * dim_b + k, j * dim_b + k] for k in range(dim_b))
    return out


def partial_transpose_loops(rho, dim_a, dim_b):
    d = dim_a * dim_b
    out = np.zeros((d, d), dtype=complex)
    for i in range(dim_a):
        for k in range(dim_b):
            for j in range(dim_a):
                for l in range(dim_b):
                    out[i * dim_b + l, j * dim_b + k] = rho[i * dim_b + k, j * dim_b + l]
    return out


def pauli_coefficients(rho):
    """Matrix ``C`` with ``rho = sum_ab C[a, b] (s_a/sqrt2) (x) (s_b/sqrt2)``."""
    c = np.zeros((4, 4))
    for a, sa in enumerate(PAULI):
        for b, sb in enumerate(PAULI):
            c[a, b] = np.trace(rho @ np.kron(sa, sb)).real / 2.0
    return c


def pauli_ccnr_oracle(rho):
    """Sum of operator Schmidt coefficients for a two-qubit state with diagonal Pauli correlations."""
    c = pauli_coefficients(np.asarray(rho))
    assert np.max(np.abs(c - np.diag(np.diag(c)))) < 1e-14, "oracle needs diagonal correlations"
    return float(np.sum(np.abs(np.diag(c))))


def haar_unitary(rng, d):
    z = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_complex(rng, rows, cols):
    return rng.normal(size=(rows, cols)) + 1j * rng.normal(size=(rows, cols))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
