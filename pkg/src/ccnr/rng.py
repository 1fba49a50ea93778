"""Seeded random sampling.

Every ensemble draws from a PCG64 generator. Sample ``i`` of a run seeded with
``seed`` uses its own generator seeded with ``seed + i``, so a sample can be
reproduced in isolation and parallel workers never share state.  Gaussians come
from the uniform stream through the Box-Muller transform.
"""

from __future__ import annotations

import numpy as np

from .linalg import eig_hermitian


def make_rng(seed: int) -> np.random.Generator:
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def substream(seed: int, index: int) -> np.random.Generator:
    return make_rng(seed + index)


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    """I.i.d. standard complex normals (real and imaginary parts each N(0, 1))."""
    u1 = 1.0 - rng.random(shape)  # in (0, 1], keeps log finite
    u2 = rng.random(shape)
    return np.sqrt(-2.0 * np.log(u1)) * np.exp(2j * np.pi * u2)


def simplex_weights(rng: np.random.Generator, k: int) -> np.ndarray:
    """Uniform point on the probability simplex with ``k`` vertices."""
    e = -np.log(1.0 - rng.random(k))
    return e / e.sum()


def random_unit_vector(rng: np.random.Generator, d: int) -> np.ndarray:
    v = complex_gaussian(rng, d)
    return v / np.linalg.norm(v)


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    """``exp(iH)`` for a random Hermitian ``H``, built with our own eigensolver."""
    g = complex_gaussian(rng, (d, d))
    h = 0.5 * (g + g.conj().T)
    eig = eig_hermitian(h)
    v = eig.eigenvectors
    return (v * np.exp(1j * eig.eigenvalues)) @ v.conj().T
