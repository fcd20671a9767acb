import numpy as np
import pytest

from dephasim import (
    DimensionMismatchError,
    NonHermitianError,
    hermitian_eigensystem,
    matrix_exponential,
    partial_trace,
    partial_transpose,
    tensor_product,
)
from oracles import partial_trace_oracle, random_density, random_hermitian, taylor_expm, tensor_oracle

SZ = np.diag([1.0, -1.0]).astype(complex)
SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


def test_tensor_identity():
    assert np.array_equal(tensor_product(np.eye(2), np.eye(2)), np.eye(4))


def test_tensor_sigma_z_pair():
    # basis order |11>, |10>, |01>, |00|
    assert np.array_equal(tensor_product(SZ, SZ), np.diag([1.0, -1.0, -1.0, 1.0]))


def test_tensor_matches_index_oracle():
    rng = np.random.default_rng(11)
    for _ in range(5):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        assert np.max(np.abs(tensor_product(a, b) - tensor_oracle(a, b))) <= 1e-14


def test_tensor_associative():
    rng = np.random.default_rng(12)
    for _ in range(5):
        a, b, c = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(3))
        left = tensor_product(tensor_product(a, b), c)
        right = tensor_product(a, tensor_product(b, c))
        assert np.max(np.abs(left - right)) <= 1e-14


def test_eigensystem_known_spectra():
    for h in (SZ, SX):
        eigvals, _ = hermitian_eigensystem(h)
        assert np.allclose(eigvals, [1.0, -1.0], atol=1e-12)


def test_eigensystem_reconstructs_random_hermitian():
    rng = np.random.default_rng(13)
    for _ in range(5):
        h = random_hermitian(rng, 6)
        eigvals, eigvecs = hermitian_eigensystem(h)
        assert np.all(np.diff(eigvals) <= 0)
        rebuilt = (eigvecs * eigvals) @ eigvecs.conj().T
        assert np.max(np.abs(rebuilt - h)) <= 1e-11
        gram = eigvecs.conj().T @ eigvecs
        assert np.max(np.abs(gram - np.eye(6))) <= 1e-10
        assert abs(np.sum(eigvals) - np.trace(h).real) <= 1e-10


def test_eigensystem_rejects_non_hermitian():
    with pytest.raises(NonHermitianError):
        hermitian_eigensystem(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_expm_trivial_cases():
    assert np.allclose(matrix_exponential(np.zeros((3, 3))), np.eye(3), atol=1e-15)
    d = np.diag([0.3, -1.2 + 0.5j])
    assert np.allclose(matrix_exponential(d), np.diag(np.exp(np.diag(d))), atol=1e-14)


def test_expm_matches_taylor_series():
    rng = np.random.default_rng(14)
    m = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    m *= 5.0 / np.linalg.norm(m, 2)
    assert np.max(np.abs(matrix_exponential(m) - taylor_expm(m, 60))) <= 1e-10


def test_expm_inverse_identity():
    rng = np.random.default_rng(15)
    m = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    m *= 10.0 / np.linalg.norm(m, 2)
    product = matrix_exponential(m) @ matrix_exponential(-m)
    assert np.max(np.abs(product - np.eye(6))) <= 1e-10


def test_partial_trace_product_state():
    rng = np.random.default_rng(16)
    rho_a = random_density(rng, 2)
    rho_b = random_density(rng, 2)
    reduced = partial_trace(tensor_product(rho_a, rho_b), 1, (2, 2))
    assert np.max(np.abs(reduced - rho_a)) <= 1e-14


def test_partial_trace_bell_marginal():
    psi = np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2)
    rho = np.outer(psi, psi)
    assert np.allclose(partial_trace(rho, 2, (2, 2)), np.eye(2) / 2, atol=1e-14)


def test_partial_trace_matches_index_oracle():
    rng = np.random.default_rng(17)
    rho = random_density(rng, 9)
    for keep in (1, 2):
        got = partial_trace(rho, keep, (3, 3))
        want = partial_trace_oracle(rho, keep, (3, 3))
        assert np.max(np.abs(got - want)) <= 1e-14
        assert np.max(np.abs(got - got.conj().T)) <= 1e-12
        assert abs(np.trace(got) - 1.0) <= 1e-12


def test_partial_trace_rejects_bad_dims():
    with pytest.raises(DimensionMismatchError):
        partial_trace(np.eye(4), 1, (3, 3))


def test_partial_transpose_product_factorization():
    rng = np.random.default_rng(18)
    rho_a = random_density(rng, 2)
    rho_b = random_density(rng, 2)
    got = partial_transpose(tensor_product(rho_a, rho_b), 2, (2, 2))
    assert np.max(np.abs(got - tensor_product(rho_a, rho_b.T))) <= 1e-15
    got1 = partial_transpose(tensor_product(rho_a, rho_b), 1, (2, 2))
    assert np.max(np.abs(got1 - tensor_product(rho_a.T, rho_b))) <= 1e-15


def test_partial_transpose_is_involution():
    rng = np.random.default_rng(19)
    rho = random_density(rng, 9)
    for sub in (1, 2):
        assert np.array_equal(partial_transpose(partial_transpose(rho, sub, (3, 3)), sub, (3, 3)), rho)


def test_partial_transpose_singlet_spectrum():
    psi = np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2)
    pt = partial_transpose(np.outer(psi, psi), 2, (2, 2))
    assert abs(np.linalg.eigvalsh(pt)[0] + 0.5) <= 1e-12


def test_partial_transpose_preserves_trace_and_hermiticity():
    rng = np.random.default_rng(20)
    rho = random_density(rng, 6)
    pt = partial_transpose(rho, 2, (2, 3))
    assert abs(np.trace(pt) - np.trace(rho)) <= 1e-15
    assert np.max(np.abs(pt - pt.conj().T)) <= 1e-15
