import math

import numpy as np
import pytest

from naqc.errors import DimensionMismatch, InvalidState, NotADistribution, NotHermitian
from naqc.mub import generate_mubs
from naqc.qmath import (
    BipartiteState,
    binary_entropy,
    hermitian_eigenvalues,
    jacobi_eigh,
    kron,
    partial_trace,
    purity,
    shannon_entropy,
    validate_density,
    von_neumann_entropy,
)
from naqc.states import SIGMA_X, SIGMA_Z, random_density


@pytest.mark.parametrize("method", ["lapack", "jacobi"])
def test_eigenvalue_examples(method):
    np.testing.assert_allclose(hermitian_eigenvalues(SIGMA_Z, method=method), [-1, 1], atol=1e-14)
    np.testing.assert_allclose(hermitian_eigenvalues(np.eye(3), method=method), [1, 1, 1], atol=1e-14)
    np.testing.assert_allclose(hermitian_eigenvalues(SIGMA_X, method=method), [-1, 1], atol=1e-14)


def test_eigenvalues_reject_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eigenvalues(np.array([[0, 1], [0, 0]]))
    with pytest.raises(DimensionMismatch):
        hermitian_eigenvalues(np.ones((2, 3)))


@pytest.mark.parametrize("n", [2, 3, 5, 9, 16])
def test_jacobi_reconstruction(n):
    rng = np.random.default_rng(n)
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    h = g + g.conj().T
    w, v = jacobi_eigh(h)
    assert np.all(np.diff(w) >= 0)
    assert np.max(np.abs(v @ np.diag(w) @ v.conj().T - h)) < 1e-9
    assert np.max(np.abs(v.conj().T @ v - np.eye(n))) < 1e-12
    np.testing.assert_allclose(w, np.linalg.eigvalsh(h), atol=1e-10)
    w2, v2 = jacobi_eigh(h)
    assert np.array_equal(w, w2) and np.array_equal(v, v2)


def test_eigenvalues_unitarily_invariant():
    for seed in range(20):
        rho = random_density(4, seed)
        g = np.random.default_rng(seed).normal(size=(4, 4)) + 1j
        u, _ = np.linalg.qr(g)
        np.testing.assert_allclose(
            hermitian_eigenvalues(u @ rho @ u.conj().T), hermitian_eigenvalues(rho), atol=1e-9
        )


def test_entropy_examples():
    assert von_neumann_entropy(np.diag([1.0, 0.0])) == 0.0
    for d in (2, 3, 5):
        assert von_neumann_entropy(np.eye(d) / d) == pytest.approx(math.log2(d), abs=1e-12)
    h14 = -(0.25 * math.log2(0.25) + 0.75 * math.log2(0.75))
    assert von_neumann_entropy(np.diag([0.75, 0.25])) == pytest.approx(h14, abs=1e-12)
    assert h14 == pytest.approx(0.811278, abs=1e-6)


def test_entropy_clamps_tiny_negative_eigenvalues():
    assert von_neumann_entropy(np.diag([1.0 + 5e-11, -5e-11])) == pytest.approx(0.0, abs=1e-9)
    with pytest.raises(InvalidState):
        von_neumann_entropy(np.diag([1.1, -0.1]))


def test_purity_examples():
    assert purity(np.diag([1.0, 0.0])) == pytest.approx(1.0)
    assert purity(np.eye(3) / 3) == pytest.approx(1 / 3)
    assert purity(np.diag([0.75, 0.25])) == pytest.approx(5 / 8)


def test_kron_examples():
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    np.testing.assert_array_equal(kron(np.diag([1, 0]), np.diag([0, 1])), np.diag([0, 1, 0, 0]))
    ket00 = np.array([1, 0, 0, 0])
    np.testing.assert_array_equal(kron(SIGMA_X, SIGMA_X) @ ket00, [0, 0, 0, 1])


def test_partial_trace_examples():
    ra, rb = random_density(2, 1), random_density(3, 2)
    s = BipartiteState(kron(ra, rb), (2, 3))
    assert np.max(np.abs(partial_trace(s, "B") - rb)) < 1e-12
    assert np.max(np.abs(partial_trace(s, "A") - ra)) < 1e-12

    phi = np.array([1, 0, 0, 1]) / np.sqrt(2)
    bell = BipartiteState(np.outer(phi, phi), (2, 2))
    np.testing.assert_allclose(partial_trace(bell, "B"), np.eye(2) / 2, atol=1e-15)

    classical = BipartiteState(np.diag([0.5, 0, 0, 0.5]), (2, 2))
    np.testing.assert_allclose(partial_trace(classical, "A"), np.eye(2) / 2, atol=1e-15)


def test_partial_trace_reproduces_factors():
    for seed in range(30):
        da, db = 2 + seed % 3, 2 + (seed // 3) % 3
        ra, rb = random_density(da, seed), random_density(db, seed + 100)
        s = BipartiteState(kron(ra, rb), (da, db))
        assert np.max(np.abs(partial_trace(s, "A") - ra)) < 1e-12
        assert np.max(np.abs(partial_trace(s, "B") - rb)) < 1e-12
        assert np.trace(partial_trace(s, "B")).real == pytest.approx(1.0, abs=1e-12)


def test_shannon_and_binary_entropy():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    # independent high-precision evaluation
    mpmath = pytest.importorskip("mpmath")
    x = mpmath.mpf(1) / 2 + mpmath.sqrt(3) / 6
    ref = float(-x * mpmath.log(x, 2) - (1 - x) * mpmath.log(1 - x, 2))
    assert binary_entropy(0.5 + math.sqrt(3) / 6) == pytest.approx(ref, abs=1e-14)
    assert shannon_entropy([0.25] * 4) == pytest.approx(2.0)
    assert shannon_entropy([1.0, 0.0]) == 0.0
    with pytest.raises(NotADistribution):
        shannon_entropy([0.5, 0.6])
    with pytest.raises(NotADistribution):
        shannon_entropy([1.2, -0.2])


def test_eigenvalue_sum_and_entropy_purity_lemma():
    for d in (2, 3, 5, 7):
        for seed in range(1000):
            rho = random_density(d, seed)
            lam = hermitian_eigenvalues(rho)
            assert abs(lam.sum() - 1) < 1e-9
            assert von_neumann_entropy(rho) + purity(rho) >= 1 - 1e-9


def test_bipartite_state_validation():
    with pytest.raises(InvalidState):
        BipartiteState(np.eye(4), (2, 2))
    with pytest.raises(DimensionMismatch):
        BipartiteState(np.eye(4) / 4, (2, 3))
    s = BipartiteState(np.eye(4) / 4, (2, 2))
    with pytest.raises(ValueError):
        s.matrix[0, 0] = 1
    with pytest.raises(InvalidState):
        validate_density(np.diag([1.5, -0.5]))


def test_mub_rotation_stability():
    # eigenvalues survive a change to any MUB basis
    m = generate_mubs(5)
    rho = random_density(5, 3)
    for b in m.bases:
        np.testing.assert_allclose(
            hermitian_eigenvalues(b.conj().T @ rho @ b), hermitian_eigenvalues(rho), atol=1e-9
        )
