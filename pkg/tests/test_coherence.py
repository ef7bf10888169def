import math

import numpy as np
import pytest

from naqc.coherence import (
    Measure,
    bound_value,
    coherence,
    l1_basis_purity_bound,
    mub_coherence_sum,
    purity_in_basis,
    re_sum_purity_bound,
)
from naqc.errors import DimensionMismatch, UnsupportedDimension
from naqc.mub import generate_mubs
from naqc.qmath import purity
from naqc.states import random_density

PLUS = np.full((2, 2), 0.5, dtype=complex)


def test_coherence_examples():
    eye2 = np.eye(2)
    assert coherence(PLUS, eye2, "l1") == pytest.approx(1.0)
    rho = np.diag([0.2, 0.3, 0.5])
    for m in Measure:
        assert coherence(rho, np.eye(3), m) == pytest.approx(0.0, abs=1e-12)
    for d in (2, 3, 5):
        psi = np.ones(d) / np.sqrt(d)
        mc = np.outer(psi, psi)
        assert coherence(mc, np.eye(d), "l1") == pytest.approx(d - 1)
        assert coherence(mc, np.eye(d), "re") == pytest.approx(math.log2(d))


def test_coherence_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        coherence(PLUS, np.eye(3), "l1")
    with pytest.raises(ValueError):
        Measure.parse("skew")


def test_mub_sum_examples(mubs):
    for d in (2, 3, 5):
        assert mub_coherence_sum(np.eye(d) / d, mubs[d], "l1") == pytest.approx(0, abs=1e-12)
        assert mub_coherence_sum(np.eye(d) / d, mubs[d], "re") == pytest.approx(0, abs=1e-12)
    ket0 = np.diag([1.0, 0.0])
    assert mub_coherence_sum(ket0, mubs[2], "l1") == pytest.approx(2.0)


def test_purity_in_basis_examples():
    p = np.array([0.1, 0.6, 0.3])
    assert purity_in_basis(np.diag(p), np.eye(3)) == pytest.approx(np.sum(p**2))
    assert purity_in_basis(PLUS, np.eye(2)) == pytest.approx(0.5)


def test_bound_examples():
    assert bound_value("l1", 2).value == pytest.approx(math.sqrt(6), abs=1e-12)
    assert bound_value("l1", 3).value == pytest.approx(2 * math.sqrt(12), abs=1e-12)
    assert bound_value("re", 3).value == pytest.approx(4 * math.log2(3) - 4 / 3, abs=1e-12)
    # high-precision oracle for the sharpened qubit bound
    mpmath = pytest.importorskip("mpmath")
    x = mpmath.mpf(1) / 2 + mpmath.sqrt(3) / 6
    h = -x * mpmath.log(x, 2) - (1 - x) * mpmath.log(1 - x, 2)
    assert bound_value("re", 2).value == pytest.approx(float(3 * h), abs=1e-12)
    assert bound_value("re", 2, sharpened=False).value == pytest.approx(3 - math.log2(math.e) / 2)
    for d in (2, 3, 5, 7):
        for m in Measure:
            assert bound_value(m, d).value > 0


@pytest.mark.parametrize("d", [4, 6, 1])
def test_bound_unsupported(d):
    with pytest.raises(UnsupportedDimension):
        bound_value("l1", d)


def test_complementarity_sums_below_bounds(mubs):
    for d in (2, 3, 5, 7):
        b_l1 = bound_value("l1", d).value
        b_re = bound_value("re", d).value
        for seed in range(300):
            rho = random_density(d, seed)
            assert mub_coherence_sum(rho, mubs[d], "l1") <= b_l1 + 1e-9
            assert mub_coherence_sum(rho, mubs[d], "re") <= b_re + 1e-9


def test_pure_states_stay_below_bounds(mubs):
    # pure states are where the sums are largest
    rng = np.random.default_rng(3)
    for d in (2, 3, 5):
        for _ in range(200):
            psi = rng.normal(size=d) + 1j * rng.normal(size=d)
            psi /= np.linalg.norm(psi)
            rho = np.outer(psi, psi.conj())
            assert mub_coherence_sum(rho, mubs[d], "l1") <= bound_value("l1", d).value + 1e-9
            assert mub_coherence_sum(rho, mubs[d], "re") <= bound_value("re", d).value + 1e-9


def test_per_basis_l1_bound(mubs):
    for d in (2, 3, 5, 7):
        for seed in range(500):
            rho = random_density(d, seed)
            p = purity(rho)
            for b in mubs[d].bases:
                cap = l1_basis_purity_bound(p, purity_in_basis(rho, b), d)
                assert coherence(rho, b, "l1") <= cap + 1e-9


def test_purity_dependent_re_bound(mubs):
    for d in (3, 5, 7):
        for seed in range(300):
            rho = random_density(d, seed)
            assert mub_coherence_sum(rho, mubs[d], "re") <= re_sum_purity_bound(purity(rho), d) + 1e-9


def test_coherence_covariance():
    rng = np.random.default_rng(0)
    for d in (2, 3, 4):
        for seed in range(20):
            rho = random_density(d, seed)
            basis, _ = np.linalg.qr(rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)))
            u, _ = np.linalg.qr(rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)))
            for m in Measure:
                lhs = coherence(u @ rho @ u.conj().T, u @ basis, m)
                assert lhs == pytest.approx(coherence(rho, basis, m), abs=1e-9)
