"""Basis-dependent coherence measures and their MUB complementarity bounds."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, UnsupportedDimension
from .mub import is_prime
from .qmath import binary_entropy, entropy_of_spectrum, hermitian_eigenvalues


class Measure(enum.Enum):
    L1 = "l1"
    RE = "re"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown coherence measure {value!r}; use 'l1' or 're'") from None


def _rotate(rho, basis):
    rho = np.asarray(rho, dtype=complex)
    basis = np.asarray(basis, dtype=complex)
    if basis.shape != rho.shape:
        raise DimensionMismatch(f"basis {basis.shape} does not match state {rho.shape}")
    return basis.conj().T @ rho @ basis


def l1_offdiagonal(m):
    """Sum of moduli of off-diagonal entries (works on stacked matrices)."""
    a = np.abs(m)
    return np.sum(a, axis=(-2, -1)) - np.sum(np.diagonal(a, axis1=-2, axis2=-1), axis=-1)


def diagonal_entropy(m):
    """Shannon entropy of the real diagonal of a density matrix."""
    p = np.clip(np.real(np.diagonal(m)), 0.0, None)
    return entropy_of_spectrum(p)


def coherence(rho, basis, measure):
    """Coherence of ``rho`` in the basis given by the columns of ``basis``.

    ``l1`` sums the moduli of off-diagonal elements; ``re`` is
    ``S(diag) - S(rho)``. Round-off negatives are clamped to zero.
    """
    measure = Measure.parse(measure)
    rot = _rotate(rho, basis)
    if measure is Measure.L1:
        val = float(l1_offdiagonal(rot))
    else:
        val = diagonal_entropy(rot) - entropy_of_spectrum(hermitian_eigenvalues(rho))
    return max(val, 0.0)


def mub_coherence_sum(rho, mubs, measure):
    """Total coherence over every basis of a MUB set."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (mubs.dim, mubs.dim):
        raise DimensionMismatch(f"state shape {rho.shape} vs MUB dimension {mubs.dim}")
    measure = Measure.parse(measure)
    if measure is Measure.RE:
        s_rho = entropy_of_spectrum(hermitian_eigenvalues(rho))
        return float(sum(max(diagonal_entropy(_rotate(rho, b)) - s_rho, 0.0) for b in mubs.bases))
    return float(sum(coherence(rho, b, measure) for b in mubs.bases))


def purity_in_basis(rho, basis):
    """``sum_a <a|rho|a>^2`` for the basis vectors ``|a>``."""
    p = np.real(np.diagonal(_rotate(rho, basis)))
    return float(np.sum(p * p))


@dataclass(frozen=True)
class Bound:
    measure: Measure
    dim: int
    value: float


def bound_value(measure, d, sharpened=True):
    """State-independent cap on the MUB coherence sum.

    l1: ``(d - 1) sqrt(d (d + 1))``.
    re, ``d >= 3``: ``(d + 1) log2 d - (d - 1)^2 log2(d - 1) / (d (d - 2))``.
    re, ``d = 2``: ``3 H(1/2 + sqrt(3)/6)``; pass ``sharpened=False`` for the
    ``d -> 2`` limit of the general formula, ``3 - log2(e) / 2``.
    """
    measure = Measure.parse(measure)
    d = int(d)
    if d < 2 or not is_prime(d):
        raise UnsupportedDimension(f"bounds are defined here for prime d only, got {d}")
    if measure is Measure.L1:
        value = (d - 1) * np.sqrt(d * (d + 1))
    elif d == 2:
        # general formula is 0/0 at d = 2
        value = 3 * binary_entropy(0.5 + np.sqrt(3) / 6) if sharpened else 3 - np.log2(np.e) / 2
    else:
        value = (d + 1) * np.log2(d) - (d - 1) ** 2 * np.log2(d - 1) / (d * (d - 2))
    return Bound(measure, d, float(value))


def re_sum_purity_bound(p, d):
    """Purity-dependent cap on the relative-entropy sum, valid for ``d >= 3``."""
    return (d + 1) * (np.log2(d) + p - 1) - (d - 1) * np.log2(d - 1) * (d * p - 1) / (d * (d - 2))


def l1_basis_purity_bound(rho_purity, basis_purity, d):
    """Per-basis cap ``sqrt(d (d - 1) [P(rho) - P(A|rho)])`` on the l1 coherence."""
    return float(np.sqrt(max(d * (d - 1) * (rho_purity - basis_purity), 0.0)))
