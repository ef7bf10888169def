"""Complete sets of mutually unbiased bases in prime dimension.

Basis ``l`` is stored as a ``d x d`` unitary whose *columns* are the basis
vectors, so ``bases[l][:, m]`` is the m-th vector of the l-th basis and the
outcome label of that vector is ``m``.

For odd prime ``d`` the bases are

* ``l = 0``: computational basis,
* ``l = 1 .. d-1``: ``exp(2 pi i l (m + n)^2 / d) / sqrt(d)``,
* ``l = d``: Fourier basis ``exp(2 pi i m n / d) / sqrt(d)``.

The quadratic-phase family is not orthogonal for ``d = 2``, so qubits use the
eigenbases of sigma_z, sigma_x, sigma_y (in that order, ``+1`` eigenvector
first).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import UnsupportedDimension


def is_prime(d):
    if d < 2:
        return False
    if d < 4:
        return True
    if d % 2 == 0:
        return False
    k = 3
    while k * k <= d:
        if d % k == 0:
            return False
        k += 2
    return True


def _fix_phases(u):
    # First nonzero amplitude of each column made real and non-negative.
    u = u.copy()
    for m in range(u.shape[1]):
        col = u[:, m]
        idx = np.flatnonzero(np.abs(col) > 1e-12)[0]
        phase = col[idx] / abs(col[idx])
        col = col / phase
        col[idx] = abs(col[idx])
        u[:, m] = col
    return u


@dataclass(frozen=True, eq=False)
class MUBSet:
    dim: int
    bases: np.ndarray  # shape (d + 1, d, d), columns are vectors

    def __len__(self):
        return self.bases.shape[0]

    def __getitem__(self, l):
        return self.bases[l]

    def projectors(self, l):
        """Rank-1 projectors ``|phi_m><phi_m|`` of basis ``l``, shape (d, d, d)."""
        u = self.bases[l]
        return np.einsum("im,jm->mij", u, u.conj())

    def to_json(self):
        return {
            "d": self.dim,
            "bases": [
                [[[float(z.real), float(z.imag)] for z in basis[:, m]] for m in range(self.dim)]
                for basis in self.bases
            ],
        }

    @classmethod
    def from_json(cls, obj):
        d = int(obj["d"])
        raw = np.asarray(obj["bases"], dtype=float)
        if raw.shape[1:] != (d, d, 2):
            raise ValueError(f"bases array has shape {raw.shape}, expected (k, {d}, {d}, 2)")
        vecs = raw[..., 0] + 1j * raw[..., 1]
        return cls(d, np.swapaxes(vecs, 1, 2).copy())


def generate_mubs(d):
    """Build the ``d + 1`` mutually unbiased bases for prime ``d``.

    Raises
    ------
    UnsupportedDimension
        If ``d`` is not prime (prime powers are not supported).
    """
    d = int(d)
    if d < 2 or not is_prime(d):
        raise UnsupportedDimension(f"mutually unbiased bases are only built for prime d, got {d}")

    if d == 2:
        s = 1.0 / np.sqrt(2.0)
        bases = np.array([
            [[1, 0], [0, 1]],
            [[s, s], [s, -s]],
            [[s, s], [1j * s, -1j * s]],
        ], dtype=complex)
    else:
        n = np.arange(d)
        m = n[:, None]
        bases = np.empty((d + 1, d, d), dtype=complex)
        bases[0] = np.eye(d)
        for l in range(1, d):
            # column m, row n; exponent reduced mod d before forming the phase
            k = (l * (m + n[None, :]) ** 2) % d
            bases[l] = (np.exp(2j * np.pi * k / d) / np.sqrt(d)).T
        bases[d] = np.exp(2j * np.pi * ((n[:, None] * n[None, :]) % d) / d) / np.sqrt(d)

    bases = np.stack([_fix_phases(b) for b in bases])
    bases.setflags(write=False)
    return MUBSet(d, bases)


@dataclass(frozen=True)
class MUBValidation:
    orthonormality_error: float
    unbiasedness_error: float
    tol: float

    @property
    def passed(self):
        return self.orthonormality_error <= self.tol and self.unbiasedness_error <= self.tol

    def to_json(self):
        return {
            "orthonormality_error": self.orthonormality_error,
            "unbiasedness_error": self.unbiasedness_error,
            "tol": self.tol,
            "passed": self.passed,
        }


def validate_mubs(mubs, tol=1e-10):
    """Report the worst orthonormality and unbiasedness deviations."""
    d = mubs.dim
    eye = np.eye(d)
    ortho = max(float(np.max(np.abs(b.conj().T @ b - eye))) for b in mubs.bases)
    unbiased = 0.0
    for i, j in combinations(range(len(mubs.bases)), 2):
        ov = np.abs(mubs.bases[i].conj().T @ mubs.bases[j]) ** 2
        unbiased = max(unbiased, float(np.max(np.abs(ov - 1.0 / d))))
    return MUBValidation(ortho, unbiased, tol)
