"""Small dense complex linear algebra: spectra, entropies, partial traces.

All matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.
Bipartite states carry their local dimensions in :class:`BipartiteState`,
ordered A (x) B with composite index ``a * dimB + b``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidState,
    NoConvergence,
    NotADistribution,
    NotHermitian,
)

# Density-matrix checks use this absolute tolerance throughout.
STATE_TOL = 1e-10


def dagger(m):
    return np.conj(np.swapaxes(m, -1, -2))


def _check_square_hermitian(m, tol):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains NaN or Inf")
    err = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if err > tol:
        raise NotHermitian(f"max |m - m^dagger| = {err:.3e} exceeds {tol:.1e}")
    return m


def jacobi_eigh(m, tol=1e-13, max_sweeps=100):
    """Cyclic Jacobi diagonalisation of a complex Hermitian matrix.

    Each rotation zeroes one off-diagonal pair ``(p, q)``; sweeps run over all
    pairs in row-major order until the off-diagonal Frobenius norm drops
    below ``tol * max(1, ||m||_F)``.

    Parameters
    ----------
    m : (n, n) array_like
        Hermitian matrix. Only the Hermitian part is used.
    tol : float
        Relative convergence threshold on the off-diagonal mass.
    max_sweeps : int
        Sweep budget; exceeding it raises :class:`NoConvergence`.

    Returns
    -------
    w : (n,) ndarray
        Eigenvalues in ascending order.
    v : (n, n) ndarray
        Unitary whose columns are the matching eigenvectors.
    """
    a = np.array(m, dtype=complex)
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(a)))

    offdiag = ~np.eye(n, dtype=bool)

    def off_norm():
        return float(np.sqrt(np.sum(np.abs(a[offdiag]) ** 2)))

    for _ in range(max_sweeps):
        if off_norm() < tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag < 1e-300:
                    continue
                u = apq / mag
                theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^dagger A J with J_pp = J_qq = c, J_pq = s u, J_qp = -s conj(u)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(u) * col_q
                a[:, q] = s * u * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * u * row_q
                a[q, :] = s * np.conj(u) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * np.conj(u) * vq
                v[:, q] = s * u * vp + c * vq
    else:
        if off_norm() >= tol * scale:
            raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")

    w = np.real(np.diag(a))
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigenvalues(m, tol=STATE_TOL, method="lapack"):
    """Eigenvalues of a Hermitian matrix, ascending.

    ``method="lapack"`` uses ``numpy.linalg.eigvalsh``; ``method="jacobi"``
    uses :func:`jacobi_eigh`. Both are deterministic.

    Raises
    ------
    NotHermitian
        If ``max |m - m^dagger| > tol``.
    NoConvergence
        If the underlying iteration fails.
    """
    m = _check_square_hermitian(m, tol)
    if method == "jacobi":
        return jacobi_eigh(m)[0]
    if method != "lapack":
        raise ValueError(f"unknown eigensolver {method!r}")
    try:
        return np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def _clamp_spectrum(lam, tol=STATE_TOL):
    lam = np.asarray(lam, dtype=float)
    if lam.size and lam.min() < -tol:
        raise InvalidState(f"eigenvalue {lam.min():.3e} is below -{tol:.0e}")
    return np.clip(lam, 0.0, 1.0)


def _xlog2x(p):
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    nz = p > 0
    out[nz] = p[nz] * np.log2(p[nz])
    return out


def entropy_of_spectrum(lam):
    """``-sum lam log2 lam`` with tiny negative eigenvalues clamped to zero."""
    return float(-np.sum(_xlog2x(_clamp_spectrum(lam))))


def von_neumann_entropy(rho):
    """Von Neumann entropy in bits."""
    rho = np.asarray(rho, dtype=complex)
    s = entropy_of_spectrum(hermitian_eigenvalues(rho))
    return min(max(s, 0.0), float(np.log2(rho.shape[0])))


def purity(rho):
    """``tr rho^2`` (real for Hermitian input)."""
    rho = np.asarray(rho, dtype=complex)
    return float(np.real(np.sum(rho * rho.T)))


def kron(a, b):
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def shannon_entropy(p):
    """Shannon entropy (bits) of a probability vector."""
    p = np.asarray(p, dtype=float).ravel()
    if p.size == 0 or p.min() < -1e-12 or abs(p.sum() - 1.0) > 1e-9:
        raise NotADistribution(f"not a probability vector: {p!r}")
    return float(-np.sum(_xlog2x(np.clip(p, 0.0, 1.0))))


def binary_entropy(x):
    """``H(x) = -x log2 x - (1-x) log2 (1-x)``."""
    if not -1e-12 <= x <= 1 + 1e-12:
        raise NotADistribution(f"binary entropy argument {x} outside [0, 1]")
    x = min(max(float(x), 0.0), 1.0)
    return float(-(_xlog2x(x) + _xlog2x(1.0 - x)))


def validate_density(rho, tol=STATE_TOL):
    """Return ``rho`` as a complex array, raising if it is not a density matrix."""
    try:
        rho = _check_square_hermitian(rho, tol)
    except NotHermitian as exc:
        raise InvalidState(str(exc)) from exc
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol:
        raise InvalidState(f"trace {tr} differs from 1")
    lam = np.linalg.eigvalsh(rho)
    if lam.min() < -tol:
        raise InvalidState(f"negative eigenvalue {lam.min():.3e}")
    return rho


def is_density(rho, tol=STATE_TOL):
    try:
        validate_density(rho, tol)
    except (InvalidState, DimensionMismatch, ValueError):
        return False
    return True


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """Density matrix of a two-party system, ordered A (x) B."""

    matrix: np.ndarray
    dims: tuple

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != 2 or min(dims) < 1:
            raise DimensionMismatch(f"bipartite dims must be two positive ints, got {self.dims}")
        mat = np.array(self.matrix, dtype=complex)
        n = dims[0] * dims[1]
        if mat.shape != (n, n):
            raise DimensionMismatch(f"matrix shape {mat.shape} does not match dims {dims}")
        mat = validate_density(mat)
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "dims", dims)

    @property
    def dim_a(self):
        return self.dims[0]

    @property
    def dim_b(self):
        return self.dims[1]

    def tensor(self):
        """View as a rank-4 array indexed ``[a, b, a', b']``."""
        da, db = self.dims
        return self.matrix.reshape(da, db, da, db)

    def __repr__(self):
        return f"BipartiteState(dims={self.dims})"


def partial_trace(state, keep):
    """Reduced density matrix of subsystem ``keep`` (``"A"`` or ``"B"``)."""
    t = state.tensor()
    if keep == "A":
        return np.einsum("ibjb->ij", t)
    if keep == "B":
        return np.einsum("aiaj->ij", t)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
