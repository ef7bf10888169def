"""State families and seeded samplers.

Random numbers
--------------
Every sampler takes an explicit integer seed. Raw 64-bit words come from
numpy's PCG64 bit generator seeded with ``seed mod 2**64``; a word ``w`` is
mapped to a uniform ``u = (w >> 11) * 2**-53`` in ``[0, 1)``. Standard normal
pairs use Box-Muller on two consecutive uniforms ``(u1, u2)``::

    r = sqrt(-2 ln(1 - u1));  re = r cos(2 pi u2);  im = r sin(2 pi u2)

and each complex Gaussian entry consumes one such pair, filled row-major.
Only the PCG64 word stream is relied on, which numpy keeps stable across
releases.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import WrongDimension
from .qmath import BipartiteState, kron, validate_density

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class SeedStream:
    """Deterministic uniform/Gaussian stream over PCG64 raw words."""

    def __init__(self, seed):
        self._bits = np.random.PCG64(int(seed) % (1 << 64))

    def uniform(self, n):
        words = np.asarray(self._bits.random_raw(n), dtype=np.uint64)
        return (words >> np.uint64(11)).astype(float) * 2.0 ** -53

    def complex_normal(self, shape):
        n = int(np.prod(shape))
        u = self.uniform(2 * n).reshape(n, 2)
        r = np.sqrt(-2.0 * np.log1p(-u[:, 0]))
        z = r * np.cos(2 * np.pi * u[:, 1]) + 1j * r * np.sin(2 * np.pi * u[:, 1])
        return z.reshape(shape)

    def flat_dirichlet(self, k):
        # Normalised unit exponentials; 1 - u keeps the log argument in (0, 1].
        e = -np.log1p(-self.uniform(k))
        return e / e.sum()


def _ginibre_density(stream, d):
    g = stream.complex_normal((d, d))
    w = g @ g.conj().T
    w = 0.5 * (w + w.conj().T)
    return w / np.real(np.trace(w))


def random_density(d, seed):
    """Seeded Ginibre-ensemble density matrix ``G G^dagger / tr(G G^dagger)``."""
    return _ginibre_density(SeedStream(seed), int(d))


def random_bipartite(dims, seed):
    """Random (generically entangled) state on ``dims[0] x dims[1]``."""
    da, db = dims
    return BipartiteState(random_density(da * db, seed), (da, db))


@dataclass(frozen=True, eq=False)
class SeparableSpec:
    weights: np.ndarray
    rho_a: tuple
    rho_b: tuple

    def __post_init__(self):
        q = np.asarray(self.weights, dtype=float)
        if q.min() < 0 or abs(q.sum() - 1.0) > 1e-12:
            raise ValueError("separable weights must be a probability vector")
        if not (len(q) == len(self.rho_a) == len(self.rho_b)):
            raise ValueError("weights and factor lists differ in length")

    def assemble(self, dims):
        mat = sum(q * kron(a, b) for q, a, b in zip(self.weights, self.rho_a, self.rho_b))
        return BipartiteState(mat, dims)


def random_separable(dim_a, dim_b, k=4, seed=0):
    """Random mixture ``sum_k q_k rho_A^k (x) rho_B^k``.

    Weights come first from the stream (flat Dirichlet), then the factors
    ``rho_A^1, rho_B^1, rho_A^2, ...`` as Ginibre densities.

    Returns
    -------
    spec : SeparableSpec
    state : BipartiteState
    """
    if k < 1:
        raise ValueError("need at least one product term")
    stream = SeedStream(seed)
    q = stream.flat_dirichlet(k)
    ra, rb = [], []
    for _ in range(k):
        ra.append(_ginibre_density(stream, dim_a))
        rb.append(_ginibre_density(stream, dim_b))
    spec = SeparableSpec(q, tuple(ra), tuple(rb))
    return spec, spec.assemble((dim_a, dim_b))


def _check_x(x):
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"mixing parameter x={x} outside [0, 1]")


def max_entangled_vector(d):
    v = np.zeros(d * d, dtype=complex)
    v[np.arange(d) * (d + 1)] = 1.0 / np.sqrt(d)
    return v


def max_entangled(d):
    """Projector onto ``sum_n |nn> / sqrt(d)``."""
    v = max_entangled_vector(d)
    return BipartiteState(np.outer(v, v.conj()), (d, d))


def isotropic(d, x):
    """Isotropic state with singlet fraction ``<Phi|rho|Phi> = x``."""
    _check_x(x)
    v = max_entangled_vector(d)
    n = d * d
    mat = (1.0 - x) / (n - 1) * np.eye(n) + (n * x - 1.0) / (n - 1) * np.outer(v, v.conj())
    return BipartiteState(mat, (d, d))


PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
PSI_MINUS = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)


def rho1(x):
    """``x |Phi+><Phi+| + (1 - x) |Psi-><Psi-|``."""
    _check_x(x)
    mat = x * np.outer(PHI_PLUS, PHI_PLUS.conj()) + (1 - x) * np.outer(PSI_MINUS, PSI_MINUS.conj())
    return BipartiteState(mat, (2, 2))


def product_state(rho_a, rho_b):
    rho_a = validate_density(rho_a)
    rho_b = validate_density(rho_b)
    return BipartiteState(kron(rho_a, rho_b), (rho_a.shape[0], rho_b.shape[0]))


@dataclass(frozen=True)
class BlochDecomposition:
    """Local Bloch vectors ``r`` (A), ``s`` (B) and correlation tensor ``t``.

    Components are ordered x, y, z.
    """

    r: np.ndarray
    s: np.ndarray
    t: np.ndarray

    def reassemble(self):
        eye = np.eye(2)
        mat = np.eye(4, dtype=complex)
        for i, p in enumerate(PAULIS):
            mat = mat + self.r[i] * np.kron(p, eye) + self.s[i] * np.kron(eye, p)
            for j, q in enumerate(PAULIS):
                mat = mat + self.t[i, j] * np.kron(p, q)
        return mat / 4


def bloch_decompose(state):
    if state.dims != (2, 2):
        raise WrongDimension(f"Bloch decomposition needs a two-qubit state, got dims {state.dims}")
    rho = state.matrix
    eye = np.eye(2)
    r = np.array([np.real(np.trace(rho @ np.kron(p, eye))) for p in PAULIS])
    s = np.array([np.real(np.trace(rho @ np.kron(eye, p))) for p in PAULIS])
    t = np.array([[np.real(np.trace(rho @ np.kron(p, q))) for q in PAULIS] for p in PAULIS])
    return BlochDecomposition(r, s, t)
