"""Nonlocal advantage of quantum coherence (NAQC).

Alice measures her half of a ``d x d`` state in one of the ``d + 1``
mutually unbiased bases and announces basis and outcome; Bob then measures
coherence of his conditional state. Everything here is assembled from one
``(d + 1) x (d + 1)`` score table

    f[i, j] = sum_a p(a | i) C_j(rho_{B | i, a})

(Alice basis ``i``, Bob reference basis ``j``). The averaged functional is
``sum_{i != j} f[i, j] / d``; the permutation functional for a bijection
``alpha`` is ``sum_i f[i, alpha[i]]``, and its maximum over ``alpha`` is a
linear assignment problem.

Indices are zero-based: basis ``l`` of :func:`naqc.mub.generate_mubs`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .assignment import brute_force_assignment, max_assignment, path_score
from .coherence import Measure, bound_value, l1_offdiagonal
from .errors import DimensionMismatch, NotAPermutation, WrongDimension
from .qmath import binary_entropy, partial_trace
from .states import bloch_decompose

# Outcomes with smaller probability carry no weight and no defined state.
ZERO_PROB = 1e-12


class Framework(enum.Enum):
    AVERAGED = "averaged"
    OPTIMIZED = "optimized"
    FIXED = "perm"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        value = str(value).lower()
        if value == "fixed":
            return cls.FIXED
        return cls(value)


@dataclass(frozen=True, eq=False)
class ConditionalEnsemble:
    """Bob's states after Alice measures basis ``index``.

    ``states[a]`` is ``rho_{B|index,a}``; where ``defined[a]`` is False the
    probability is below ``ZERO_PROB`` and the state is a placeholder
    (maximally mixed) that must not be used.
    """

    index: int
    probs: np.ndarray
    states: np.ndarray
    defined: np.ndarray

    def mixture(self):
        return np.einsum("a,aij->ij", np.where(self.defined, self.probs, 0.0), self.states)


@dataclass(frozen=True, eq=False)
class CostMatrix:
    measure: Measure
    values: np.ndarray

    @property
    def dim(self):
        return self.values.shape[0] - 1


@dataclass(frozen=True)
class NAQCReport:
    measure: Measure
    framework: Framework
    value: float
    bound: float
    best_permutation: tuple | None = None
    achieved: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "achieved", bool(self.value > self.bound))

    def to_json(self):
        return {
            "measure": self.measure.value,
            "framework": self.framework.value,
            "value": self.value,
            "bound": self.bound,
            "achieved": self.achieved,
            # one-based, matching observable labels A_1 .. A_{d+1}
            "best_permutation": (
                None if self.best_permutation is None else [j + 1 for j in self.best_permutation]
            ),
        }


def _check_dims(state, mubs):
    if state.dims != (mubs.dim, mubs.dim):
        raise DimensionMismatch(f"state dims {state.dims} incompatible with MUB dimension {mubs.dim}")


def unnormalized_conditionals(state, basis):
    """``<phi_a| rho_AB |phi_a>`` for every column ``phi_a`` of ``basis``, shape (d, dB, dB)."""
    t = state.tensor()
    return np.einsum("xa,xbyc,ya->abc", np.conj(basis), t, basis)


def conditional_ensemble(state, mubs, i):
    _check_dims(state, mubs)
    if not 0 <= i <= mubs.dim:
        raise IndexError(f"measurement index {i} outside 0..{mubs.dim}")
    sigma = unnormalized_conditionals(state, mubs.bases[i])
    probs = np.real(np.einsum("aii->a", sigma))
    defined = probs >= ZERO_PROB
    d = state.dim_b
    states = np.empty_like(sigma)
    for a in range(sigma.shape[0]):
        states[a] = sigma[a] / probs[a] if defined[a] else np.eye(d) / d
    return ConditionalEnsemble(i, np.clip(probs, 0.0, None), states, defined)


def _entropy_rows(lam):
    # Conditional states are renormalised by p(a|i), which scales round-off
    # by 1/p; clamp instead of rejecting.
    lam = np.clip(np.asarray(lam, dtype=float), 0.0, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(lam > 0, lam * np.log2(np.where(lam > 0, lam, 1.0)), 0.0)
    return -terms.sum(axis=-1)


def _cost_row(state, mubs, i, measure):
    sigma = unnormalized_conditionals(state, mubs.bases[i])
    probs = np.real(np.einsum("aii->a", sigma))
    keep = probs >= ZERO_PROB
    sigma, probs = sigma[keep], probs[keep]
    w = mubs.bases
    # rotated[j, a] = W_j^dagger sigma_a W_j
    rotated = np.einsum("jxm,axy,jyn->jamn", np.conj(w), sigma, w)
    if measure is Measure.L1:
        return l1_offdiagonal(rotated).sum(axis=1)
    rho = sigma / probs[:, None, None]
    rho = 0.5 * (rho + np.conj(np.swapaxes(rho, -1, -2)))
    s_state = _entropy_rows(np.linalg.eigvalsh(rho))
    diag = np.real(np.diagonal(rotated, axis1=-2, axis2=-1)) / probs[None, :, None]
    s_diag = _entropy_rows(diag)
    return (np.maximum(s_diag - s_state[None, :], 0.0) * probs[None, :]).sum(axis=1)


def cost_matrix(state, mubs, measure):
    """Score table ``f[i, j]``, diagonal included."""
    _check_dims(state, mubs)
    measure = Measure.parse(measure)
    values = np.stack([_cost_row(state, mubs, i, measure) for i in range(mubs.dim + 1)])
    values = np.maximum(values, 0.0)
    values.setflags(write=False)
    return CostMatrix(measure, values)


def averaged_value(costs):
    f = costs.values
    return float((f.sum() - np.trace(f)) / costs.dim)


def naqc_averaged(state, mubs, measure, costs=None):
    measure = Measure.parse(measure)
    costs = costs if costs is not None else cost_matrix(state, mubs, measure)
    bound = bound_value(measure, mubs.dim).value
    return NAQCReport(measure, Framework.AVERAGED, averaged_value(costs), bound)


def check_permutation(perm, n):
    perm = tuple(int(p) for p in perm)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise NotAPermutation(f"{perm} is not a permutation of 0..{n - 1}")
    return perm


def naqc_fixed_permutation(state, mubs, perm, measure, costs=None):
    """Permutation functional for a given bijection ``perm`` (Alice basis -> Bob basis)."""
    measure = Measure.parse(measure)
    perm = check_permutation(perm, mubs.dim + 1)
    costs = costs if costs is not None else cost_matrix(state, mubs, measure)
    bound = bound_value(measure, mubs.dim).value
    return NAQCReport(measure, Framework.FIXED, path_score(costs.values, perm), bound, perm)


def optimize_permutation(costs, derangements_only=False):
    f = np.array(costs.values, dtype=float)
    if derangements_only:
        np.fill_diagonal(f, -np.inf)
    return max_assignment(f)


def naqc_optimized(state, mubs, measure, derangements_only=False, costs=None):
    """Maximum of the permutation functional over all bijections.

    Fixed points (Bob reusing Alice's basis) are allowed unless
    ``derangements_only`` is set. Ties resolve to the lexicographically
    smallest permutation.
    """
    measure = Measure.parse(measure)
    costs = costs if costs is not None else cost_matrix(state, mubs, measure)
    perm, value = optimize_permutation(costs, derangements_only)
    bound = bound_value(measure, mubs.dim).value
    return NAQCReport(measure, Framework.OPTIMIZED, value, bound, perm)


def naqc_optimized_brute(state, mubs, measure):
    """Exhaustive search over all ``(d + 1)!`` permutations (reference path).

    Uses the same tie rule as :func:`naqc_optimized`, so both return the
    score of the same permutation. Returns ``(perm, value)``.
    """
    costs = cost_matrix(state, mubs, measure)
    return brute_force_assignment(costs.values)


def ensemble_mixture_error(state, mubs):
    """Largest deviation of any ``sum_a p_a rho_{B|a}`` from ``tr_A rho``."""
    rho_b = partial_trace(state, "B")
    return max(
        float(np.max(np.abs(conditional_ensemble(state, mubs, i).mixture() - rho_b)))
        for i in range(mubs.dim + 1)
    )


# Qubit MUB index -> Pauli index (x=0, y=1, z=2); basis 0 is sigma_z.
BASIS_TO_PAULI = (2, 0, 1)


@dataclass(frozen=True)
class ClosedFormTerms:
    """Per ``(i, a)`` quantities of the two-qubit formulas; NaN where ``p(a|i) = 0``."""

    probs: np.ndarray
    beta: np.ndarray
    lam: np.ndarray


def two_qubit_closed_form(state, perm, measure):
    """Permutation functional of a two-qubit state from its Bloch data.

    Alice outcome ``a = 0`` is the ``+1`` eigenvector. For Alice Pauli ``p``,
    Bob Pauli ``q`` and ``v = s + (-1)^a t[p, :]``, ``n = 1 + (-1)^a r[p]``::

        p(a) = n / 2
        C_l1 = sqrt(sum_{k != q} v_k^2) / n
        C_re = H(1/2 + v_q / (2n)) - H(1/2 + |v| / (2n))

    ``perm`` uses MUB indices (0: sigma_z, 1: sigma_x, 2: sigma_y).
    """
    if state.dims != (2, 2):
        raise WrongDimension(f"closed form applies to two qubits, got {state.dims}")
    measure = Measure.parse(measure)
    perm = check_permutation(perm, 3)
    bl = bloch_decompose(state)
    probs = np.full((3, 2), np.nan)
    beta = np.full((3, 2), np.nan)
    lam = np.full((3, 2), np.nan)
    total = 0.0
    for i in range(3):
        p_idx = BASIS_TO_PAULI[i]
        q_idx = BASIS_TO_PAULI[perm[i]]
        for a in (0, 1):
            sgn = 1.0 if a == 0 else -1.0
            norm = 1.0 + sgn * bl.r[p_idx]
            if norm < ZERO_PROB:
                continue
            v = bl.s + sgn * bl.t[p_idx]
            probs[i, a] = norm / 2
            beta[i, a] = min(max(0.5 + v[q_idx] / (2 * norm), 0.0), 1.0)
            lam[i, a] = min(max(0.5 + np.linalg.norm(v) / (2 * norm), 0.0), 1.0)
            if measure is Measure.L1:
                c = np.sqrt(sum(v[k] ** 2 for k in range(3) if k != q_idx)) / norm
            else:
                c = max(binary_entropy(beta[i, a]) - binary_entropy(lam[i, a]), 0.0)
            total += probs[i, a] * c
    return total, ClosedFormTerms(probs, beta, lam)
