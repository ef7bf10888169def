"""Entanglement witnesses: entropic uncertainty estimates and NAQC.

Alice measures observables ``R`` and ``S`` (two bases of the MUB set, by
default the computational basis 0 and basis 1). The state is certified
entangled whenever an uncertainty estimate ``E`` falls below ``-log2 c``,
where ``c`` is the largest squared overlap between the two bases:

* tomographic ``E_T = H(R|B) + H(S|B)``, quantum conditional entropies of
  the post-measurement states ``rho_XB``;
* measurement ``E_M = H(R|R) + H(S|S)``, classical conditional entropies
  when Bob measures the same basis;
* Fano ``E_F = H(p_R) + H(p_S) + (p_R + p_S) log2(d - 1)``, with ``p_X`` the
  probability that Alice's and Bob's outcomes differ.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .advantage import naqc_optimized, unnormalized_conditionals
from .coherence import Measure
from .errors import DimensionMismatch
from .qmath import binary_entropy, entropy_of_spectrum, partial_trace, shannon_entropy, von_neumann_entropy


@dataclass(frozen=True)
class WitnessReport:
    e_t: float
    e_m: float
    e_f: float
    log_inv_c: float
    p_r: float
    p_s: float
    conditional_entropy: float  # H(A|B) = S(rho_AB) - S(rho_B), diagnostic only
    naqc_measure: Measure | None = None
    naqc_value: float | None = None
    naqc_bound: float | None = None

    @property
    def verdict_t(self):
        return self.e_t < self.log_inv_c

    @property
    def verdict_m(self):
        return self.e_m < self.log_inv_c

    @property
    def verdict_f(self):
        return self.e_f < self.log_inv_c

    @property
    def naqc_verdict(self):
        if self.naqc_value is None:
            return None
        return self.naqc_value > self.naqc_bound

    def to_json(self):
        return {
            "e_t": self.e_t,
            "e_m": self.e_m,
            "e_f": self.e_f,
            "log_inv_c": self.log_inv_c,
            "p_r": self.p_r,
            "p_s": self.p_s,
            "conditional_entropy": self.conditional_entropy,
            "verdicts": {"T": self.verdict_t, "M": self.verdict_m, "F": self.verdict_f},
            "naqc_measure": None if self.naqc_measure is None else self.naqc_measure.value,
            "naqc_value": self.naqc_value,
            "naqc_bound": self.naqc_bound,
            "naqc_verdict": self.naqc_verdict,
        }


def max_overlap(basis_r, basis_s):
    """``c = max_{k,l} |<psi_k|phi_l>|^2``."""
    return float(np.max(np.abs(np.conj(basis_r).T @ basis_s) ** 2))


def quantum_conditional_entropy(state, basis):
    """``H(X|B) = S(rho_XB) - S(rho_B)`` after measuring A in ``basis``.

    ``rho_XB`` is block diagonal with blocks ``<phi_k|rho|phi_k>``, so its
    spectrum is the union of the block spectra.
    """
    sigma = unnormalized_conditionals(state, basis)
    sigma = 0.5 * (sigma + np.conj(np.swapaxes(sigma, -1, -2)))
    s_xb = entropy_of_spectrum(np.linalg.eigvalsh(sigma).ravel())
    return s_xb - von_neumann_entropy(partial_trace(state, "B"))


def joint_outcomes(state, basis):
    """``P[a, b]`` when both parties measure in ``basis``."""
    t = state.tensor()
    p = np.real(np.einsum("xa,yb,xyzw,za,wb->ab", np.conj(basis), np.conj(basis), t, basis, basis))
    p = np.clip(p, 0.0, None)
    return p / p.sum()


def classical_conditional_entropy(joint):
    """``H(A|B) = H(A, B) - H(B)`` for a joint table indexed ``[a, b]``."""
    return shannon_entropy(joint.ravel()) - shannon_entropy(joint.sum(axis=0))


def eur_witness(state, mubs, r_index=0, s_index=1):
    """Entropic-uncertainty estimates for observables given by two MUB bases."""
    d = mubs.dim
    if state.dims != (d, d):
        raise DimensionMismatch(f"state dims {state.dims} incompatible with MUB dimension {d}")
    if r_index == s_index:
        raise ValueError("R and S must be different bases")
    for idx in (r_index, s_index):
        if not 0 <= idx <= d:
            raise IndexError(f"basis index {idx} outside 0..{d}")
    br, bs = mubs.bases[r_index], mubs.bases[s_index]

    e_t = quantum_conditional_entropy(state, br) + quantum_conditional_entropy(state, bs)
    jr, js = joint_outcomes(state, br), joint_outcomes(state, bs)
    e_m = max(classical_conditional_entropy(jr), 0.0) + max(classical_conditional_entropy(js), 0.0)
    p_r = float(1.0 - np.trace(jr))
    p_s = float(1.0 - np.trace(js))
    p_r, p_s = min(max(p_r, 0.0), 1.0), min(max(p_s, 0.0), 1.0)
    e_f = binary_entropy(p_r) + binary_entropy(p_s) + (p_r + p_s) * np.log2(d - 1)

    s_ab = von_neumann_entropy(state.matrix)
    h_ab = s_ab - von_neumann_entropy(partial_trace(state, "B"))
    return WitnessReport(
        e_t=float(e_t),
        e_m=float(e_m),
        e_f=float(e_f),
        log_inv_c=float(-np.log2(max_overlap(br, bs))),
        p_r=p_r,
        p_s=p_s,
        conditional_entropy=float(h_ab),
    )


def naqc_witness(state, mubs, measure, r_index=0, s_index=1):
    """Uncertainty estimates plus the optimized-NAQC verdict for ``measure``."""
    measure = Measure.parse(measure)
    base = eur_witness(state, mubs, r_index, s_index)
    rep = naqc_optimized(state, mubs, measure)
    return WitnessReport(
        **{k: getattr(base, k) for k in ("e_t", "e_m", "e_f", "log_inv_c", "p_r", "p_s", "conditional_entropy")},
        naqc_measure=measure,
        naqc_value=rep.value,
        naqc_bound=rep.bound,
    )


def _eta(x):
    return (1 + 2 * x) / 3


def closed_form(family, x, quantity):
    """Closed-form uncertainty estimate and optimized NAQC values.

    ``family`` is ``"isotropic2"`` (two-qubit isotropic state) or ``"rho1"``;
    ``quantity`` is ``"E"`` (all three estimates coincide), ``"l1_tilde"`` or
    ``"re_tilde"``.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x={x} outside [0, 1]")
    if family == "isotropic2":
        eta = _eta(x)
        table = {
            "E": lambda: 2 * binary_entropy(eta),
            "l1_tilde": lambda: abs(4 * x - 1),
            "re_tilde": lambda: 3 - 3 * binary_entropy(eta),
        }
    elif family == "rho1":
        table = {
            "E": lambda: 2 * binary_entropy(x),
            "l1_tilde": lambda: 1 + abs(4 * x - 2),
            "re_tilde": lambda: 3 - 2 * binary_entropy(x),
        }
    else:
        raise ValueError(f"unknown family {family!r}")
    try:
        return float(table[quantity]())
    except KeyError:
        raise ValueError(f"unknown quantity {quantity!r}") from None
