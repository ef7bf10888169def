"""
Witness reports for a few states
================================

Print the uncertainty estimates and the NAQC verdicts side by side.
"""

import numpy as np

from naqc import BipartiteState, generate_mubs, isotropic, naqc_witness, random_separable, rho1

mubs = generate_mubs(2)
states = {
    "rho1(0.87)": rho1(0.87),
    "rho1(0.95)": rho1(0.95),
    "isotropic(0.9)": isotropic(2, 0.9),
    "I/4": BipartiteState(np.eye(4) / 4, (2, 2)),
    "separable K=4": random_separable(2, 2, 4, seed=7)[1],
}
print(f"{'state':>15} {'E_T':>7} {'E_M':>7} {'E_F':>7} {'C~l1':>7}  EUR   NAQC")
for name, s in states.items():
    w = naqc_witness(s, mubs, "l1")
    print(f"{name:>15} {w.e_t:7.4f} {w.e_m:7.4f} {w.e_f:7.4f} {w.naqc_value:7.4f}"
          f"  {str(w.verdict_t):5} {w.naqc_verdict}")

# rho1(0.87) sits in the window where the l1 criterion certifies entanglement
# but the uncertainty relation does not.
