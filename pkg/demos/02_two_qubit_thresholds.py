"""
Where the two-qubit witnesses switch on
=======================================

Locate the mixing parameters at which the NAQC criteria and the entropic
uncertainty estimates start certifying entanglement, for the Bell-diagonal
family rho1(x) = x |Phi+><Phi+| + (1 - x) |Psi-><Psi-| and the two-qubit
isotropic state.
"""

import numpy as np

from naqc import threshold
from naqc.witness import closed_form

for family in ("rho1", "isotropic"):
    print(f"-- {family}")
    for m in ("l1", "re"):
        c = threshold(family, 2, m, tol=1e-8).crossings
        print(f"   NAQC {m:>2} (optimized):  ", np.round(c, 6))
    for e in ("T", "M", "F"):
        c = threshold(family, 2, estimate=e, tol=1e-8).crossings
        print(f"   uncertainty E_{e}:       ", np.round(c, 6))

# On rho1 the three regions are nested: the l1 criterion fires on the widest
# range, the uncertainty relation in between, the relative-entropy criterion
# on the narrowest. The closed forms reproduce the same picture.
print()
print(f"{'x':>5} {'1+|4x-2|':>9} {'3-2H(x)':>9} {'2H(x)':>8}")
for x in (0.05, 0.1, 0.12, 0.5, 0.87, 0.9, 0.95):
    print(f"{x:5.2f} {closed_form('rho1', x, 'l1_tilde'):9.4f} "
          f"{closed_form('rho1', x, 're_tilde'):9.4f} {closed_form('rho1', x, 'E'):8.4f}")
print("bounds: l1 sqrt(6) = 2.4495, re = 2.2320, uncertainty -log2 c = 1")
