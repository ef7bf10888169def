"""Nonlocal advantage of quantum coherence for bipartite qudit states.

Mutually unbiased bases for prime dimension, l1 and relative-entropy
coherence with their complementarity bounds, the averaged and
permutation-optimized NAQC functionals, and entanglement witnesses built on
them and on entropic uncertainty relations.
"""

__version__ = "0.1.0"

from .advantage import (
    ConditionalEnsemble,
    CostMatrix,
    Framework,
    NAQCReport,
    conditional_ensemble,
    cost_matrix,
    naqc_averaged,
    naqc_fixed_permutation,
    naqc_optimized,
    two_qubit_closed_form,
)
from .coherence import Measure, bound_value, coherence, mub_coherence_sum, purity_in_basis
from .errors import (
    DimensionMismatch,
    InvalidState,
    NoConvergence,
    NotADistribution,
    NotAPermutation,
    NotHermitian,
    UnsupportedDimension,
    WrongDimension,
)
from .localunitary import UnitaryPair, local_unitary_maximize
from .mub import MUBSet, generate_mubs, is_prime, validate_mubs
from .qmath import (
    BipartiteState,
    binary_entropy,
    hermitian_eigenvalues,
    kron,
    partial_trace,
    purity,
    shannon_entropy,
    von_neumann_entropy,
)
from .scan import sweep, threshold
from .states import (
    bloch_decompose,
    isotropic,
    max_entangled,
    random_bipartite,
    random_density,
    random_separable,
    rho1,
)
from .witness import WitnessReport, closed_form, eur_witness, naqc_witness
