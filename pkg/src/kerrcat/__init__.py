"""Single-mode bosonic simulator for anharmonic (Kerr-type) cat-state dynamics.

Coherent states evolve under the diagonal interaction W n^k; at rational
multiples of pi/W the state is an exact finite superposition of coherent
states, which this package decomposes analytically, probes through quadrature
densities and Husimi grids, and feeds into generalized temporal-correlation
(Leggett-Garg) tests with bounded outcome assignments.
"""

from .fock import (
    FockState,
    TailToleranceError,
    TruncationPolicy,
    choose_truncation,
    coherent_amplitudes,
    fidelity,
    inner_product,
    make_coherent,
)
from .dynamics import (
    HamiltonianSpec,
    RationalPhaseTime,
    evolve,
    phase_sequence,
    rotate_frame,
)
from .decomposition import (
    BranchSplit,
    CoherentSuperposition,
    coherent_overlap,
    decompose,
    minimal_phase_period,
    reconstruct,
    split_branches,
)
from .phase_space import (
    DensityCurve,
    PhaseGrid,
    QuadratureSpec,
    WindowClippingError,
    p_x_curve,
    probability_density,
    q_function,
    sign_probabilities,
    wavefunction_at,
)
from .leggett_garg import (
    HiddenVariableTriple,
    LgProtocol,
    LgReport,
    OutcomeAssignment,
    PRESETS,
    classical_max_bruteforce,
    correlator_reprepare,
    correlator_with_preparation,
    cosine_oracle,
    kerr_protocol,
    lg_value,
    mixture_lg_value,
    outcome_expectation,
    quartic_protocol,
)

__version__ = "0.1.0"

__all__ = [
    "BranchSplit",
    "CoherentSuperposition",
    "DensityCurve",
    "FockState",
    "HamiltonianSpec",
    "HiddenVariableTriple",
    "LgProtocol",
    "LgReport",
    "OutcomeAssignment",
    "PRESETS",
    "PhaseGrid",
    "QuadratureSpec",
    "RationalPhaseTime",
    "TailToleranceError",
    "TruncationPolicy",
    "WindowClippingError",
    "choose_truncation",
    "classical_max_bruteforce",
    "coherent_amplitudes",
    "coherent_overlap",
    "correlator_reprepare",
    "correlator_with_preparation",
    "cosine_oracle",
    "decompose",
    "evolve",
    "fidelity",
    "inner_product",
    "kerr_protocol",
    "lg_value",
    "make_coherent",
    "minimal_phase_period",
    "mixture_lg_value",
    "outcome_expectation",
    "p_x_curve",
    "phase_sequence",
    "probability_density",
    "q_function",
    "quartic_protocol",
    "reconstruct",
    "rotate_frame",
    "sign_probabilities",
    "split_branches",
    "wavefunction_at",
]
