"""Exact coherent-superposition form of states evolved to rational phase times.

At t = (p/q) pi / W the phase factors g_n = exp(-i pi (p/q) n^k) are periodic
in n with minimal period L (a divisor of 2q).  Writing g_n as a discrete
Fourier sum over that period,

    g_n = sum_{m=0}^{L-1} f_m exp(-i 2 pi m n / L),
    f_m = (1/L) sum_{n=0}^{L-1} g_n exp(+i 2 pi m n / L),

turns the evolved coherent state into the finite superposition

    |a, t> = sum_m f_m |a exp(-i 2 pi m / L)>

exactly: the identity above holds term by term in the number basis.  All DFT
term phases are rational multiples of pi and are reduced as exact fractions
before being mapped to the unit circle, so coefficients that are exact zeros
come out at rounding level and are safely pruned.
"""

from __future__ import annotations

import cmath
import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .dynamics import HamiltonianSpec, RationalPhaseTime, _phase_residues
from .fock import (
    FockState,
    TailToleranceError,
    TruncationPolicy,
    coherent_amplitudes,
    coherent_tail_mass,
)

DEFAULT_PRUNE_THRESHOLD = 1e-12

# components closer than this to the partition line are ambiguous
PARTITION_ATOL = 1e-9


def coherent_overlap(a: complex, b: complex) -> complex:
    """<a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b) for coherent amplitudes."""
    return cmath.exp(-abs(a) ** 2 / 2 - abs(b) ** 2 / 2 + a.conjugate() * b)


@dataclass(frozen=True)
class CoherentSuperposition:
    """Finite superposition sum_j coeff_j |amp_j> of coherent states."""

    terms: tuple
    prune_threshold: float = DEFAULT_PRUNE_THRESHOLD

    def __post_init__(self):
        object.__setattr__(
            self,
            "terms",
            tuple((complex(c), complex(a)) for c, a in self.terms),
        )

    def __len__(self) -> int:
        return len(self.terms)

    def coefficients(self) -> np.ndarray:
        return np.array([c for c, _ in self.terms], dtype=np.complex128)

    def amplitudes(self) -> np.ndarray:
        return np.array([a for _, a in self.terms], dtype=np.complex128)

    def reconstructed_norm_squared(self) -> float:
        """sum_{j,l} conj(coeff_j) coeff_l <amp_j|amp_l> via the closed-form overlap."""
        total = 0.0
        for cj, aj in self.terms:
            for cl, al in self.terms:
                total += (cj.conjugate() * cl * coherent_overlap(aj, al)).real
        return total

    def pruned(self) -> "CoherentSuperposition":
        kept = tuple(t for t in self.terms if abs(t[0]) >= self.prune_threshold)
        return CoherentSuperposition(kept, self.prune_threshold)

    def to_json(self) -> str:
        return json.dumps(
            {
                "terms": [
                    {
                        "coeff_re": c.real,
                        "coeff_im": c.imag,
                        "amp_re": a.real,
                        "amp_im": a.imag,
                    }
                    for c, a in self.terms
                ]
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "CoherentSuperposition":
        doc = json.loads(text)
        terms = tuple(
            (
                complex(t["coeff_re"], t["coeff_im"]),
                complex(t["amp_re"], t["amp_im"]),
            )
            for t in doc["terms"]
        )
        return cls(terms)


@dataclass(frozen=True)
class BranchSplit:
    """Half-plane split of a superposition: renormalized branches and weights."""

    branch_neg: CoherentSuperposition
    branch_pos: CoherentSuperposition
    prob_neg: float
    prob_pos: float


def minimal_phase_period(spec: HamiltonianSpec, time: RationalPhaseTime) -> int:
    """Smallest L (dividing 2q) with g_{n+L} = g_n, by direct residue scan."""
    mod = 2 * time.q
    residues = _phase_residues(spec, time, mod)
    for L in range(1, mod + 1):
        if mod % L != 0:
            continue
        if all(residues[n] == residues[n % L] for n in range(mod)):
            return L
    return mod


def decompose(
    alpha0: complex,
    spec: HamiltonianSpec,
    time: RationalPhaseTime,
    prune_threshold: float = DEFAULT_PRUNE_THRESHOLD,
) -> CoherentSuperposition:
    """Evolved state |alpha0, t> as an exact finite coherent superposition.

    Term phases of the DFT are accumulated as exact rationals (in units of pi)
    so that vanishing coefficients are exact zeros up to rounding.
    """
    L = minimal_phase_period(spec, time)
    residues = _phase_residues(spec, time, L)
    terms = []
    for m in range(L):
        f_m = 0j
        for n in range(L):
            # exp(i pi (2 m n / L - r_n / q)), phase reduced mod 2 exactly
            phase = (Fraction(2 * m * n, L) - Fraction(int(residues[n]), time.q)) % 2
            f_m += cmath.exp(1j * cmath.pi * float(phase))
        f_m /= L
        amp = alpha0 * cmath.exp(-2j * cmath.pi * m / L)
        terms.append((f_m, amp))
    return CoherentSuperposition(tuple(terms), prune_threshold).pruned()


def _tail_error(amp: complex, policy: TruncationPolicy) -> TailToleranceError:
    return TailToleranceError(
        f"component amplitude {amp} has tail mass "
        f"{coherent_tail_mass(amp, policy.n_max):.3e} above n_max={policy.n_max}"
    )


def reconstruct(sup: CoherentSuperposition, policy: TruncationPolicy) -> FockState:
    """Sum the number-basis expansions of every component under one cutoff."""
    for _, amp in sup.terms:
        if not policy.admits(amp):
            raise _tail_error(amp, policy)
    total = np.zeros(policy.n_max + 1, dtype=np.complex128)
    for coeff, amp in sup.terms:
        total += coeff * coherent_amplitudes(amp, policy.n_max)
    norm_sq = float(np.sum(np.abs(total) ** 2))
    return FockState(total, normalized=abs(norm_sq - 1.0) < 1e-10)


def split_branches(
    sup: CoherentSuperposition, partition_angle: float, policy: TruncationPolicy
) -> BranchSplit:
    """Partition components by the sign of Re(amp e^{-i angle}).

    Components left of the line go to branch_neg, the rest to branch_pos.
    Branch weights are squared norms of the projected (unrenormalized)
    branches, cross terms included, normalized over the two branches.
    """
    rotation = cmath.exp(-1j * partition_angle)
    neg_terms, pos_terms = [], []
    for coeff, amp in sup.terms:
        signed = (amp * rotation).real
        if abs(signed) < PARTITION_ATOL:
            raise ValueError(
                f"component at {amp} lies within {PARTITION_ATOL} of the "
                f"partition line at angle {partition_angle}"
            )
        if not policy.admits(amp):
            raise _tail_error(amp, policy)
        (neg_terms if signed < 0 else pos_terms).append((coeff, amp))

    def weight(terms):
        return CoherentSuperposition(tuple(terms)).reconstructed_norm_squared() if terms else 0.0

    w_neg, w_pos = weight(neg_terms), weight(pos_terms)
    total = w_neg + w_pos
    if total <= 0:
        raise ValueError("cannot split an empty superposition")

    def renormalized(terms, w):
        if not terms:
            return CoherentSuperposition((), sup.prune_threshold)
        scale = 1.0 / np.sqrt(w)
        return CoherentSuperposition(
            tuple((c * scale, a) for c, a in terms), sup.prune_threshold
        )

    return BranchSplit(
        branch_neg=renormalized(neg_terms, w_neg),
        branch_pos=renormalized(pos_terms, w_pos),
        prob_neg=w_neg / total,
        prob_pos=w_pos / total,
    )
