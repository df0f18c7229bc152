"""Diagonal time evolution under the anharmonic interaction H_int = W n^k.

Evolution for a time t multiplies each number-basis amplitude by
exp(-i W t n^k).  Every time point of interest is a rational multiple of
pi/W, written t = (p/q) pi/W, so the phase of level n is

    phi_n = pi (p/q) n^k      (mod 2 pi)

The residues p n^k mod 2q are computed in exact integer arithmetic and only
then mapped onto the unit circle, so phases never drift for large n and the
phase sequence is exactly periodic with period dividing 2q.

The harmonic part w n of the full Hamiltonian is a frame rotation that the
observables in this package either ignore or absorb; it is recorded on
HamiltonianSpec but not applied by evolve.  rotate_frame applies such a
rotation explicitly when one is wanted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .fock import FockState


@dataclass(frozen=True)
class HamiltonianSpec:
    """Nonlinearity order k (>= 2), nonlinear rate, and recorded frame frequency.

    Only the sign of omega_nl affects evolution at rational phase times; the
    magnitude sets the physical time scale t = (p/q) pi / |omega_nl|.  For
    Kerr experiments quoting a rate W_K via W_K n(n-1)/... conventions, the
    correspondence is omega_nl = -W_K / 2.
    """

    k: int
    omega_nl: float = 1.0
    frame_freq: float = 0.0

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if self.omega_nl == 0:
            raise ValueError("omega_nl must be nonzero")

    @property
    def omega_sign(self) -> int:
        return 1 if self.omega_nl > 0 else -1

    def to_json(self) -> str:
        return json.dumps(
            {
                "k": self.k,
                "omega_sign": self.omega_sign,
                "omega_magnitude": abs(self.omega_nl),
                "frame_freq": self.frame_freq,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "HamiltonianSpec":
        doc = json.loads(text)
        return cls(
            k=doc["k"],
            omega_nl=doc["omega_sign"] * doc["omega_magnitude"],
            frame_freq=doc["frame_freq"],
        )


@dataclass(frozen=True)
class RationalPhaseTime:
    """Time t = (p/q) pi / W as an exact rational, q >= 1, gcd(|p|, q) = 1."""

    p: int
    q: int = 1

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"q must be >= 1, got {self.q}")
        if gcd(abs(self.p), self.q) != 1 and self.p != 0:
            raise ValueError(f"{self.p}/{self.q} is not in lowest terms")
        if self.p == 0 and self.q != 1:
            raise ValueError("zero time must be written 0/1")

    @classmethod
    def from_fraction(cls, frac: Fraction) -> "RationalPhaseTime":
        return cls(frac.numerator, frac.denominator)

    @classmethod
    def parse(cls, text: str) -> "RationalPhaseTime":
        """Parse "p/q" or "p" (q = 1)."""
        return cls.from_fraction(Fraction(text.strip()))

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __lt__(self, other: "RationalPhaseTime") -> bool:
        return self.fraction < other.fraction

    def __sub__(self, other: "RationalPhaseTime") -> "RationalPhaseTime":
        return RationalPhaseTime.from_fraction(self.fraction - other.fraction)


def _phase_residues(spec: HamiltonianSpec, time: RationalPhaseTime, length: int) -> np.ndarray:
    """Exact residues r_n = sign(W) p n^k mod 2q, so phi_n = pi r_n / q."""
    p_eff = spec.omega_sign * time.p
    mod = 2 * time.q
    return np.array([(p_eff * pow(n, spec.k, mod)) % mod for n in range(length)])


def _unit_roots(q: int) -> np.ndarray:
    """exp(-i pi r / q) for r = 0 .. 2q-1."""
    r = np.arange(2 * q)
    return np.exp(-1j * np.pi * r / q)


def phase_sequence(spec: HamiltonianSpec, time: RationalPhaseTime, length: int) -> np.ndarray:
    """Unit-magnitude factors g_n = exp(-i pi (p/q) n^k), n = 0 .. length-1.

    g_0 = 1 always, and g_{n + 2q} = g_n since (n + 2q)^k = n^k mod 2q.
    """
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    return _unit_roots(time.q)[_phase_residues(spec, time, length)]


def evolve(state: FockState, spec: HamiltonianSpec, time: RationalPhaseTime) -> FockState:
    """Apply the diagonal propagator: c_n -> c_n exp(-i pi (p/q) n^k)."""
    factors = phase_sequence(spec, time, state.amplitudes.size)
    return FockState(state.amplitudes * factors, normalized=state.normalized)


def rotate_frame(state: FockState, angle: float) -> FockState:
    """Harmonic-frame rotation c_n -> c_n exp(-i n angle) (phase-space rotation
    of every amplitude by -angle)."""
    n = np.arange(state.amplitudes.size)
    return FockState(state.amplitudes * np.exp(-1j * angle * n), normalized=state.normalized)
