"""Number-basis states of a single bosonic mode.

A state is stored as the complex amplitude vector (c_0 .. c_n_max) over the
truncated number basis.  Coherent states |a> have

    c_n = exp(-|a|^2 / 2) a^n / sqrt(n!)

computed with the multiplicative recurrence c_{n+1} = c_n * a / sqrt(n+1),
which stays finite where a direct factorial would overflow (n >~ 170).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from scipy import special

DEFAULT_TAIL_TOLERANCE = 1e-12

# |sum |c_n|^2 - 1| below this counts as normalized
NORM_ATOL = 1e-10


class TailToleranceError(ValueError):
    """Basis cutoff too small: probability mass above n_max exceeds tolerance."""


@dataclass(frozen=True)
class TruncationPolicy:
    """Basis cutoff n_max plus the admissible probability mass above it."""

    n_max: int
    tail_tolerance: float = DEFAULT_TAIL_TOLERANCE

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        if not self.tail_tolerance > 0:
            raise ValueError(f"tail_tolerance must be > 0, got {self.tail_tolerance}")

    def admits(self, alpha: complex) -> bool:
        """True if the coherent state |alpha> leaves less than tail_tolerance
        of its photon-number distribution above n_max."""
        return coherent_tail_mass(alpha, self.n_max) < self.tail_tolerance


def coherent_tail_mass(alpha: complex, n_max: int) -> float:
    """Probability mass of the Poisson number distribution of |alpha> above n_max.

    P(n > n_max) for n ~ Poisson(|alpha|^2), via the regularized lower
    incomplete gamma function.
    """
    lam = abs(alpha) ** 2
    if lam == 0.0:
        return 0.0
    return float(special.gammainc(n_max + 1, lam))


def choose_truncation(alpha: complex, tail_tolerance: float = DEFAULT_TAIL_TOLERANCE) -> TruncationPolicy:
    """Smallest cutoff whose Poisson tail for |alpha> is below tail_tolerance."""
    if not tail_tolerance > 0:
        raise ValueError(f"tail_tolerance must be > 0, got {tail_tolerance}")
    lam = abs(alpha) ** 2
    if lam == 0.0:
        return TruncationPolicy(0, tail_tolerance)
    # bracket from a generous upper bound, then bisect to the smallest n_max
    hi = int(np.ceil(lam + 20 * np.sqrt(lam) + 40))
    while coherent_tail_mass(alpha, hi) >= tail_tolerance:
        hi *= 2
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if coherent_tail_mass(alpha, mid) < tail_tolerance:
            hi = mid
        else:
            lo = mid + 1
    return TruncationPolicy(lo, tail_tolerance)


@dataclass(frozen=True)
class FockState:
    """Amplitudes c_0 .. c_n_max in the number basis."""

    amplitudes: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128)
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)
        if amps.ndim != 1 or amps.size == 0:
            raise ValueError("amplitudes must be a non-empty 1-D sequence")
        if self.normalized and abs(self.norm_squared() - 1.0) >= NORM_ATOL:
            raise ValueError(
                f"normalized flag set but sum |c_n|^2 = {self.norm_squared():.12g}"
            )

    @property
    def n_max(self) -> int:
        return self.amplitudes.size - 1

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def mean_photon_number(self) -> float:
        n = np.arange(self.amplitudes.size)
        return float(np.sum(n * np.abs(self.amplitudes) ** 2))

    def to_json(self) -> str:
        return json.dumps(
            {
                "n_max": self.n_max,
                "re": self.amplitudes.real.tolist(),
                "im": self.amplitudes.imag.tolist(),
                "normalized": self.normalized,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "FockState":
        doc = json.loads(text)
        amps = np.asarray(doc["re"], dtype=float) + 1j * np.asarray(doc["im"], dtype=float)
        if amps.size != doc["n_max"] + 1:
            raise ValueError("n_max inconsistent with amplitude length")
        return cls(amps, normalized=doc["normalized"])


def coherent_amplitudes(alpha: complex, n_max: int) -> np.ndarray:
    """Number-basis coefficients of |alpha> up to n_max (stable recurrence)."""
    amps = np.empty(n_max + 1, dtype=np.complex128)
    amps[0] = np.exp(-abs(alpha) ** 2 / 2)
    for n in range(n_max):
        amps[n + 1] = amps[n] * alpha / np.sqrt(n + 1)
    return amps


def make_coherent(alpha: complex, policy: TruncationPolicy) -> FockState:
    """Coherent state |alpha> truncated under the given policy.

    Raises TailToleranceError when n_max is too small for this alpha.
    """
    if not policy.admits(alpha):
        raise TailToleranceError(
            f"tail mass above n_max={policy.n_max} is "
            f"{coherent_tail_mass(alpha, policy.n_max):.3e} "
            f">= tolerance {policy.tail_tolerance:.3e} for alpha={alpha}"
        )
    return FockState(coherent_amplitudes(alpha, policy.n_max), normalized=True)


def inner_product(a: FockState, b: FockState) -> complex:
    """<a|b> = sum_n conj(a_n) b_n."""
    if a.amplitudes.size != b.amplitudes.size:
        raise ValueError(
            f"length mismatch: {a.amplitudes.size} vs {b.amplitudes.size}"
        )
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fidelity(a: FockState, b: FockState) -> float:
    """|<a|b>|^2 for normalized states."""
    if not (a.normalized and b.normalized):
        raise ValueError("fidelity requires normalized states")
    return abs(inner_product(a, b)) ** 2
