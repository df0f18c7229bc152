"""Quadrature densities and Husimi distributions of number-basis states.

The measured quadrature is x_theta = (e^{i theta} a + e^{-i theta} a+)/sqrt(2)
(a, a+ the ladder operators); with this scaling a coherent state of real
amplitude a has mean sqrt(2) a and variance 1/2 at theta = 0.  Position
wavefunctions are built from the real oscillator eigenfunctions u_n(x)
generated by the stable three-term recurrence

    u_0 = pi^{-1/4} exp(-x^2/2),  u_1 = sqrt(2) x u_0,
    u_{n+1} = sqrt(2/(n+1)) x u_n - sqrt(n/(n+1)) u_{n-1},

good to n of order 1000, far beyond any cutoff used here.  The Husimi
function is Q(a) = |<a|psi>|^2 / pi.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .fock import FockState


class WindowClippingError(ArithmeticError):
    """Sampling window too small: visible probability mass falls outside it."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Phase angle of the measured quadrature, in [0, 2 pi)."""

    theta: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.theta < 2 * np.pi):
            raise ValueError(f"theta must lie in [0, 2 pi), got {self.theta}")


@dataclass(frozen=True)
class DensityCurve:
    """P(x) sampled on a uniform grid, with its window and Simpson integral."""

    xs: np.ndarray
    densities: np.ndarray
    window: tuple
    integral: float

    def samples(self):
        return list(zip(self.xs.tolist(), self.densities.tolist()))

    def to_csv(self) -> str:
        lines = ["x,density"]
        lines += [f"{x:.17g},{d:.17g}" for x, d in zip(self.xs, self.densities)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PhaseGrid:
    """Q values on a rectangular phase-space grid.

    values[i, j] = Q(re_i + 1j im_j); the real axis varies along axis 0.
    """

    re_range: tuple
    im_range: tuple
    resolution: int
    values: np.ndarray

    def axes(self):
        re = np.linspace(self.re_range[0], self.re_range[1], self.resolution)
        im = np.linspace(self.im_range[0], self.im_range[1], self.resolution)
        return re, im

    def cell_area(self) -> float:
        re, im = self.axes()
        return float((re[1] - re[0]) * (im[1] - im[0]))

    def integral(self) -> float:
        """Riemann cell sum; the integrand is smooth so this is near-exact."""
        return float(self.values.sum() * self.cell_area())

    def to_csv(self) -> str:
        re, im = self.axes()
        lines = ["re,im,q"]
        for i in range(self.resolution):
            for j in range(self.resolution):
                lines.append(f"{re[i]:.17g},{im[j]:.17g},{self.values[i, j]:.17g}")
        return "\n".join(lines) + "\n"

    def sidecar_json(self) -> str:
        return json.dumps(
            {
                "re_range": list(self.re_range),
                "im_range": list(self.im_range),
                "resolution": self.resolution,
            }
        )


def wavefunction_at(state: FockState, x, quad: QuadratureSpec = QuadratureSpec()):
    """Position wavefunction of the rotated state: sum_n c_n e^{-i n theta} u_n(x).

    x may be a scalar or an ndarray; the return value matches.
    """
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)
    if not np.all(np.isfinite(xs)):
        raise ValueError("x must be finite")

    coeffs = state.amplitudes
    if quad.theta != 0.0:
        n = np.arange(coeffs.size)
        coeffs = coeffs * np.exp(-1j * quad.theta * n)

    u_prev = np.pi ** -0.25 * np.exp(-xs * xs / 2)
    acc = coeffs[0] * u_prev
    if coeffs.size > 1:
        u_curr = np.sqrt(2.0) * xs * u_prev
        acc = acc + coeffs[1] * u_curr
        for n in range(1, coeffs.size - 1):
            u_next = np.sqrt(2.0 / (n + 1)) * xs * u_curr - np.sqrt(n / (n + 1)) * u_prev
            acc = acc + coeffs[n + 1] * u_next
            u_prev, u_curr = u_curr, u_next
    return complex(acc[0]) if scalar else acc


def probability_density(state: FockState, x, quad: QuadratureSpec = QuadratureSpec()):
    """P(x) = |<x|psi>|^2 for the rotated quadrature."""
    psi = wavefunction_at(state, x, quad)
    return np.abs(psi) ** 2 if isinstance(psi, np.ndarray) else abs(psi) ** 2


def _half_width(state: FockState) -> float:
    # components of every in-scope state sit within |x| <= sqrt(2 <n>);
    # 8 further units bound the Gaussian tails below 1e-10
    return np.sqrt(2.0 * state.mean_photon_number()) + 8.0


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(12)


def _integrate_density(state, quad, lo, hi, tol=1e-11):
    """Adaptive composite Gauss-Legendre: panels are doubled until two
    successive totals agree within tol.  All nodes of a pass are evaluated in
    one vectorized call, in a fixed order."""
    prev = None
    panels = max(8, int(np.ceil(hi - lo)))
    while panels <= 8192:
        edges = np.linspace(lo, hi, panels + 1)
        centers = 0.5 * (edges[:-1] + edges[1:])
        half = 0.5 * (edges[1] - edges[0])
        xs = (centers[:, None] + half * _GL_NODES[None, :]).ravel()
        weights = np.broadcast_to(half * _GL_WEIGHTS, (panels, _GL_WEIGHTS.size)).ravel()
        total = float(np.dot(weights, probability_density(state, xs, quad)))
        if prev is not None and abs(total - prev) < tol:
            return total
        prev = total
        panels *= 2
    raise ArithmeticError(
        f"sign-probability quadrature did not stabilize on [{lo}, {hi}]"
    )


def p_x_curve(
    state: FockState,
    quad: QuadratureSpec,
    window: tuple,
    resolution: int,
) -> DensityCurve:
    """Sample P(x) on a uniform grid over the window; integral by Simpson."""
    lo, hi = window
    if not hi > lo:
        raise ValueError(f"window must be nonempty, got {window}")
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    xs = np.linspace(lo, hi, resolution)
    densities = probability_density(state, xs, quad)
    total = float(integrate.simpson(densities, x=xs))
    if state.normalized and total < 1.0 - 1e-6:
        raise WindowClippingError(
            f"window {window} captures only {total:.9f} of the probability mass"
        )
    return DensityCurve(xs=xs, densities=densities, window=(lo, hi), integral=total)


def sign_probabilities(state: FockState, quad: QuadratureSpec = QuadratureSpec()):
    """(P(x >= 0), P(x < 0)) by adaptive quadrature split at the origin."""
    if not state.normalized:
        raise ValueError("sign_probabilities requires a normalized state")
    w = _half_width(state)
    p_minus = _integrate_density(state, quad, -w, 0.0)
    p_plus = _integrate_density(state, quad, 0.0, w)
    return p_plus, p_minus


def default_grid_ranges(state: FockState):
    """Extents +-(sqrt(<n>) + 5), enough to cover components and fringes."""
    reach = np.sqrt(state.mean_photon_number()) + 5.0
    return (-reach, reach), (-reach, reach)


def q_function(
    state: FockState,
    re_range: tuple | None = None,
    im_range: tuple | None = None,
    resolution: int = 161,
) -> PhaseGrid:
    """Husimi Q(a) = |<a|psi>|^2 / pi on the grid.

    <a|psi> = sum_n conj(A_n(a)) c_n with A_n the coherent coefficients of a,
    accumulated by the same stable recurrence used for state construction.
    """
    if not state.normalized:
        raise ValueError("q_function requires a normalized state")
    if re_range is None or im_range is None:
        auto_re, auto_im = default_grid_ranges(state)
        re_range = re_range or auto_re
        im_range = im_range or auto_im
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")

    re = np.linspace(re_range[0], re_range[1], resolution)
    im = np.linspace(im_range[0], im_range[1], resolution)
    alpha = re[:, None] + 1j * im[None, :]
    conj_alpha = np.conj(alpha)

    coeffs = state.amplitudes
    # A_n(a)* accumulated level by level: A_0* = e^{-|a|^2/2}, A_{n+1}* = A_n* a*/sqrt(n+1)
    probe = np.exp(-np.abs(alpha) ** 2 / 2).astype(np.complex128)
    overlap = coeffs[0] * probe
    for n in range(coeffs.size - 1):
        probe = probe * conj_alpha / np.sqrt(n + 1)
        overlap += coeffs[n + 1] * probe

    values = np.abs(overlap) ** 2 / np.pi
    return PhaseGrid(
        re_range=tuple(re_range),
        im_range=tuple(im_range),
        resolution=resolution,
        values=values,
    )
