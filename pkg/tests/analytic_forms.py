"""Closed-form reference densities and Husimi functions at the special times.

Everything here is derived by hand from two ingredients only: the Gaussian
position wavefunction of a coherent state (theta = 0 convention)

    psi_b(x) = pi^{-1/4} exp(-x^2/2 + sqrt(2) x b - b^2/2 - |b|^2/2),

and the coherent overlap <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b).  None
of it goes through the package's number-basis machinery, so these formulas
serve as an independent route for the analytic-agreement tests.

a0 denotes the real, positive initial amplitude throughout.
"""

import numpy as np

SQRT2 = np.sqrt(2.0)
W_PLUS = (2 + SQRT2) / 4   # |(1 + e^{-i pi/4})/2|^2
W_MINUS = (2 - SQRT2) / 4  # |(1 - e^{-i pi/4})/2|^2


# ---------------------------------------------------------------------------
# quadrature densities P(x) at theta = 0
# ---------------------------------------------------------------------------

def density_coherent(x, a0):
    """Initial state |a0> (and, with a0 -> -a0, the state at t = pi/W)."""
    return np.exp(-x**2 + 2 * SQRT2 * x * a0 - 2 * a0**2) / np.sqrt(np.pi)


def density_half_time(x, a0):
    """Two-component cat at t = pi/2W, any even k: the interference term of
    the equal-weight e^{-+i pi/4} pair cancels pointwise."""
    return np.exp(-x**2 - 2 * a0**2) * np.cosh(2 * SQRT2 * x * a0) / np.sqrt(np.pi)


def density_quarter_time_quartic(x, a0):
    """t = pi/4W for even k > 2: weights (2 +- sqrt 2)/4, no cross term."""
    return (np.exp(-x**2 - 2 * a0**2) / np.sqrt(np.pi)) * (
        W_PLUS * np.exp(2 * SQRT2 * x * a0) + W_MINUS * np.exp(-2 * SQRT2 * x * a0)
    )


def density_three_quarter_time_quartic(x, a0):
    """t = 3pi/4W for even k > 2: the quarter-time weights swap sides."""
    return (np.exp(-x**2 - 2 * a0**2) / np.sqrt(np.pi)) * (
        W_MINUS * np.exp(2 * SQRT2 * x * a0) + W_PLUS * np.exp(-2 * SQRT2 * x * a0)
    )


def density_third_time_kerr(x, a0):
    """Three-component cat at t = pi/3W for k = 2.

    Expanding |i psi_{-a0} + e^{-i pi/6}(psi_b + conj(psi_b))|^2 / 3 with
    b = e^{i pi/3} a0 gives a Gaussian at -sqrt(2) a0, a fringed lobe at
    +a0/sqrt(2), and a cross term.
    """
    g_sq = np.exp(-(x + SQRT2 * a0) ** 2) / np.sqrt(np.pi)
    r_sq = np.exp(-(x - a0 / SQRT2) ** 2) / np.sqrt(np.pi)
    rg = np.exp(-x**2 - SQRT2 * x * a0 / 2 - 5 * a0**2 / 4) / np.sqrt(np.pi)
    phi = np.sqrt(6) * x * a0 / 2 - np.sqrt(3) * a0**2 / 4
    return (g_sq + 2 * r_sq * (1 + np.cos(2 * phi)) - 2 * rg * np.cos(phi)) / 3.0


def branch_norm_constant(a0):
    """1/N^2 = 2 [1 + exp(-3 a0^2/2) cos(sqrt(3) a0^2/2)] for the re-prepared
    two-component branch and its evolved image."""
    eps = np.exp(-1.5 * a0**2) * np.cos(np.sqrt(3) * a0**2 / 2)
    return 1.0 / (2.0 * (1.0 + eps))


def density_branch_evolved(x, a0):
    """The re-prepared positive branch evolved by a further third-time (k = 2):
    one coherent lobe at +sqrt(2) a0 plus a fringed pair on the negative side."""
    n_sq = branch_norm_constant(a0)
    term_lobe = (4.0 / 3.0) * np.exp(2 * SQRT2 * x * a0 - 2 * a0**2)
    term_cross = (4.0 / 3.0) * np.exp(x * a0 / SQRT2 - 5 * a0**2 / 4) * np.cos(
        np.sqrt(6) * x * a0 / 2 + np.sqrt(3) * a0**2 / 4
    )
    term_fringe = (2.0 / 3.0) * np.exp(-SQRT2 * x * a0 - a0**2 / 2) * (
        1 + np.cos(np.sqrt(6) * x * a0 + np.sqrt(3) * a0**2 / 2)
    )
    return n_sq * np.exp(-x**2) * (term_lobe + term_cross + term_fringe) / np.sqrt(np.pi)


# ---------------------------------------------------------------------------
# Husimi functions Q(alpha) on complex grids, a0 real
# ---------------------------------------------------------------------------

def husimi_coherent(alpha, a0):
    """Q at t = 0 (and with a0 -> -a0 at t = pi/W)."""
    return np.exp(-np.abs(alpha) ** 2 - a0**2 + 2 * a0 * alpha.real) / np.pi


def husimi_half_time(alpha, a0):
    return (np.exp(-np.abs(alpha) ** 2 - a0**2) / np.pi) * (
        np.cosh(2 * a0 * alpha.real) - np.sin(2 * a0 * alpha.imag)
    )


def husimi_quarter_time_quartic(alpha, a0):
    return (np.exp(-np.abs(alpha) ** 2 - a0**2) / np.pi) * (
        W_PLUS * np.exp(2 * a0 * alpha.real)
        + W_MINUS * np.exp(-2 * a0 * alpha.real)
        - (SQRT2 / 2) * np.sin(2 * a0 * alpha.imag)
    )


def husimi_three_quarter_time_quartic(alpha, a0):
    return (np.exp(-np.abs(alpha) ** 2 - a0**2) / np.pi) * (
        W_MINUS * np.exp(2 * a0 * alpha.real)
        + W_PLUS * np.exp(-2 * a0 * alpha.real)
        - (SQRT2 / 2) * np.sin(2 * a0 * alpha.imag)
    )


def husimi_third_time_kerr(alpha, a0):
    """Three-component form: Q = |sum_j c_j exp(conj(alpha) b_j)|^2 e^{-|a|^2-a0^2}/pi."""
    coeffs = np.array(
        [1j, np.exp(-1j * np.pi / 6), np.exp(-1j * np.pi / 6)]
    ) / np.sqrt(3)
    comps = a0 * np.array([-1.0, np.exp(1j * np.pi / 3), np.exp(-1j * np.pi / 3)])
    acc = np.zeros_like(alpha, dtype=complex)
    for c, b in zip(coeffs, comps):
        acc = acc + c * np.exp(np.conj(alpha) * b)
    return np.abs(acc) ** 2 * np.exp(-np.abs(alpha) ** 2 - a0**2) / np.pi


# brute-force Poisson tail, summed upward in log space (truncation oracle)
def poisson_tail(lam, n):
    from math import exp, lgamma, log

    if lam == 0:
        return 0.0
    total, m = 0.0, n + 1
    term = exp(m * log(lam) - lam - lgamma(m + 1))
    while term > 1e-320:
        total += term
        m += 1
        term *= lam / m
    return total
