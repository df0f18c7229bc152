"""Coherent-superposition decomposition, reconstruction, and branch splitting."""

import numpy as np
import pytest

from kerrcat import (
    CoherentSuperposition,
    HamiltonianSpec,
    RationalPhaseTime,
    TailToleranceError,
    TruncationPolicy,
    choose_truncation,
    coherent_overlap,
    decompose,
    evolve,
    fidelity,
    make_coherent,
    minimal_phase_period,
    phase_sequence,
    reconstruct,
    split_branches,
)

ALPHA = 3.0
POLICY = choose_truncation(ALPHA)
KERR = HamiltonianSpec(k=2)
QUARTIC = HamiltonianSpec(k=4)


def term_map(sup, atol=1e-9):
    """Amplitude -> coefficient lookup keyed by rounded component position."""
    return {
        (round(a.real / atol) * atol, round(a.imag / atol) * atol): c
        for c, a in sup.terms
    }


def closest_coeff(sup, amp):
    coeffs = sup.coefficients()
    amps = sup.amplitudes()
    return coeffs[np.argmin(np.abs(amps - amp))]


def test_no_evolution_single_term():
    sup = decompose(ALPHA, KERR, RationalPhaseTime(0))
    assert len(sup) == 1
    coeff, amp = sup.terms[0]
    assert abs(coeff - 1.0) < 1e-15
    assert abs(amp - ALPHA) < 1e-15


def test_quarter_time_quartic_two_components():
    sup = decompose(ALPHA, QUARTIC, RationalPhaseTime(1, 4))
    assert len(sup) == 2
    c_plus = closest_coeff(sup, ALPHA)
    c_minus = closest_coeff(sup, -ALPHA)
    assert abs(c_plus - (1 + np.exp(-1j * np.pi / 4)) / 2) < 1e-12
    assert abs(c_minus - (1 - np.exp(-1j * np.pi / 4)) / 2) < 1e-12


def test_three_quarter_time_quartic_two_components():
    # weights swap relative to the quarter time; the coefficient phases are
    # the conjugate pair (1 -+ e^{+i pi/4})/2
    sup = decompose(ALPHA, QUARTIC, RationalPhaseTime(3, 4))
    assert len(sup) == 2
    c_plus = closest_coeff(sup, ALPHA)
    c_minus = closest_coeff(sup, -ALPHA)
    assert abs(c_plus - (1 - np.exp(1j * np.pi / 4)) / 2) < 1e-12
    assert abs(c_minus - (1 + np.exp(1j * np.pi / 4)) / 2) < 1e-12


@pytest.mark.parametrize("k", [2, 4, 6])
def test_half_time_two_components(k):
    sup = decompose(ALPHA, HamiltonianSpec(k=k), RationalPhaseTime(1, 2))
    assert len(sup) == 2
    c_plus = closest_coeff(sup, ALPHA)
    c_minus = closest_coeff(sup, -ALPHA)
    assert abs(c_plus - np.exp(-1j * np.pi / 4) / np.sqrt(2)) < 1e-12
    assert abs(c_minus - np.exp(1j * np.pi / 4) / np.sqrt(2)) < 1e-12


def test_third_time_kerr_three_components():
    sup = decompose(ALPHA, KERR, RationalPhaseTime(1, 3))
    assert len(sup) == 3
    c_neg = closest_coeff(sup, -ALPHA)
    c_up = closest_coeff(sup, ALPHA * np.exp(1j * np.pi / 3))
    c_down = closest_coeff(sup, ALPHA * np.exp(-1j * np.pi / 3))
    assert abs(c_neg - 1j / np.sqrt(3)) < 1e-12
    assert abs(c_up - np.exp(-1j * np.pi / 6) / np.sqrt(3)) < 1e-12
    assert abs(c_down - np.exp(-1j * np.pi / 6) / np.sqrt(3)) < 1e-12


def test_minimal_period_examples():
    assert minimal_phase_period(KERR, RationalPhaseTime(0)) == 1
    assert minimal_phase_period(KERR, RationalPhaseTime(1, 3)) == 6
    assert minimal_phase_period(KERR, RationalPhaseTime(2, 3)) == 3
    assert minimal_phase_period(QUARTIC, RationalPhaseTime(1, 4)) == 2
    assert minimal_phase_period(KERR, RationalPhaseTime(1, 4)) == 4


def test_reconstructed_norm_is_unity():
    for spec, time in (
        (KERR, RationalPhaseTime(1, 3)),
        (KERR, RationalPhaseTime(1, 4)),
        (QUARTIC, RationalPhaseTime(3, 4)),
    ):
        sup = decompose(ALPHA, spec, time)
        assert abs(sup.reconstructed_norm_squared() - 1.0) < 1e-9


def test_dft_consistency_reproduces_phase_sequence():
    # sum_j c_j (amp_j / alpha0)^n must equal the phase factor g_n
    for spec, time in ((KERR, RationalPhaseTime(1, 3)), (QUARTIC, RationalPhaseTime(1, 4))):
        sup = decompose(ALPHA, spec, time)
        g = phase_sequence(spec, time, 2 * time.q)
        units = sup.amplitudes() / ALPHA
        for n, expected in enumerate(g):
            got = np.sum(sup.coefficients() * units**n)
            assert abs(got - expected) < 1e-12


def test_reconstruct_single_term_matches_make_coherent():
    sup = CoherentSuperposition(((1.0, 2.0 + 0.5j),))
    policy = choose_truncation(2.0 + 0.5j)
    state = reconstruct(sup, policy)
    assert np.allclose(
        state.amplitudes, make_coherent(2.0 + 0.5j, policy).amplitudes, atol=1e-15
    )
    assert state.normalized


def test_reconstruct_tail_violation():
    sup = CoherentSuperposition(((1.0, 4.0),))
    with pytest.raises(TailToleranceError):
        reconstruct(sup, TruncationPolicy(10))


@pytest.mark.parametrize(
    "k,p,q",
    [
        (2, 1, 6), (2, 1, 4), (2, 1, 3), (2, 1, 2), (2, 2, 3), (2, 3, 4), (2, 1, 1), (2, 2, 1),
        (4, 1, 6), (4, 1, 4), (4, 1, 2), (4, 3, 4), (4, 1, 1), (4, 2, 1),
        (3, 1, 2),
    ],
)
def test_round_trip_exactness(k, p, q):
    spec = HamiltonianSpec(k=k)
    time = RationalPhaseTime(p, q)
    direct = evolve(make_coherent(ALPHA, POLICY), spec, time)
    rebuilt = reconstruct(decompose(ALPHA, spec, time), POLICY)
    assert fidelity(rebuilt, direct) > 1 - 1e-10


def test_round_trip_against_eq14_constants():
    # explicit printed three-component form, reconstructed by hand
    sup = CoherentSuperposition(
        (
            (1j / np.sqrt(3), -ALPHA),
            (np.exp(-1j * np.pi / 6) / np.sqrt(3), ALPHA * np.exp(1j * np.pi / 3)),
            (np.exp(-1j * np.pi / 6) / np.sqrt(3), ALPHA * np.exp(-1j * np.pi / 3)),
        )
    )
    direct = evolve(make_coherent(ALPHA, POLICY), KERR, RationalPhaseTime(1, 3))
    assert fidelity(reconstruct(sup, POLICY), direct) > 1 - 1e-10


def test_three_quarter_time_hand_built_superposition():
    # hand-built (1 -+ e^{+i pi/4})/2 two-component form; note the conjugate
    # phase relative to the quarter-time weights
    sup = CoherentSuperposition(
        (
            ((1 - np.exp(1j * np.pi / 4)) / 2, ALPHA),
            ((1 + np.exp(1j * np.pi / 4)) / 2, -ALPHA),
        )
    )
    direct = evolve(make_coherent(ALPHA, POLICY), QUARTIC, RationalPhaseTime(3, 4))
    assert fidelity(reconstruct(sup, POLICY), direct) > 1 - 1e-10


# ---------------------------------------------------------------------------
# branch splitting
# ---------------------------------------------------------------------------

def test_split_kerr_third_time_branch_probabilities():
    sup = decompose(ALPHA, KERR, RationalPhaseTime(1, 3))
    split = split_branches(sup, 0.0, POLICY)
    assert abs(split.prob_neg - 1 / 3) < 2e-3
    assert abs(split.prob_pos - 2 / 3) < 2e-3
    assert abs(split.prob_neg + split.prob_pos - 1.0) < 1e-9
    assert len(split.branch_neg) == 1
    assert len(split.branch_pos) == 2
    for branch in (split.branch_neg, split.branch_pos):
        assert abs(branch.reconstructed_norm_squared() - 1.0) < 1e-9


def test_split_quartic_quarter_time_probability():
    sup = decompose(ALPHA, QUARTIC, RationalPhaseTime(1, 4))
    split = split_branches(sup, 0.0, POLICY)
    assert abs(split.prob_pos - (2 + np.sqrt(2)) / 4) < 2e-3


def test_split_single_sided():
    sup = decompose(ALPHA, KERR, RationalPhaseTime(0))
    split = split_branches(sup, 0.0, POLICY)
    assert len(split.branch_neg) == 0
    assert split.prob_neg == 0.0
    assert split.prob_pos == 1.0
    assert abs(split.branch_pos.reconstructed_norm_squared() - 1.0) < 1e-12


def test_split_rejects_component_on_partition_line():
    sup = CoherentSuperposition(((1.0, 3.0j),))
    with pytest.raises(ValueError):
        split_branches(sup, 0.0, POLICY)
    with pytest.raises(ValueError):
        split_branches(CoherentSuperposition(((1.0, 0.0),)), 0.0, POLICY)


def test_split_partition_angle_rotates_line():
    # with the line rotated by pi/2, +-i alpha components become separable
    sup = CoherentSuperposition(
        (
            (np.sqrt(0.5), 3.0j),
            (np.sqrt(0.5), -3.0j),
        )
    )
    split = split_branches(sup, np.pi / 2, choose_truncation(3.0))
    assert len(split.branch_neg) == 1
    assert len(split.branch_pos) == 1
    assert abs(split.prob_neg - 0.5) < 1e-9


def test_branch_normalization_constants_match_transcribed_forms():
    # the renormalized two-component branch coefficient magnitude must equal
    # N2 = [2 (1 + exp(-3 a^2/2) cos(sqrt(3) a^2 / 2))]^{-1/2}, and the full
    # three-component norm 3 (1 + 2 eps) must reproduce unit total norm
    for alpha in (2.0, 3.0):
        policy = choose_truncation(alpha)
        sup = decompose(alpha, KERR, RationalPhaseTime(1, 3))
        split = split_branches(sup, 0.0, policy)
        eps = np.exp(-1.5 * alpha**2) * np.cos(np.sqrt(3) * alpha**2 / 2)
        n2 = 1.0 / np.sqrt(2.0 * (1.0 + eps))
        for coeff in split.branch_pos.coefficients():
            assert abs(abs(coeff) - n2) < 1e-9
        # neg branch weight 1/3, pos branch weight (2/3)(1 + eps)
        expected_prob_neg = (1 / 3) / (1 / 3 + (2 / 3) * (1 + eps))
        assert abs(split.prob_neg - expected_prob_neg) < 1e-12
        assert abs(split.prob_neg - 1 / 3) < np.exp(-1.5 * alpha**2)


def test_branch_completeness():
    sup = decompose(ALPHA, KERR, RationalPhaseTime(1, 3))
    split = split_branches(sup, 0.0, POLICY)
    total = split.prob_neg + split.prob_pos
    rebuilt_terms = tuple(
        (c * np.sqrt(split.prob_neg * total), a) for c, a in split.branch_neg.terms
    ) + tuple(
        (c * np.sqrt(split.prob_pos * total), a) for c, a in split.branch_pos.terms
    )
    rebuilt = reconstruct(CoherentSuperposition(rebuilt_terms), POLICY)
    original = reconstruct(sup, POLICY)
    overlap = np.vdot(rebuilt.amplitudes, original.amplitudes)
    cos_sq = abs(overlap) ** 2 / (rebuilt.norm_squared() * original.norm_squared())
    assert cos_sq > 1 - 1e-12


def test_coherent_overlap_closed_form():
    assert abs(coherent_overlap(1.0, 2.0) - np.exp(-0.5)) < 1e-15
    a, b = 1.0 + 2.0j, -0.5 + 0.3j
    expected = np.exp(-abs(a) ** 2 / 2 - abs(b) ** 2 / 2 + np.conj(a) * b)
    assert abs(coherent_overlap(a, b) - expected) < 1e-15


def test_pruning_drops_rounding_zeros():
    # the kerr third-time DFT runs over period 6 but only three coefficients
    # are nonzero; the three exact zeros must not survive pruning
    time = RationalPhaseTime(1, 3)
    assert minimal_phase_period(KERR, time) == 6
    sup = decompose(ALPHA, KERR, time)
    assert len(sup) == 3
    assert all(abs(c) >= sup.prune_threshold for c, _ in sup.terms)


def test_kerr_quarter_time_four_components():
    sup = decompose(ALPHA, KERR, RationalPhaseTime(1, 4))
    assert len(sup) == 4
    assert np.allclose(np.abs(sup.coefficients()), 0.5, atol=1e-12)


def test_superposition_json_round_trip():
    sup = decompose(ALPHA, KERR, RationalPhaseTime(1, 3))
    again = CoherentSuperposition.from_json(sup.to_json())
    assert np.allclose(again.coefficients(), sup.coefficients(), atol=0)
    assert np.allclose(again.amplitudes(), sup.amplitudes(), atol=0)
