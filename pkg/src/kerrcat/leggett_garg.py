"""Temporal-correlation (Leggett-Garg) tests on the evolving cat states.

Three measurement slots t1 = 0 < t2 < t3 carry bounded outcome values: the
sign of the quadrature x picks value_plus (x >= 0) or value_minus (x < 0).
The t1 slot is fixed at (+1, -1) and the initial state |a> with a real and
positive makes S1 = +1 deterministic, so the two preparation-anchored
correlators reduce to single-time expectations:

    <S1 S2> = <S2>(t2),   <S1 S3> = <S3>(t3).

<S2 S3> follows the measure-and-re-prepare rule: split the t2 superposition
into its half-plane branches, re-prepare each branch as decomposed, evolve it
by t3 - t2 (stationarity), and weight the branch conditionals by the branch
probabilities:

    <S2 S3> = p_neg S2(neg) <S3>_neg + p_pos S2(pos) <S3>_pos.

The functional C = <S1 S2> + <S2 S3> - <S1 S3> obeys C <= 1 for every
bounded-hidden-variable assignment (classical_max_bruteforce verifies the
bound by enumeration), so C > 1 certifies a violation.  mixture_lg_value
evaluates the same functional for the classical mixture of the two branches,
which can never violate the bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .decomposition import decompose, reconstruct, split_branches
from .dynamics import HamiltonianSpec, RationalPhaseTime, evolve
from .fock import FockState, choose_truncation, make_coherent
from .phase_space import QuadratureSpec, sign_probabilities


@dataclass(frozen=True)
class OutcomeAssignment:
    """Measurement values for the two quadrature signs, both bounded by 1."""

    value_plus: float
    value_minus: float

    def __post_init__(self):
        if abs(self.value_plus) > 1 or abs(self.value_minus) > 1:
            raise ValueError(
                f"outcome values must satisfy |v| <= 1, got "
                f"({self.value_plus}, {self.value_minus})"
            )


@dataclass(frozen=True)
class HiddenVariableTriple:
    """Predetermined outcomes (l1, l2, l3) with |l1| = 1 and |l2|, |l3| <= 1."""

    l1: float
    l2: float
    l3: float

    def __post_init__(self):
        if abs(self.l1) != 1.0:
            raise ValueError(f"|l1| must equal 1, got {self.l1}")
        if abs(self.l2) > 1 or abs(self.l3) > 1:
            raise ValueError("|l2| and |l3| must be <= 1")

    def functional(self) -> float:
        return self.l1 * self.l2 + self.l2 * self.l3 - self.l1 * self.l3


@dataclass(frozen=True)
class LgProtocol:
    """Full three-time protocol: dynamics, outcome values, branch partition."""

    spec: HamiltonianSpec
    alpha0: complex
    times: tuple  # (t1, t2, t3) as RationalPhaseTime, t1 = 0
    assignments: tuple  # per-time OutcomeAssignment
    partition_angle: float = 0.0
    quad: QuadratureSpec = QuadratureSpec()

    def __post_init__(self):
        t1, t2, t3 = self.times
        if t1.fraction != 0:
            raise ValueError("t1 must be 0")
        if not (t1.fraction < t2.fraction < t3.fraction):
            raise ValueError("times must be strictly increasing")
        a1 = self.assignments[0]
        if a1.value_plus != 1.0 or a1.value_minus != -1.0:
            raise ValueError("the t1 assignment must be exactly (+1, -1)")

    def to_json_dict(self) -> dict:
        return {
            "k": self.spec.k,
            "omega_sign": self.spec.omega_sign,
            "alpha0_re": complex(self.alpha0).real,
            "alpha0_im": complex(self.alpha0).imag,
            "times": [str(t) for t in self.times],
            "assignments": [[a.value_plus, a.value_minus] for a in self.assignments],
            "partition_angle": self.partition_angle,
            "theta": self.quad.theta,
        }


@dataclass(frozen=True)
class LgReport:
    """The three correlators, branch data, and the functional value."""

    c12: float
    c23: float
    c13: float
    prob_neg: float
    prob_pos: float
    branch_conditionals: tuple  # (<S2 S3>_neg, <S2 S3>_pos)
    lg_value: float
    violated: bool
    protocol: LgProtocol | None = None

    def to_json(self) -> str:
        doc = {
            "c12": self.c12,
            "c23": self.c23,
            "c13": self.c13,
            "prob_neg": self.prob_neg,
            "prob_pos": self.prob_pos,
            "branch_conditional_neg": self.branch_conditionals[0],
            "branch_conditional_pos": self.branch_conditionals[1],
            "lg_value": self.lg_value,
            "violated": self.violated,
        }
        if self.protocol is not None:
            doc["protocol"] = self.protocol.to_json_dict()
        return json.dumps(doc, indent=2)

    def csv_row(self, preset: str, alpha: float) -> str:
        return (
            f"{preset},{alpha:.17g},{self.c12:.17g},{self.c23:.17g},"
            f"{self.c13:.17g},{self.lg_value:.17g},{str(self.violated).lower()}"
        )


CSV_HEADER = "preset,alpha,c12,c23,c13,lg_value,violated"


def outcome_expectation(
    state: FockState, assignment: OutcomeAssignment, quad: QuadratureSpec
) -> float:
    """value_plus P(x >= 0) + value_minus P(x < 0)."""
    p_plus, p_minus = sign_probabilities(state, quad)
    return assignment.value_plus * p_plus + assignment.value_minus * p_minus


def _require_real_positive(alpha0: complex) -> float:
    alpha0 = complex(alpha0)
    if alpha0.imag != 0.0 or alpha0.real <= 0.0:
        raise ValueError(
            f"alpha0 must be real and positive so that S1 = +1 is "
            f"deterministic, got {alpha0}"
        )
    return alpha0.real


def correlator_with_preparation(protocol: LgProtocol, which: str) -> float:
    """<S1 S_i> for i in {t2, t3}; S1 = +1 by preparation, so this is <S_i>."""
    alpha = _require_real_positive(protocol.alpha0)
    index = {"t2": 1, "t3": 2}[which]
    policy = choose_truncation(alpha)
    state = evolve(make_coherent(alpha, policy), protocol.spec, protocol.times[index])
    return outcome_expectation(state, protocol.assignments[index], protocol.quad)


def _branch_futures(protocol: LgProtocol):
    """Split the t2 state, evolve each branch by t3 - t2, and collect the
    branch probabilities, assigned S2 values, and <S3> of each branch future."""
    alpha = _require_real_positive(protocol.alpha0)
    t2, t3 = protocol.times[1], protocol.times[2]
    policy = choose_truncation(alpha)
    split = split_branches(
        decompose(alpha, protocol.spec, t2), protocol.partition_angle, policy
    )
    a2, a3 = protocol.assignments[1], protocol.assignments[2]
    delta = t3 - t2

    results = []
    for branch, prob, s2 in (
        (split.branch_neg, split.prob_neg, a2.value_minus),
        (split.branch_pos, split.prob_pos, a2.value_plus),
    ):
        if len(branch) == 0:
            results.append((prob, s2, 0.0))
            continue
        future = evolve(reconstruct(branch, policy), protocol.spec, delta)
        s3 = outcome_expectation(future, a3, protocol.quad)
        results.append((prob, s2, s3))
    return split, results


def _reprepare_terms(futures):
    conds = [s2 * s3 for _, s2, s3 in futures]
    c23 = sum(prob * cond for (prob, _, _), cond in zip(futures, conds))
    return c23, (conds[0], conds[1])


def correlator_reprepare(protocol: LgProtocol):
    """Measure-and-re-prepare <S2 S3>.

    Returns (c23, (cond_neg, cond_pos), (prob_neg, prob_pos)) where
    cond_b = S2(b) <S3>_b is the branch conditional.
    """
    split, futures = _branch_futures(protocol)
    c23, conds = _reprepare_terms(futures)
    return c23, conds, (split.prob_neg, split.prob_pos)


def _assemble(protocol: LgProtocol, split, futures, c13: float) -> LgReport:
    c12 = correlator_with_preparation(protocol, "t2")
    c23, conds = _reprepare_terms(futures)
    value = c12 + c23 - c13
    return LgReport(
        c12=c12,
        c23=c23,
        c13=c13,
        prob_neg=split.prob_neg,
        prob_pos=split.prob_pos,
        branch_conditionals=conds,
        lg_value=value,
        violated=value > 1.0,
        protocol=protocol,
    )


def lg_value(protocol: LgProtocol) -> LgReport:
    """Quantum evaluation: all three correlators from the evolving state."""
    split, futures = _branch_futures(protocol)
    return _assemble(protocol, split, futures,
                     correlator_with_preparation(protocol, "t3"))


def mixture_lg_value(protocol: LgProtocol) -> LgReport:
    """Evaluation for the classical mixture of the two t2 branches.

    c12 and c23 are unchanged (the mixture reproduces the t2 sign statistics
    and the conditional futures); c13 becomes the branch-probability average
    of the independently evolved branch expectations.
    """
    split, futures = _branch_futures(protocol)
    c13_mix = sum(prob * s3 for prob, _, s3 in futures)
    return _assemble(protocol, split, futures, c13_mix)


def classical_max_bruteforce(grid_step: float) -> float:
    """Max of l1 l2 + l2 l3 - l1 l3 over l1 = +-1 and a grid on [-1, 1]^2."""
    if not (0.0 < grid_step <= 0.1):
        raise ValueError(f"grid_step must lie in (0, 0.1], got {grid_step}")
    points = np.linspace(-1.0, 1.0, round(2.0 / grid_step) + 1)
    l2, l3 = np.meshgrid(points, points, indexing="ij")
    best = -np.inf
    for l1 in (-1.0, 1.0):
        best = max(best, float(np.max(l1 * l2 + l2 * l3 - l1 * l3)))
    return best


def cosine_oracle(t1: float, t2: float, t3: float) -> float:
    """Functional value for correlators cos 2(t_j - t_i) (two-state dynamics)."""
    if not (t1 <= t2 <= t3):
        raise ValueError("times must satisfy t1 <= t2 <= t3")
    return float(
        np.cos(2 * (t2 - t1)) + np.cos(2 * (t3 - t2)) - np.cos(2 * (t3 - t1))
    )


# ---------------------------------------------------------------------------
# protocol presets
# ---------------------------------------------------------------------------

def quartic_protocol(alpha: float = 3.0, k: int = 4) -> LgProtocol:
    """k > 2 even protocol: times (0, 1/4, 3/4) pi/W, all assignments (+1, -1)."""
    if k <= 2 or k % 2:
        raise ValueError(f"this preset needs even k > 2, got {k}")
    pm = OutcomeAssignment(1.0, -1.0)
    return LgProtocol(
        spec=HamiltonianSpec(k=k),
        alpha0=alpha,
        times=(
            RationalPhaseTime(0),
            RationalPhaseTime(1, 4),
            RationalPhaseTime(3, 4),
        ),
        assignments=(pm, pm, pm),
        partition_angle=0.0,
    )


def kerr_protocol(alpha: float = 3.0) -> LgProtocol:
    """k = 2 protocol: times (0, 1/3, 2/3) pi/W with one-sided assignments
    S2 = (+1, 0) and S3 = (0, -1)."""
    return LgProtocol(
        spec=HamiltonianSpec(k=2),
        alpha0=alpha,
        times=(
            RationalPhaseTime(0),
            RationalPhaseTime(1, 3),
            RationalPhaseTime(2, 3),
        ),
        assignments=(
            OutcomeAssignment(1.0, -1.0),
            OutcomeAssignment(1.0, 0.0),
            OutcomeAssignment(0.0, -1.0),
        ),
        partition_angle=0.0,
    )


PRESETS = {
    "k4-lg": quartic_protocol,
    "k2-lg": kerr_protocol,
}
