"""Top-level compiler: disentangling cascades and state-to-state mapping.

A state is driven to the first basis vector by one z/y pair of uniformly
controlled rotations per qubit, last qubit first. Chaining one cascade with
the inverse of another maps any state onto any other, up to a reported
global phase. Gate counts land exactly on the closed-form bounds when no
rotation angle degenerates to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .angles import AngleSchedule, angle_schedule
from .circuit import (
    AXIS_Y,
    AXIS_Z,
    Circuit,
    Gate,
    UcrGate,
    dagger,
    gate_counts,
    lower_ucr,
    simplify,
)
from .errors import DimensionError
from .state import StateVector, phases, wrap_angle

__all__ = [
    "BoundReport",
    "SynthesisResult",
    "bounds",
    "disentangle",
    "prepare",
    "prepare_from_basis",
]


@dataclass(frozen=True, slots=True)
class BoundReport:
    """Closed-form gate-count bounds for n qubits.

    qr_comparison_cnot is the 12.6 * 2**n CNOT cost of generic-unitary
    synthesis via QR decomposition, reported for reference only.
    """

    n: int
    upper_cnot: int
    upper_rot: int
    lower_rot: int
    lower_cnot: int
    qr_comparison_cnot: float


def bounds(n: int) -> BoundReport:
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    return BoundReport(
        n=n,
        upper_cnot=(1 << (n + 2)) - 4 * n - 4,
        upper_rot=(1 << (n + 2)) - 5,
        lower_rot=(1 << (n + 1)) - 2,
        lower_cnot=math.ceil(((1 << (n + 1)) - 3 * n - 2) / 4),
        qr_comparison_cnot=12.6 * (1 << n),
    )


@dataclass(frozen=True)
class SynthesisResult:
    """A compiled circuit plus the phase and count bookkeeping around it.

    residual_phase is the global phase of the simulated output relative to
    the target state; it is reported, never corrected with extra gates.
    """

    circuit: Circuit
    residual_phase: float
    counts: dict[str, int]
    bounds: BoundReport


def _mean_phase(x: StateVector) -> float:
    """Mean per-amplitude phase, zeros counted as phase 0."""
    return float(np.sum(phases(x))) / x.dim


def _cascade(n: int, schedule: AngleSchedule) -> list[UcrGate]:
    """UCR pair per qubit, time order j = n down to 1, z before y."""
    out = []
    for j in range(n, 0, -1):
        controls = tuple(range(1, j))
        z_level = schedule.z_levels[n - j]
        y_level = schedule.y_levels[n - j]
        out.append(UcrGate(controls, j, AXIS_Z, z_level))
        out.append(UcrGate(controls, j, AXIS_Y, y_level))
    return out


def _lower_cascade(n: int, cascade: list[UcrGate], mirrored: bool) -> Circuit:
    """Lower each UCR to its ladder.

    With mirrored=False the y member of each pair uses the horizontally
    mirrored ladder, so its opening CNOT faces the z member's closing twin
    and cancels in simplify; this is the only pairing that cancels, and it
    realizes the headline CNOT count. mirrored=True flips the variant of
    every ladder, giving the equally exact mirrored realization at the
    cost of those 2(n - 1) cancellations per half.
    """
    gates: list[Gate] = []
    for g in cascade:
        flip = (g.axis == AXIS_Y) != mirrored
        gates.extend(lower_ucr(g, n, mirrored=flip).gates)
    return Circuit(n, tuple(gates))


def _half(x: StateVector, mirrored: bool = False) -> Circuit:
    """Unsimplified cascade circuit sending x to the first basis vector."""
    return _lower_cascade(x.n, _cascade(x.n, angle_schedule(x)), mirrored)


def _result(circuit: Circuit, residual: float) -> SynthesisResult:
    return SynthesisResult(
        circuit=circuit,
        residual_phase=wrap_angle(residual),
        counts=gate_counts(circuit),
        bounds=bounds(circuit.n),
    )


def disentangle(x: StateVector) -> SynthesisResult:
    """Circuit C with C|x> = e^(i phi) |e_1>, phi = mean amplitude phase.

    2**(n+1) - 2n - 2 CNOTs and 2**(n+1) - 2 rotations on generic states.
    """
    half = _half(x)
    return _result(simplify(half), _mean_phase(x))


def prepare(a: StateVector, b: StateVector, *, mirrored: bool = False) -> SynthesisResult:
    """Circuit C with C|a> = e^(i phi) |b>, phi = residual_phase.

    Composes the cascade of a with the inverse cascade of b; the junction
    merges the two uncontrolled y-rotations on qubit 1, landing the counts
    on 2**(n+2) - 4n - 4 CNOTs and 2**(n+2) - 5 rotations.

    mirrored=True lowers every uniformly controlled rotation with the
    horizontally mirrored ladder instead. The result is equally exact and
    keeps the rotation count, but the boundary CNOT pairs inside each
    cascade stage no longer face each other, so 4(n - 1) CNOTs that would
    otherwise cancel survive.
    """
    if a.n != b.n:
        raise DimensionError(f"qubit counts differ: {a.n} vs {b.n}")
    forward = _half(a, mirrored)
    backward = dagger(_half(b, mirrored))
    joined = Circuit(a.n, forward.gates + backward.gates)
    return _result(simplify(joined), _mean_phase(a) - _mean_phase(b))


def prepare_from_basis(i: int, b: StateVector) -> SynthesisResult:
    """Circuit C with C|e_(i+1)> = e^(i phi) |b> at half the prepare cost.

    For i = 0 this is just the inverse of disentangle(b). For i != 0 the
    amplitudes are relabeled by XOR with i (sending index i to 0), the
    cascade is built for the relabeled vector, and the bit-flip conjugation
    is absorbed into the angle schedule: flipping a control qubit permutes
    each level by XOR on the control pattern, flipping the target qubit
    negates the level (X R X = R(-angle) for any y-z axis).
    """
    n = b.n
    if not 0 <= i < b.dim:
        raise ValueError(f"basis index {i} out of range for n={n}")
    if i == 0:
        half = _half(b)
    else:
        relabeled = StateVector(n, b.amplitudes[np.arange(b.dim) ^ i].copy())
        schedule = angle_schedule(relabeled)
        for j in range(1, n + 1):
            cmask = i >> (n - j + 1)
            sign = -1.0 if (i >> (n - j)) & 1 else 1.0
            perm = np.arange(1 << (j - 1)) ^ cmask
            schedule.z_levels[n - j] = sign * schedule.z_levels[n - j][perm]
            schedule.y_levels[n - j] = sign * schedule.y_levels[n - j][perm]
        half = _lower_cascade(n, _cascade(n, schedule), False)
    return _result(simplify(dagger(half)), -_mean_phase(b))
