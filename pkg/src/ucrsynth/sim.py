"""Dense statevector simulation: the verification oracle for everything else.

Public operations have value semantics (state in, new state out); the
in-place work happens on private copies via the kernel backend selected in
``_backend``. Qubit q of an n-qubit register lives at bit position n - q of
the amplitude index.
"""

from __future__ import annotations

import numpy as np

from ._backend import BACKEND, cnot as _cnot, rot as _rot
from .circuit import Circuit, Cnot, Gate, Rot, UcrGate, rot_matrix
from .errors import DimensionError
from .state import StateVector

__all__ = ["BACKEND", "apply_gate", "apply_circuit", "apply_ucr", "circuit_unitary"]


def _check_qubits(n: int, *qubits: int) -> None:
    for q in qubits:
        if not 1 <= q <= n:
            raise DimensionError(f"qubit {q} out of range for an {n}-qubit register")


def _apply_inplace(amps: np.ndarray, gates, n: int, shift: int = 0) -> None:
    """Run gates over amps; `shift` offsets every bit position (unitary trick)."""
    for g in gates:
        if isinstance(g, Cnot):
            _cnot(amps, n - g.control + shift, n - g.target + shift)
        else:
            m = rot_matrix(g.axis, g.angle)
            _rot(amps, n - g.target + shift, m[0, 0], m[0, 1], m[1, 0], m[1, 1])


def apply_gate(x: StateVector, g: Gate) -> StateVector:
    """One elementary gate applied to a state."""
    if isinstance(g, Cnot):
        _check_qubits(x.n, g.control, g.target)
    else:
        _check_qubits(x.n, g.target)
    amps = x.amplitudes.copy()
    _apply_inplace(amps, (g,), x.n)
    return StateVector(x.n, amps)


def apply_circuit(x: StateVector, c: Circuit) -> StateVector:
    """Left fold of apply_gate in time order (gates[0] first)."""
    if c.n != x.n:
        raise DimensionError(f"circuit is on {c.n} qubits, state on {x.n}")
    amps = x.amplitudes.copy()
    _apply_inplace(amps, c.gates, x.n)
    return StateVector(x.n, amps)


def apply_ucr(x: StateVector, g: UcrGate) -> StateVector:
    """Block-diagonal UCR action, straight from the definition.

    For every control pattern, apply the pattern's rotation to the target
    qubit of the matching amplitude pairs. No ladder lowering is involved,
    so this is an independent oracle for lower_ucr.
    """
    n = x.n
    _check_qubits(n, g.target, *g.controls)
    t_pos = n - g.target
    idx = np.arange(x.dim)
    i0 = idx[(idx >> t_pos) & 1 == 0]
    i1 = i0 | (1 << t_pos)
    pattern = np.zeros(i0.size, dtype=np.intp)
    for c in g.controls:
        pattern = (pattern << 1) | ((i0 >> (n - c)) & 1)
    half = 0.5 * g.angles[pattern]
    cos_h = np.cos(half)
    sin_h = np.sin(half)
    r00 = cos_h + 1j * (g.axis.az * sin_h)
    r01 = g.axis.ay * sin_h
    amps = x.amplitudes.copy()
    a0 = amps[i0]
    a1 = amps[i1]
    amps[i0] = r00 * a0 + r01 * a1
    amps[i1] = -r01 * a0 + np.conj(r00) * a1
    return StateVector(n, amps)


def circuit_unitary(c: Circuit, *, max_qubits: int = 10) -> np.ndarray:
    """Full 2**n x 2**n matrix of a circuit, columns = images of basis states.

    Internally the identity matrix is flattened to a single 2**(2n) array
    whose low n bits index the column; shifting every gate position by n
    left-multiplies all columns in one kernel pass.
    """
    if c.n > max_qubits:
        raise ValueError(f"n={c.n} exceeds the {max_qubits}-qubit unitary cap")
    dim = 1 << c.n
    u = np.eye(dim, dtype=np.complex128)
    _apply_inplace(u.reshape(-1), c.gates, c.n, shift=c.n)
    return u
