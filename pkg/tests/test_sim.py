import math

import numpy as np
import pytest

from ucrsynth import (
    AXIS_Y,
    AXIS_Z,
    Axis,
    Circuit,
    Cnot,
    DimensionError,
    Rot,
    UcrGate,
    apply_circuit,
    apply_gate,
    apply_ucr,
    basis_state,
    circuit_unitary,
    dagger,
    lower_ucr,
    make_state,
    random_state,
)
from test_circuit import random_circuit


def test_rot_y_pi_on_zero_state():
    # R_y(pi) = i sigma_y = ((0, 1), (-1, 0)) under the +i sign convention
    out = apply_gate(basis_state(1), Rot(AXIS_Y, 1, math.pi))
    assert out.amplitudes == pytest.approx([0.0, -1.0])


def test_cnot_truth_table():
    out = apply_gate(make_state(2, [0, 0, 1, 0]), Cnot(1, 2))
    assert list(out.amplitudes) == [0, 0, 0, 1]
    # control 0 leaves the state alone
    idle = apply_gate(make_state(2, [0, 1, 0, 0]), Cnot(1, 2))
    assert list(idle.amplitudes) == [0, 1, 0, 0]


def test_rot_z_is_diagonal_phase():
    for index in (0, 1):
        out = apply_gate(basis_state(1, index), Rot(AXIS_Z, 1, 0.8))
        expect = np.exp(0.4j if index == 0 else -0.4j)
        assert out.amplitudes[index] == pytest.approx(expect)
        assert abs(out.amplitudes[1 - index]) == 0.0


def test_qubit_addressing_big_endian():
    # qubit 1 is the most significant amplitude-index bit
    x = apply_gate(basis_state(3), Rot(AXIS_Y, 1, math.pi))
    assert abs(x.amplitudes[4]) == pytest.approx(1.0)
    y = apply_gate(basis_state(3), Rot(AXIS_Y, 3, math.pi))
    assert abs(y.amplitudes[1]) == pytest.approx(1.0)


def test_gate_index_out_of_range():
    with pytest.raises(DimensionError):
        apply_gate(basis_state(2), Rot(AXIS_Y, 3, 0.1))
    with pytest.raises(DimensionError):
        apply_gate(basis_state(2), Cnot(1, 3))


def test_apply_circuit_value_semantics():
    x = random_state(3, 1)
    before = x.amplitudes.copy()
    c = random_circuit(3, 20, seed=3)
    out = apply_circuit(x, c)
    assert np.array_equal(x.amplitudes, before)
    assert out is not x
    # empty circuit acts as identity
    same = apply_circuit(x, Circuit(3))
    assert np.array_equal(same.amplitudes, before)


def test_apply_circuit_dimension_mismatch():
    with pytest.raises(DimensionError):
        apply_circuit(basis_state(2), Circuit(3))


def test_circuit_then_inverse_restores_state():
    for seed in range(4):
        c = random_circuit(4, 30, seed=seed)
        x = random_state(4, 100 + seed)
        back = apply_circuit(apply_circuit(x, c), dagger(c))
        assert np.abs(back.amplitudes - x.amplitudes).max() <= 1e-10


def test_norm_preserved_per_gate():
    x = random_state(5, 9)
    for gate in random_circuit(5, 50, seed=5).gates:
        x = apply_gate(x, gate)
        assert abs(np.linalg.norm(x.amplitudes) - 1.0) <= 1e-12


def test_apply_ucr_trivial_and_block_action():
    x = random_state(3, 2)
    g = UcrGate((1, 2), 3, AXIS_Y, [0.0] * 4)
    assert np.array_equal(apply_ucr(x, g).amplitudes, x.amplitudes)
    # k=1, alpha=(0, pi), axis y: the control-1 block sees R_y(pi)
    g2 = UcrGate((1,), 2, AXIS_Y, [0.0, math.pi])
    out = apply_ucr(make_state(2, [0, 0, 1, 0]), g2)
    assert out.amplitudes == pytest.approx([0, 0, 0, -1])


def test_apply_ucr_matches_lowered_circuit():
    rng = np.random.default_rng(8)
    for k in range(0, 7):
        n = k + 1
        x = random_state(n, 50 + k)
        axis = Axis(math.sin(1.0 + k), math.cos(1.0 + k))
        g = UcrGate(tuple(range(1, k + 1)), n, axis, rng.uniform(-math.pi, math.pi, 1 << k))
        direct = apply_ucr(x, g)
        for mirrored in (False, True):
            ladder = apply_circuit(x, lower_ucr(g, n, mirrored=mirrored))
            assert np.abs(direct.amplitudes - ladder.amplitudes).max() <= 1e-11


def test_apply_ucr_noncontiguous_controls():
    # controls need not be the leading qubits and their order carries weight
    rng = np.random.default_rng(13)
    x = random_state(4, 60)
    g = UcrGate((3, 1), 4, AXIS_Z, rng.uniform(-2, 2, 4))
    direct = apply_ucr(x, g)
    ladder = apply_circuit(x, lower_ucr(g, 4))
    assert np.abs(direct.amplitudes - ladder.amplitudes).max() <= 1e-11


def test_apply_ucr_range_check():
    with pytest.raises(DimensionError):
        apply_ucr(basis_state(2), UcrGate((1,), 3, AXIS_Y, [0.0, 0.0]))


def test_circuit_unitary_examples():
    assert np.array_equal(circuit_unitary(Circuit(2)), np.eye(4))
    swap_rows = circuit_unitary(Circuit(2, (Cnot(1, 2),)))
    perm = np.eye(4)[[0, 1, 3, 2]]
    assert np.array_equal(swap_rows, perm)


def test_circuit_unitary_matches_columnwise_simulation():
    # independent check of the flattened-identity construction
    c = random_circuit(3, 25, seed=7)
    u = circuit_unitary(c)
    for index in range(8):
        col = apply_circuit(basis_state(3, index), c)
        assert np.abs(u[:, index] - col.amplitudes).max() <= 1e-12


def test_circuit_unitary_is_unitary():
    for seed in range(4):
        n = 2 + seed % 3
        u = circuit_unitary(random_circuit(n, 30, seed=seed))
        assert np.abs(u @ u.conj().T - np.eye(1 << n)).max() <= 1e-10


def test_circuit_unitary_cap():
    with pytest.raises(ValueError):
        circuit_unitary(Circuit(11), max_qubits=10)


def test_backends_agree():
    pytest.importorskip("ucrsynth._kernels")
    from ucrsynth import _kernels, _kernels_py

    rng = np.random.default_rng(17)
    for n in range(1, 8):
        amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
        a = amps.copy()
        b = amps.copy()
        m = np.exp(1j * rng.uniform(0, 1, (2, 2)))
        for t in range(n):
            _kernels.rot(a, t, m[0, 0], m[0, 1], m[1, 0], m[1, 1])
            _kernels_py.rot(b, t, m[0, 0], m[0, 1], m[1, 0], m[1, 1])
        if n >= 2:
            _kernels.cnot(a, 0, n - 1)
            _kernels_py.cnot(b, 0, n - 1)
            _kernels.cnot(a, n - 1, 0)
            _kernels_py.cnot(b, n - 1, 0)
        # relative bound: the test matrices are not unitary, so amplitudes grow
        assert np.abs(a - b).max() <= 1e-14 * max(1.0, np.abs(a).max())
