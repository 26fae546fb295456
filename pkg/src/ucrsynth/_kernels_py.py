"""Portable statevector kernels, signature-compatible with the compiled ones.

Both functions mutate a contiguous complex128 array of power-of-two length
in place. Qubits are addressed by bit position counted from the least
significant end of the amplitude index.
"""

from __future__ import annotations

import numpy as np


def rot(amps: np.ndarray, t_pos: int, r00, r01, r10, r11) -> None:
    """Apply a 2x2 matrix to the qubit at bit position t_pos, in place."""
    view = amps.reshape(-1, 2, 1 << t_pos)
    a0 = view[:, 0].copy()
    a1 = view[:, 1]
    view[:, 0] = r00 * a0 + r01 * a1
    view[:, 1] = r10 * a0 + r11 * a1


def cnot(amps: np.ndarray, c_pos: int, t_pos: int) -> None:
    """Swap amplitude pairs whose control bit is set, in place."""
    lo, hi = sorted((c_pos, t_pos))
    view = amps.reshape(-1, 2, 1 << (hi - 1 - lo), 2, 1 << lo)
    if c_pos == hi:
        block = view[:, 1]
        block[:, :, [0, 1]] = block[:, :, [1, 0]]
    else:
        block = view[:, :, :, 1]
        block[:, [0, 1]] = block[:, [1, 0]]
