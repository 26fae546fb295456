"""Binary reflected Gray code and the ladder angle transform.

A uniformly controlled rotation with block angles ``alpha`` lowers to a
CNOT ladder whose rotation angles ``theta`` satisfy ``theta = M alpha``
with ``M[i, j] = 2**-k * (-1)**(popcount(j & gray(i)))``. The sign matrix
``S = 2**k * M`` is orthogonal up to scale (``S @ S.T = 2**k * I``), so the
inverse transform is simply ``2**k * M.T``.
"""

from __future__ import annotations

import numpy as np


def gray(m: int) -> int:
    """Binary reflected Gray code of a nonnegative integer."""
    if m < 0:
        raise ValueError(f"gray code undefined for negative {m}")
    return m ^ (m >> 1)


def _check_power_of_two(length: int) -> int:
    """Return k with length == 2**k, or raise."""
    if length < 1 or length & (length - 1):
        raise ValueError(f"angle vector length {length} is not a power of two")
    return length.bit_length() - 1


def sign_matrix(k: int) -> np.ndarray:
    """Integer matrix S with S[i, j] = (-1)**(popcount(j & gray(i)))."""
    codes = gray_permutation(k)
    columns = np.arange(1 << k, dtype=np.intp)
    parity = np.bitwise_count(codes[:, None] & columns[None, :]) & 1
    return (1 - 2 * parity.astype(np.int64))


def alpha_to_theta_dense(alpha: np.ndarray) -> np.ndarray:
    """Reference implementation of theta = M alpha via the dense matrix."""
    alpha = np.asarray(alpha, dtype=np.float64)
    k = _check_power_of_two(alpha.size)
    return sign_matrix(k).astype(np.float64) @ alpha / (1 << k)


def _fwht(values: np.ndarray) -> np.ndarray:
    """In-place unnormalized Walsh-Hadamard transform, natural ordering."""
    h = 1
    size = values.size
    while h < size:
        v = values.reshape(-1, 2, h)
        top = v[:, 0, :] + v[:, 1, :]
        bottom = v[:, 0, :] - v[:, 1, :]
        v[:, 0, :] = top
        v[:, 1, :] = bottom
        h *= 2
    return values


def gray_permutation(k: int) -> np.ndarray:
    """Index array g with g[i] = gray(i), a bijection on [0, 2**k)."""
    indices = np.arange(1 << k, dtype=np.intp)
    return indices ^ (indices >> 1)


def alpha_to_theta(alpha: np.ndarray) -> np.ndarray:
    """Fast O(k 2**k) transform: Walsh-Hadamard butterfly + Gray reorder.

    Since M[i, j] = 2**-k * (-1)**(gray(i) . j), the i-th output is the
    Hadamard transform of alpha read out at position gray(i).
    """
    alpha = np.asarray(alpha, dtype=np.float64)
    k = _check_power_of_two(alpha.size)
    spectrum = _fwht(alpha.copy())
    return spectrum[gray_permutation(k)] / (1 << k)


def theta_to_alpha(theta: np.ndarray) -> np.ndarray:
    """Exact inverse of alpha_to_theta: scatter by Gray code, then transform."""
    theta = np.asarray(theta, dtype=np.float64)
    k = _check_power_of_two(theta.size)
    scattered = np.empty_like(theta)
    scattered[gray_permutation(k)] = theta
    return _fwht(scattered)
