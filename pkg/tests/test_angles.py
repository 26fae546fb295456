"""Angle schedules checked against slice-by-slice reference formulas."""

import math

import numpy as np
import pytest

from ucrsynth import angle_schedule, make_state, norm_tree, phases, random_state, y_angles, z_angles


def naive_z_level(omega, k):
    """Block-mean phase differences via explicit slicing."""
    half = 1 << (k - 1)
    out = []
    for j in range(len(omega) >> k):
        lo = omega[(2 * j) * half : (2 * j + 1) * half]
        hi = omega[(2 * j + 1) * half : (2 * j + 2) * half]
        out.append((sum(hi) - sum(lo)) / half)
    return out


def naive_y_level(amps, k):
    """2 asin(|second half| / |block|) via explicit slicing."""
    size = 1 << k
    out = []
    for j in range(len(amps) // size):
        block = amps[j * size : (j + 1) * size]
        whole = np.linalg.norm(block)
        upper = np.linalg.norm(block[size // 2 :])
        if whole == 0.0:
            out.append(0.0)
        else:
            out.append(2.0 * math.asin(min(1.0, upper / whole)))
    return out


def test_z_levels_frozen_example():
    x = make_state(2, np.array([1.0, 1.0j, 1.0, 1.0j]) / 2.0)
    levels = z_angles(x)
    assert levels[0] == pytest.approx([math.pi / 2, math.pi / 2])
    assert levels[1] == pytest.approx([0.0])


def test_y_levels_frozen_bell():
    bell = make_state(2, [1.0, 0.0, 0.0, 1.0], normalize=True)
    levels = y_angles(bell)
    assert levels[0] == pytest.approx([0.0, math.pi])
    assert levels[1] == pytest.approx([math.pi / 2])


def test_norm_tree_shapes_and_root():
    x = random_state(4, 0)
    tree = norm_tree(x)
    assert [level.size for level in tree.levels] == [8, 4, 2, 1]
    assert tree.root == pytest.approx(1.0, abs=1e-12)


def test_z_levels_match_naive(seed=11):
    for n in range(1, 7):
        x = random_state(n, seed + n)
        omega = phases(x)
        for k, level in enumerate(z_angles(x), start=1):
            assert level == pytest.approx(naive_z_level(list(omega), k), abs=1e-12)


def test_y_levels_match_naive(seed=12):
    for n in range(1, 7):
        x = random_state(n, seed + n)
        for k, level in enumerate(y_angles(x), start=1):
            assert level == pytest.approx(naive_y_level(x.amplitudes, k), abs=1e-12)


def test_zero_blocks_give_zero_angles():
    x = make_state(3, [0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0])
    for level in y_angles(x):
        assert np.all(np.isfinite(level))
    # the empty lower half contributes only zero rotations
    assert y_angles(x)[0] == pytest.approx([0.0, 0.0, 0.0, 0.0])
    assert y_angles(x)[2] == pytest.approx([math.pi])


def test_y_angles_range():
    for seed in range(5):
        x = random_state(5, 40 + seed)
        for level in y_angles(x):
            assert np.all(level >= 0.0)
            assert np.all(level <= math.pi)


def test_schedule_bundles_both():
    x = random_state(3, 5)
    schedule = angle_schedule(x)
    assert schedule.n == 3
    assert [v.size for v in schedule.z_levels] == [4, 2, 1]
    assert [v.size for v in schedule.y_levels] == [4, 2, 1]
    for a, b in zip(schedule.z_levels, z_angles(x)):
        assert np.array_equal(a, b)
