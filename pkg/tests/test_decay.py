"""Rotary-embedding decay envelope and window comparisons."""

from __future__ import annotations

import cmath
import math

import pytest

from sentree import (
    InvalidDimension,
    InvalidWindow,
    check_decay,
    decay_curve,
    window_mean,
)


class TestCurveValues:
    def test_distance_zero_is_exactly_one(self):
        for dim in (2, 8, 64, 512):
            assert decay_curve(dim, 4).values[0] == 1.0

    def test_values_in_unit_interval(self):
        curve = decay_curve(64, 200)
        assert all(0.0 < v <= 1.0 for v in curve.values)

    def test_length_and_max_dist(self):
        curve = decay_curve(8, 17)
        assert len(curve.values) == 18
        assert curve.max_dist == 17

    def test_dim_two_is_constant_one(self):
        # One frequency of magnitude 1: c(m) = |exp(i m)| = 1 for every m,
        # up to float rounding of cos/sin.
        curve = decay_curve(2, 300)
        assert all(abs(v - 1.0) <= 1e-12 for v in curve.values)

    def test_matches_direct_phasor_sum(self):
        dim, base, m = 8, 100.0, 5
        half = dim // 2
        total = sum(
            cmath.exp(1j * m * base ** (-2.0 * j / dim)) for j in range(half)
        )
        expected = abs(total) / half
        got = decay_curve(dim, m, base=base).values[m]
        assert got == pytest.approx(expected, abs=1e-12)

    def test_deterministic(self):
        assert decay_curve(128, 64).values == decay_curve(128, 64).values

    def test_default_base(self):
        assert decay_curve(32, 8).base == 10000.0


class TestArgumentChecking:
    @pytest.mark.parametrize("dim", [3, 1, 0, -2, 7, True, 2.0, "4"])
    def test_bad_dimension(self, dim):
        with pytest.raises(InvalidDimension):
            decay_curve(dim, 4)

    @pytest.mark.parametrize("max_dist", [0, -1])
    def test_bad_max_dist(self, max_dist):
        with pytest.raises(ValueError):
            decay_curve(8, max_dist)

    @pytest.mark.parametrize("base", [0.0, -1.0])
    def test_bad_base(self, base):
        with pytest.raises(ValueError):
            decay_curve(8, 4, base=base)


class TestWindows:
    def test_window_mean(self):
        curve = decay_curve(8, 10)
        expected = sum(curve.values[2:6]) / 4
        assert window_mean(curve, (2, 5)) == pytest.approx(expected)

    def test_single_point_window(self):
        curve = decay_curve(8, 10)
        assert window_mean(curve, (3, 3)) == pytest.approx(curve.values[3])

    def test_near_beats_far_at_paper_scale(self):
        curve = decay_curve(512, 128)
        assert check_decay(curve, (1, 32), (97, 128))
        assert window_mean(curve, (1, 32)) > window_mean(curve, (97, 128))

    def test_near_beats_far_small_model(self):
        curve = decay_curve(64, 128)
        assert check_decay(curve, (1, 16), (97, 128))

    @pytest.mark.parametrize(
        "window",
        [(0, 4), (-1, 2), (5, 2), (1, 1000), (1.5, 3), (1, 2, 3), "ab", (2,)],
    )
    def test_bad_window(self, window):
        curve = decay_curve(8, 10)
        with pytest.raises(InvalidWindow):
            window_mean(curve, window)

    def test_windows_must_be_ordered_and_disjoint(self):
        curve = decay_curve(8, 32)
        with pytest.raises(InvalidWindow):
            check_decay(curve, (8, 16), (16, 32))
        with pytest.raises(InvalidWindow):
            check_decay(curve, (16, 32), (1, 8))

    def test_integer_valued_floats_accepted(self):
        curve = decay_curve(8, 10)
        assert window_mean(curve, (1.0, 4.0)) == window_mean(curve, (1, 4))
