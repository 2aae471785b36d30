"""Convergence engine: stance scaling, agreement/opposition, effect weights."""

import numpy as np
import pytest

from trpn import (
    build_convergence_profile,
    build_influence_profile,
    convergence_divergence,
    mcdv_matrix,
    scale_positions,
)

from test_influence import DEMO_MID

DEMO_POSITIONS = [
    [3, 1, 0, 0, 0],
    [0, -1, -2, 0, 0],
    [0, 0, 2, 2, 3],
    [-2, -1, 0, 0, 0],
    [-3, 0, 0, 0, 0],
    [0, -1, 2, 0, 0],
    [0, 0, 0, 2, 0],
    [0, 1, -2, 0, -1],
    [0, 0, -1, 0, 0],
    [0, -2, 0, 0, 0],
]


@pytest.fixture(scope="module")
def demo_weights():
    return build_influence_profile(DEMO_MID).power_normalized


@pytest.fixture(scope="module")
def demo_profile(demo_weights):
    return build_convergence_profile(DEMO_POSITIONS, demo_weights)


class TestScalePositions:
    def test_demo_actor1_row(self, demo_weights):
        scaled = scale_positions(DEMO_POSITIONS, demo_weights)
        assert scaled[0, 0] == pytest.approx(0.3522, abs=2e-4)
        assert scaled[0, 1] == pytest.approx(0.1174, abs=2e-4)

    def test_zero_row_stays_zero(self):
        scaled = scale_positions([[0, 0], [1, -1]], [2.0, 0.5])
        assert scaled[0].tolist() == [0.0, 0.0]

    def test_unit_weights_are_identity(self):
        rows = [[1, -2], [3, 0]]
        scaled = scale_positions(rows, [1.0, 1.0])
        assert scaled.tolist() == [[1.0, -2.0], [3.0, 0.0]]

    def test_weight_count_must_match(self):
        with pytest.raises(ValueError, match="coefficients"):
            scale_positions([[1], [2]], [1.0])


class TestConvergenceDivergence:
    def test_demo_actors_1_and_2(self, demo_profile):
        # Only shared mode is the second one, with opposite signs.
        assert demo_profile.three_caa[0, 1] == 0.0
        assert demo_profile.three_daa[0, 1] == pytest.approx(0.390, abs=5e-3)

    def test_demo_actors_1_and_8(self, demo_profile):
        # Shared second mode with matching signs.
        assert demo_profile.three_caa[0, 7] == pytest.approx(1.061, abs=5e-3)
        assert demo_profile.three_daa[0, 7] == 0.0

    def test_all_zero_actor_shares_nothing(self):
        caa, daa = convergence_divergence(np.array([[0.0, 0.0], [1.5, -2.0]]))
        assert caa[0, 1] == daa[0, 1] == 0.0
        assert caa[1, 0] == daa[1, 0] == 0.0

    def test_symmetric_nonnegative(self, demo_profile):
        for matrix in (demo_profile.three_caa, demo_profile.three_daa):
            assert np.array_equal(matrix, matrix.T)
            assert np.all(matrix >= 0)

    def test_opposition_diagonal_is_zero(self, demo_profile):
        assert np.all(np.diag(demo_profile.three_daa) == 0)

    def test_single_zero_side_contributes_nothing(self):
        caa, daa = convergence_divergence(np.array([[1.0, 0.0], [2.0, 3.0]]))
        # Second mode has a zero on one side: neither agreement nor opposition.
        assert caa[0, 1] == pytest.approx(1.5)
        assert daa[0, 1] == 0.0


class TestMcdv:
    def test_identical_inputs_cancel(self):
        matrix = np.array([[1.0, 2.0], [2.0, 1.0]])
        assert mcdv_matrix(matrix, matrix).tolist() == [[0.0, 0.0], [0.0, 0.0]]

    def test_demo_actors_1_and_4(self, demo_profile):
        assert demo_profile.mcdv[0, 3] == pytest.approx(-0.118, abs=2e-3)

    def test_demo_spot_values(self, demo_profile):
        mcdv = demo_profile.mcdv
        assert mcdv[0, 1] == pytest.approx(-0.04, abs=0.02)
        assert mcdv[0, 7] == pytest.approx(0.12, abs=0.02)
        assert mcdv[0, 0] == pytest.approx(0.05, abs=0.02)
        assert mcdv[2, 7] == pytest.approx(-0.58, abs=0.02)
        assert mcdv[2, 2] == pytest.approx(0.67, abs=0.02)

    def test_exactly_symmetric(self, demo_profile):
        assert np.array_equal(demo_profile.mcdv, demo_profile.mcdv.T)

    def test_diagonal_is_scaled_stance_mass(self, demo_profile):
        expected = np.abs(demo_profile.three_mao).sum(axis=1) / 9.0
        assert np.allclose(np.diag(demo_profile.mcdv), expected, atol=1e-12)
        assert np.all(np.diag(demo_profile.mcdv) >= 0)

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError, match="shapes"):
            mcdv_matrix(np.zeros((2, 2)), np.zeros((3, 3)))
