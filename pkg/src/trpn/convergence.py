"""Convergence engine: power-scaled stances and the pairwise effect weights.

Actor stances are first scaled row-wise by normalized power, then every
actor pair is scored on each failure mode: modes where both scaled stances
share a sign contribute half the sum of their magnitudes to the agreement
matrix, opposite signs contribute the same amount to the opposition matrix,
and a zero on either side contributes to neither. The net effect weight
between two actors is (agreement - opposition) / 9.
"""

from dataclasses import dataclass

import numpy as np

from .model import PositionMatrix

MCDV_DIVISOR = 9.0


def _positions_array(two_mao) -> np.ndarray:
    if isinstance(two_mao, PositionMatrix):
        two_mao = two_mao.rows
    arr = np.asarray(two_mao, dtype=float)
    if arr.ndim != 2:
        raise ValueError(f"position matrix must be 2-D, got shape {arr.shape}")
    return arr


def scale_positions(two_mao, power_normalized) -> np.ndarray:
    """Scale each actor's stance row by its normalized power coefficient."""
    positions = _positions_array(two_mao)
    weights = np.asarray(power_normalized, dtype=float)
    if len(weights) != positions.shape[0]:
        raise ValueError(
            f"{len(weights)} power coefficients for {positions.shape[0]} actors"
        )
    return positions * weights[:, None]


def convergence_divergence(three_mao: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split pairwise stance intensity into agreement and opposition parts.

    For actors a, b and each mode i with scaled stances u = three_mao[a, i],
    v = three_mao[b, i]: if u*v > 0 the pair agrees on i and (|u| + |v|) / 2
    is added to the agreement matrix; if u*v < 0 the same amount is added to
    the opposition matrix. Both outputs are symmetric with non-negative
    entries, and the opposition diagonal is zero (a row cannot oppose
    itself).
    """
    scaled = np.asarray(three_mao, dtype=float)
    magnitude = np.abs(scaled)
    sign_product = scaled[:, None, :] * scaled[None, :, :]
    pair_intensity = 0.5 * (magnitude[:, None, :] + magnitude[None, :, :])
    three_caa = np.where(sign_product > 0, pair_intensity, 0.0).sum(axis=2)
    three_daa = np.where(sign_product < 0, pair_intensity, 0.0).sum(axis=2)
    return three_caa, three_daa


def mcdv_matrix(three_caa: np.ndarray, three_daa: np.ndarray) -> np.ndarray:
    """Net pairwise effect weight: (agreement - opposition) / 9."""
    caa = np.asarray(three_caa, dtype=float)
    daa = np.asarray(three_daa, dtype=float)
    if caa.shape != daa.shape:
        raise ValueError(f"matrix shapes differ: {caa.shape} vs {daa.shape}")
    return (caa - daa) / MCDV_DIVISOR


@dataclass(frozen=True, eq=False)
class ConvergenceProfile:
    """Scaled stances plus the agreement/opposition/net-weight matrices."""

    three_mao: np.ndarray
    three_caa: np.ndarray
    three_daa: np.ndarray
    mcdv: np.ndarray


def build_convergence_profile(two_mao, power_normalized) -> ConvergenceProfile:
    three_mao = scale_positions(two_mao, power_normalized)
    three_caa, three_daa = convergence_divergence(three_mao)
    mcdv = mcdv_matrix(three_caa, three_daa)
    for arr in (three_mao, three_caa, three_daa, mcdv):
        arr.flags.writeable = False
    return ConvergenceProfile(
        three_mao=three_mao, three_caa=three_caa, three_daa=three_daa, mcdv=mcdv
    )


def oversized_weights(mcdv: np.ndarray) -> list[tuple[int, int]]:
    """Index pairs whose |weight| exceeds 1; the /9 normalizer does not clamp."""
    return [tuple(idx) for idx in np.argwhere(np.abs(mcdv) > 1.0)]
