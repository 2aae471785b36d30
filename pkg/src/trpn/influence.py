"""Influence engine: direct+mediated influence and per-actor power weights.

The direct influence matrix is composed once with itself through a min
operator: the influence actor a exerts on b via one intermediary c is the
weaker of the two hops, and all such one-intermediary paths are added onto
the direct entry. This is a single composition pass, not a transitive
closure. From the composed matrix each actor gets a net influence (row mass),
net dependence (column mass), and a power coefficient combining its share of
total influence with its influence/dependence balance.
"""

from dataclasses import dataclass

import numpy as np

from .model import DirectInfluenceMatrix


class DegenerateNetworkError(Exception):
    """The influence network carries no usable power information."""


def _as_square_array(mid) -> np.ndarray:
    if isinstance(mid, DirectInfluenceMatrix):
        mid = mid.rows
    arr = np.asarray(mid, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"influence matrix must be square, got shape {arr.shape}")
    return arr


def compute_midi(mid) -> np.ndarray:
    """Compose direct influence with all one-intermediary paths.

    midi[a, b] = mid[a, b] + sum over c of min(mid[a, c], mid[c, b]).
    The diagonal picks up the reciprocated-influence mass
    sum_c min(mid[a, c], mid[c, a]) even though the input diagonal is zero.
    """
    arr = _as_square_array(mid)
    mediated = np.minimum(arr[:, :, None], arr[None, :, :]).sum(axis=1)
    return arr + mediated


def net_influence(midi: np.ndarray, a: int) -> int:
    """Row mass of actor a excluding its own diagonal entry."""
    return int(midi[a].sum() - midi[a, a])


def net_dependence(midi: np.ndarray, a: int) -> int:
    """Column mass of actor a excluding its own diagonal entry."""
    return int(midi[:, a].sum() - midi[a, a])


def power_coefficient(midi: np.ndarray, a: int) -> float:
    """Raw power weight of actor a.

    Share of total net influence (diagonal-corrected) times the actor's
    influence/dependence balance. An isolated actor (no influence either
    way) gets 0 and simply contributes no interdependent risk; a network
    with no net influence at all has no power information and raises.
    """
    total = int(midi.sum() - np.trace(midi))
    if total == 0:
        raise DegenerateNetworkError("network has no influence between actors")
    infl = net_influence(midi, a)
    dep = net_dependence(midi, a)
    if infl + dep == 0:
        return 0.0
    return (infl - int(midi[a, a])) / total * (infl / (infl + dep))


def normalized_power(power_raw) -> np.ndarray:
    """Rescale raw power so the coefficients sum to the actor count."""
    raw = np.asarray(power_raw, dtype=float)
    total = raw.sum()
    if total == 0:
        raise DegenerateNetworkError("all-zero power vector")
    return len(raw) * raw / total


@dataclass(frozen=True, eq=False)
class InfluenceProfile:
    """Composed influence matrix plus the per-actor power statistics."""

    midi: np.ndarray
    net_influence: np.ndarray
    net_dependence: np.ndarray
    power_raw: np.ndarray
    power_normalized: np.ndarray


def build_influence_profile(mid) -> InfluenceProfile:
    """Run the full power pipeline on a direct influence matrix."""
    midi = compute_midi(mid)
    diag = np.diag(midi)
    infl = midi.sum(axis=1) - diag
    dep = midi.sum(axis=0) - diag
    total = int(infl.sum())
    if total == 0:
        raise DegenerateNetworkError("network has no influence between actors")
    balance = np.divide(
        infl, infl + dep, out=np.zeros(len(infl), dtype=float), where=(infl + dep) > 0
    )
    raw = (infl - diag) / total * balance
    for arr in (midi, infl, dep, raw):
        arr.flags.writeable = False
    normalized = normalized_power(raw)
    normalized.flags.writeable = False
    return InfluenceProfile(
        midi=midi,
        net_influence=infl,
        net_dependence=dep,
        power_raw=raw,
        power_normalized=normalized,
    )
