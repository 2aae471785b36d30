"""Shared fixtures: the bundled demo project and random project generation."""

import random

import numpy as np
import pytest

from trpn import (
    Actor,
    DirectInfluenceMatrix,
    FailureInstance,
    FailureMode,
    PositionMatrix,
    ProjectDefinition,
    load_project,
)
from trpn.fixtures import demo_project_path


@pytest.fixture(scope="session")
def demo_project() -> ProjectDefinition:
    return load_project(demo_project_path())


def make_project(
    positions_rows, influence_rows, failures=(), n_modes=None, name="test project"
) -> ProjectDefinition:
    """Assemble a project from raw matrix rows with generated actor/mode ids."""
    n_actors = len(influence_rows)
    if n_modes is None:
        n_modes = len(positions_rows[0]) if positions_rows else 0
    actors = tuple(Actor(f"A{i + 1}", f"Actor {i + 1}") for i in range(n_actors))
    modes = tuple(FailureMode(f"M{j + 1}", f"Mode {j + 1}") for j in range(n_modes))
    return ProjectDefinition(
        name=name,
        actors=actors,
        modes=modes,
        failures=tuple(FailureInstance(*f) for f in failures),
        positions=PositionMatrix.from_rows(positions_rows),
        influence=DirectInfluenceMatrix.from_rows(influence_rows),
    )


def _network_has_power(influence_rows) -> bool:
    """True when at least one actor ends up with a nonzero power coefficient."""
    mid = np.asarray(influence_rows, dtype=np.int64)
    midi = mid + np.minimum(mid[:, :, None], mid[None, :, :]).sum(axis=1)
    diag = np.diag(midi)
    infl = midi.sum(axis=1) - diag
    dep = midi.sum(axis=0) - diag
    if infl.sum() == 0:
        return False
    return bool(np.any((infl - diag > 0) & (infl > 0)))


def random_valid_project(rng: random.Random, max_actors: int = 8) -> ProjectDefinition:
    """Draw a random valid project whose influence network carries power.

    Degenerate networks (no influence at all, or an all-zero power vector)
    are redrawn, since the pipeline is specified to refuse them.
    """
    while True:
        n = rng.randint(2, max_actors)
        m = rng.randint(1, 5)
        influence_rows = [
            [0 if a == b else rng.choice((0, 0, 1, 2, 3)) for b in range(n)]
            for a in range(n)
        ]
        if not _network_has_power(influence_rows):
            continue
        positions_rows = [
            [rng.randint(-3, 3) for _ in range(m)] for _ in range(n)
        ]
        failures = []
        for a in range(n):
            for j in rng.sample(range(m), k=rng.randint(0, m)):
                if rng.random() < 0.4:
                    failures.append(
                        (
                            f"A{a + 1}",
                            f"M{j + 1}",
                            rng.randint(-3, 3),
                            rng.randint(1, 5),
                            rng.randint(1, 5),
                        )
                    )
        return make_project(positions_rows, influence_rows, failures, n_modes=m)
