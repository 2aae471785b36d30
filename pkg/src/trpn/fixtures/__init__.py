"""Bundled example projects."""

from importlib import resources
from pathlib import Path

DEMO_PROJECT = "design_office_10.json"


def demo_project_path() -> Path:
    """Path of the bundled 10-actor design-office demo project."""
    return Path(resources.files(__package__).joinpath(DEMO_PROJECT))
