"""FMEA engine: per-failure and per-actor personal risk priority numbers."""

from dataclasses import dataclass

from .model import FailureInstance, ProjectDefinition


def prpn(severity: int, detection: int, occurrence: int) -> int:
    """Risk priority number of one failure: severity x detection x occurrence.

    Negative severity (beneficial behaviour) yields a negative number.
    """
    return severity * detection * occurrence


@dataclass(frozen=True)
class PersonalRiskBreakdown:
    """All rated failures of one actor with their risk numbers and total."""

    actor: str
    per_failure: tuple[tuple[FailureInstance, int], ...]
    tprpn: int


def personal_risk(project: ProjectDefinition, actor_id: str) -> PersonalRiskBreakdown:
    """Sum the risk numbers of every failure rated for one actor.

    Actors with no rated failures total zero. Raises KeyError for an
    unknown actor id.
    """
    project.actor_index(actor_id)
    scored = tuple(
        (f, prpn(f.severity, f.detection, f.occurrence))
        for f in project.failures
        if f.actor == actor_id
    )
    return PersonalRiskBreakdown(
        actor=actor_id,
        per_failure=scored,
        tprpn=sum(value for _, value in scored),
    )
