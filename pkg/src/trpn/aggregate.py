"""Risk aggregator: total per-actor risk, ranking, and treatment scenarios.

An actor's total risk is its own FMEA total plus the interdependent part:
the personal total weighted by that actor's row of pairwise effect weights,
summed over every actor including itself. Treatment actions (mitigate a
failure, edit a stance or influence cell, eliminate an actor) produce a new
project which is re-analyzed from scratch; nothing is patched incrementally.
"""

from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from . import convergence, fmea, influence, model
from .model import (
    DETECTION_MAX,
    DETECTION_MIN,
    INFLUENCE_MAX,
    INFLUENCE_MIN,
    OCCURRENCE_MAX,
    OCCURRENCE_MIN,
    POSITION_MAX,
    POSITION_MIN,
    SEVERITY_MAX,
    SEVERITY_MIN,
    DirectInfluenceMatrix,
    InvalidProjectError,
    Issue,
    PositionMatrix,
    ProjectDefinition,
    validate_project,
)


class ScenarioError(Exception):
    """A treatment action cannot be applied to the current project."""


def irpn(source_tprpn: float, weight: float) -> float:
    """Interdependent risk contribution: personal total times effect weight."""
    return source_tprpn * weight


@dataclass(frozen=True)
class EffectContribution:
    """One nonzero interdependent-risk term aimed at a target actor."""

    target: str
    irpn: float


def interdependent_risk(
    source_tprpn: float, weights_row, actor_ids
) -> tuple[float, tuple[EffectContribution, ...]]:
    """Total interdependent risk of one actor and its nonzero terms.

    Sums the source actor's personal total weighted by every entry of its
    effect-weight row, the self entry included; the breakdown keeps only
    the terms that are actually nonzero.
    """
    contributions = tuple(
        EffectContribution(target=actor_ids[i], irpn=irpn(source_tprpn, w))
        for i, w in enumerate(weights_row)
        if irpn(source_tprpn, w) != 0.0
    )
    total = float(source_tprpn * np.asarray(weights_row, dtype=float).sum())
    return total, contributions


@dataclass(frozen=True)
class ActorRisk:
    """Per-actor risk line: personal, interdependent, and combined totals."""

    actor: str
    tprpn: int
    tirpn: float
    trpn: float
    failures: tuple[tuple[model.FailureInstance, int], ...]
    effects: tuple[EffectContribution, ...]


@dataclass(frozen=True)
class RiskReport:
    per_actor: tuple[ActorRisk, ...]
    ranking: tuple[str, ...]
    warnings: tuple[Issue, ...] = ()

    def risk_of(self, actor_id: str) -> ActorRisk:
        for entry in self.per_actor:
            if entry.actor == actor_id:
                return entry
        raise KeyError(f"unknown actor id: {actor_id!r}")

    def rank_of(self, actor_id: str) -> int:
        return self.ranking.index(actor_id) + 1


@dataclass(frozen=True, eq=False)
class Analysis:
    """Everything one pipeline run produces, for reports and the service."""

    project: ProjectDefinition
    influence: influence.InfluenceProfile
    convergence: convergence.ConvergenceProfile
    report: RiskReport


def analyze_project(project: ProjectDefinition, *, validate: bool = True) -> Analysis:
    """Run the full pipeline: power weights, effect weights, risk totals.

    Raises InvalidProjectError when validation finds errors and
    DegenerateNetworkError when the influence network carries no power
    information.
    """
    warnings: tuple[Issue, ...] = ()
    if validate:
        result = validate_project(project)
        if not result.ok:
            raise InvalidProjectError(result)
        warnings = result.warnings

    profile = influence.build_influence_profile(project.influence)
    conv = convergence.build_convergence_profile(
        project.positions, profile.power_normalized
    )

    oversized = convergence.oversized_weights(conv.mcdv)
    if oversized:
        ids = project.actor_ids
        cells = ", ".join(f"mcdv[{ids[a]}][{ids[b]}]" for a, b in oversized[:5])
        more = "" if len(oversized) <= 5 else f" (+{len(oversized) - 5} more)"
        warnings = warnings + (
            Issue(
                "weight-above-one",
                cells + more,
                "effect weight magnitude exceeds 1; the /9 normalizer does not clamp",
            ),
        )

    per_actor = []
    for i, actor in enumerate(project.actors):
        personal = fmea.personal_risk(project, actor.id)
        total_interdependent, effects = interdependent_risk(
            personal.tprpn, conv.mcdv[i], project.actor_ids
        )
        per_actor.append(
            ActorRisk(
                actor=actor.id,
                tprpn=personal.tprpn,
                tirpn=total_interdependent,
                trpn=personal.tprpn + total_interdependent,
                failures=personal.per_failure,
                effects=effects,
            )
        )

    by_actor = {entry.actor: entry for entry in per_actor}
    ranking = tuple(
        sorted(
            project.actor_ids,
            key=lambda aid: (-by_actor[aid].trpn, -by_actor[aid].tprpn, aid),
        )
    )
    report = RiskReport(per_actor=tuple(per_actor), ranking=ranking, warnings=warnings)
    return Analysis(project=project, influence=profile, convergence=conv, report=report)


def trpn_report(project: ProjectDefinition) -> RiskReport:
    return analyze_project(project).report


# ---------------------------------------------------------------------------
# Treatment actions and scenarios
# ---------------------------------------------------------------------------

class ActionKind(str, Enum):
    MITIGATE_FAILURE = "mitigate_failure"
    ADJUST_POSITION = "adjust_position"
    ADJUST_INFLUENCE = "adjust_influence"
    ELIMINATE_ACTOR = "eliminate_actor"


@dataclass(frozen=True)
class TreatmentAction:
    """One edit in the treat/re-assess loop.

    Which fields apply depends on the kind: mitigate_failure re-rates an
    existing failure (any subset of severity/detection/occurrence),
    adjust_position and adjust_influence replace one matrix cell, and
    eliminate_actor removes an actor with all its rows, columns and rated
    failures.
    """

    kind: ActionKind
    actor: str | None = None
    mode: str | None = None
    source: str | None = None
    target: str | None = None
    value: int | None = None
    severity: int | None = None
    detection: int | None = None
    occurrence: int | None = None

    def to_dict(self) -> dict:
        doc: dict = {"kind": self.kind.value}
        for name in ("actor", "mode", "source", "target", "value",
                     "severity", "detection", "occurrence"):
            value = getattr(self, name)
            if value is not None:
                doc[name] = value
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "TreatmentAction":
        if not isinstance(doc, dict):
            raise ScenarioError(f"action must be an object, got {type(doc).__name__}")
        try:
            kind = ActionKind(doc.get("kind"))
        except ValueError:
            raise ScenarioError(f"unknown action kind: {doc.get('kind')!r}") from None
        known = {"kind", "actor", "mode", "source", "target", "value",
                 "severity", "detection", "occurrence"}
        unknown = set(doc) - known
        if unknown:
            raise ScenarioError(f"unknown action fields: {sorted(unknown)}")
        return cls(kind=kind, **{k: doc[k] for k in known - {"kind"} if k in doc})


def _require(action: TreatmentAction, *fields: str) -> None:
    missing = [name for name in fields if getattr(action, name) is None]
    if missing:
        raise ScenarioError(
            f"{action.kind.value} action is missing {', '.join(missing)}"
        )


def _check_scale(label: str, value: int, lo: int, hi: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or not lo <= value <= hi:
        raise ScenarioError(f"{label} out of scale: {value!r} not in [{lo}, {hi}]")


def apply_action(project: ProjectDefinition, action: TreatmentAction) -> ProjectDefinition:
    """Apply one treatment action, returning the edited project."""
    if action.kind is ActionKind.MITIGATE_FAILURE:
        _require(action, "actor", "mode")
        matches = [
            f for f in project.failures
            if f.actor == action.actor and f.mode == action.mode
        ]
        if not matches:
            raise ScenarioError(
                f"no rated failure for actor {action.actor!r}, mode {action.mode!r}"
            )
        current = matches[0]
        new_ranks = {}
        for name, lo, hi in (
            ("severity", SEVERITY_MIN, SEVERITY_MAX),
            ("detection", DETECTION_MIN, DETECTION_MAX),
            ("occurrence", OCCURRENCE_MIN, OCCURRENCE_MAX),
        ):
            value = getattr(action, name)
            if value is not None:
                _check_scale(name, value, lo, hi)
                new_ranks[name] = value
        if not new_ranks:
            raise ScenarioError(
                "mitigate_failure needs at least one of severity/detection/occurrence"
            )
        updated = replace(current, **new_ranks)
        failures = tuple(updated if f is current else f for f in project.failures)
        return replace(project, failures=failures)

    if action.kind is ActionKind.ADJUST_POSITION:
        _require(action, "actor", "mode", "value")
        try:
            a = project.actor_index(action.actor)
            m = project.mode_index(action.mode)
        except KeyError as exc:
            raise ScenarioError(str(exc)) from None
        _check_scale("position", action.value, POSITION_MIN, POSITION_MAX)
        rows = project.positions.as_lists()
        rows[a][m] = action.value
        return replace(project, positions=PositionMatrix.from_rows(rows))

    if action.kind is ActionKind.ADJUST_INFLUENCE:
        _require(action, "source", "target", "value")
        try:
            a = project.actor_index(action.source)
            b = project.actor_index(action.target)
        except KeyError as exc:
            raise ScenarioError(str(exc)) from None
        if a == b and action.value != 0:
            raise ScenarioError("self-influence must stay zero")
        _check_scale("influence", action.value, INFLUENCE_MIN, INFLUENCE_MAX)
        rows = project.influence.as_lists()
        rows[a][b] = action.value
        return replace(project, influence=DirectInfluenceMatrix.from_rows(rows))

    if action.kind is ActionKind.ELIMINATE_ACTOR:
        _require(action, "actor")
        try:
            a = project.actor_index(action.actor)
        except KeyError as exc:
            raise ScenarioError(str(exc)) from None
        if len(project.actors) == 1:
            raise ScenarioError("cannot eliminate the last remaining actor")
        keep = [i for i in range(len(project.actors)) if i != a]
        return replace(
            project,
            actors=tuple(project.actors[i] for i in keep),
            failures=tuple(f for f in project.failures if f.actor != action.actor),
            positions=PositionMatrix.from_rows(
                [list(project.positions.rows[i]) for i in keep]
            ),
            influence=DirectInfluenceMatrix.from_rows(
                [[project.influence.rows[i][j] for j in keep] for i in keep]
            ),
        )

    raise ScenarioError(f"unhandled action kind: {action.kind!r}")


def apply_scenario(
    base: ProjectDefinition, actions
) -> tuple[ProjectDefinition, Analysis]:
    """Apply actions in order and re-run the full pipeline on the result."""
    project = base
    for action in actions:
        project = apply_action(project, action)
    return project, analyze_project(project)


@dataclass(frozen=True, eq=False)
class Scenario:
    """A named, replayable action list over a base project with its report."""

    id: str
    base: ProjectDefinition
    actions: tuple[TreatmentAction, ...]
    analysis: Analysis


def build_scenario(scenario_id: str, base: ProjectDefinition, actions) -> Scenario:
    actions = tuple(actions)
    _, analysis = apply_scenario(base, actions)
    return Scenario(id=scenario_id, base=base, actions=actions, analysis=analysis)


@dataclass(frozen=True)
class ActorDelta:
    """Per-actor movement between two scenarios on the same base."""

    actor: str
    in_first: bool
    in_second: bool
    trpn_first: float | None
    trpn_second: float | None
    trpn_delta: float | None
    rank_first: int | None
    rank_second: int | None
    rank_delta: int | None

    @property
    def eliminated(self) -> bool:
        return not (self.in_first and self.in_second)


@dataclass(frozen=True)
class ScenarioComparison:
    first: str
    second: str
    deltas: tuple[ActorDelta, ...]


def compare_scenarios(first: Scenario, second: Scenario) -> ScenarioComparison:
    """Per-actor risk and rank deltas between two scenarios.

    Both scenarios must share the same base project; actors eliminated by
    either side are flagged rather than differenced.
    """
    if first.base != second.base:
        raise ScenarioError("scenarios do not share the same base project")

    deltas = []
    for actor in first.base.actors:
        reports = (first.analysis.report, second.analysis.report)
        present = tuple(actor.id in r.ranking for r in reports)
        trpns = tuple(
            r.risk_of(actor.id).trpn if here else None
            for r, here in zip(reports, present)
        )
        ranks = tuple(
            r.rank_of(actor.id) if here else None for r, here in zip(reports, present)
        )
        both = present[0] and present[1]
        deltas.append(
            ActorDelta(
                actor=actor.id,
                in_first=present[0],
                in_second=present[1],
                trpn_first=trpns[0],
                trpn_second=trpns[1],
                trpn_delta=(trpns[1] - trpns[0]) if both else None,
                rank_first=ranks[0],
                rank_second=ranks[1],
                rank_delta=(ranks[1] - ranks[0]) if both else None,
            )
        )
    return ScenarioComparison(first=first.id, second=second.id, deltas=tuple(deltas))
