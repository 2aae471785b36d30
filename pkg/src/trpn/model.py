"""Domain model: actors, failure modes, rating scales, matrices, validation.

Every type here is an immutable value object. Construction performs only
structural checks (integer entries, rectangular matrices); value-level
invariants and cross-references are enforced by :func:`validate_project`,
which reports problems as data instead of raising so that callers can
surface every issue at once.
"""

from dataclasses import dataclass
from enum import Enum


# Rating scales. Severity is signed: positive ranks mark behaviour that harms
# the design process, negative ranks mark behaviour that actively helps.
SEVERITY_MIN, SEVERITY_MAX = -3, 3
DETECTION_MIN, DETECTION_MAX = 1, 5
OCCURRENCE_MIN, OCCURRENCE_MAX = 1, 5
POSITION_MIN, POSITION_MAX = -3, 3
INFLUENCE_MIN, INFLUENCE_MAX = 0, 3


class EffectClass(str, Enum):
    """The seven effect tiers of the severity scale."""

    NEGATIVE_HIGH = "negative_high"
    NEGATIVE_MEDIUM = "negative_medium"
    NEGATIVE_LOW = "negative_low"
    NO_EFFECT = "no_effect"
    POSITIVE_LOW = "positive_low"
    POSITIVE_MEDIUM = "positive_medium"
    POSITIVE_HIGH = "positive_high"


_SEVERITY_BY_EFFECT = {
    EffectClass.NEGATIVE_HIGH: 3,
    EffectClass.NEGATIVE_MEDIUM: 2,
    EffectClass.NEGATIVE_LOW: 1,
    EffectClass.NO_EFFECT: 0,
    EffectClass.POSITIVE_LOW: -1,
    EffectClass.POSITIVE_MEDIUM: -2,
    EffectClass.POSITIVE_HIGH: -3,
}


def severity_from_effect(effect: EffectClass) -> int:
    """Map an effect tier to its severity rank (harmful = positive)."""
    return _SEVERITY_BY_EFFECT[EffectClass(effect)]


# Human-readable anchors for the three scales, used by reports and the UI.
DETECTION_LABELS = {
    5: "no detection method available",
    4: "weak detection capability",
    3: "moderate detection capability",
    2: "strong detection capability",
    1: "fully prevented, detection not applicable",
}

OCCURRENCE_LABELS = {
    5: "failure almost certain with a new design",
    4: "frequent in similar designs",
    3: "occasional in similar designs",
    2: "not observed in near-identical designs",
    1: "eliminated through preventive control",
}


@dataclass(frozen=True)
class Actor:
    id: str
    name: str


@dataclass(frozen=True)
class FailureMode:
    id: str
    label: str
    effect_description: str = ""


# Default catalog of people-failure modes for design teams. Projects may add
# their own; these ship so a new project starts with a usable vocabulary.
DEFAULT_FAILURE_MODES = (
    FailureMode("LL", "Lack of leadership", "design work drifts without direction"),
    FailureMode("LK", "Lack of knowledge", "defects reach the end user"),
    FailureMode("LR", "Lack of responsibility", "deliverables go unowned and slip"),
    FailureMode("PC", "Poor communication", "rework caused by misalignment"),
    FailureMode("IGA", "Insensitive to global awareness", "product misses market needs"),
)


@dataclass(frozen=True)
class FailureInstance:
    """One rated failure of one actor: severity x detection x occurrence."""

    actor: str
    mode: str
    severity: int
    detection: int
    occurrence: int


def _freeze_rows(rows) -> tuple[tuple[int, ...], ...]:
    frozen = tuple(tuple(row) for row in rows)
    widths = {len(row) for row in frozen}
    if len(widths) > 1:
        raise ValueError("matrix rows have unequal lengths")
    for r, row in enumerate(frozen):
        for c, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"matrix entry [{r}][{c}] is not an integer: {value!r}")
    return frozen


@dataclass(frozen=True)
class PositionMatrix:
    """Signed actor stances, one row per actor, one column per failure mode.

    Positive entries mean the actor is inclined toward the failure, negative
    entries mean the actor works against it.
    """

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "PositionMatrix":
        return cls(_freeze_rows(rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class DirectInfluenceMatrix:
    """Actor-on-actor direct influence, 0 (none) to 3 (strong), zero diagonal."""

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "DirectInfluenceMatrix":
        return cls(_freeze_rows(rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class ProjectDefinition:
    """A complete project: who is involved, what can fail, who sways whom."""

    name: str
    actors: tuple[Actor, ...]
    modes: tuple[FailureMode, ...]
    failures: tuple[FailureInstance, ...]
    positions: PositionMatrix
    influence: DirectInfluenceMatrix
    created: str = ""

    @property
    def actor_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.actors)

    @property
    def mode_ids(self) -> tuple[str, ...]:
        return tuple(m.id for m in self.modes)

    def actor_index(self, actor_id: str) -> int:
        for i, a in enumerate(self.actors):
            if a.id == actor_id:
                return i
        raise KeyError(f"unknown actor id: {actor_id!r}")

    def mode_index(self, mode_id: str) -> int:
        for i, m in enumerate(self.modes):
            if m.id == mode_id:
                return i
        raise KeyError(f"unknown failure mode id: {mode_id!r}")

    def failures_of(self, actor_id: str) -> tuple[FailureInstance, ...]:
        return tuple(f for f in self.failures if f.actor == actor_id)


@dataclass(frozen=True)
class Issue:
    """One validation finding, anchored to the coordinate it concerns."""

    code: str
    where: str
    message: str

    def __str__(self) -> str:
        return f"{self.where}: {self.message}" if self.where else self.message


@dataclass(frozen=True)
class ValidationResult:
    errors: tuple[Issue, ...] = ()
    warnings: tuple[Issue, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors


class InvalidProjectError(Exception):
    """A project failed validation; carries the full issue list."""

    def __init__(self, result: ValidationResult):
        self.result = result
        lines = [str(issue) for issue in result.errors]
        super().__init__("invalid project: " + "; ".join(lines))


def validate_project(project: ProjectDefinition) -> ValidationResult:
    """Check every value-level invariant and cross-reference of a project.

    Returns an empty error list iff the project is safe to analyze. Soft
    inconsistencies (a harmful rated failure whose stance entry does not
    lean toward that failure) come back as warnings.
    """
    errors: list[Issue] = []
    warnings: list[Issue] = []

    def err(code: str, where: str, message: str) -> None:
        errors.append(Issue(code, where, message))

    if not project.actors:
        err("no-actors", "actors", "project must define at least one actor")

    seen_actor_ids: set[str] = set()
    for i, actor in enumerate(project.actors):
        if not actor.id:
            err("empty-id", f"actors[{i}]", "actor id is empty")
        elif actor.id in seen_actor_ids:
            err("duplicate-id", f"actors[{i}]", f"duplicate actor id {actor.id!r}")
        seen_actor_ids.add(actor.id)

    seen_mode_ids: set[str] = set()
    for i, mode in enumerate(project.modes):
        if not mode.id:
            err("empty-id", f"failure_modes[{i}]", "failure mode id is empty")
        elif mode.id in seen_mode_ids:
            err("duplicate-id", f"failure_modes[{i}]", f"duplicate failure mode id {mode.id!r}")
        seen_mode_ids.add(mode.id)
        if not mode.label:
            err("empty-label", f"failure_modes[{i}]", f"failure mode {mode.id!r} has an empty label")

    n_actors = len(project.actors)
    n_modes = len(project.modes)
    actor_ids = project.actor_ids
    mode_ids = project.mode_ids

    # Stance matrix: actors x modes, entries on the -3..3 scale.
    pos_shape = project.positions.shape
    if pos_shape != (n_actors, n_modes):
        err(
            "dimension-mismatch",
            "positions",
            f"expected {n_actors}x{n_modes} position matrix, got {pos_shape[0]}x{pos_shape[1]}",
        )
    else:
        for a, row in enumerate(project.positions.rows):
            for m, value in enumerate(row):
                if not POSITION_MIN <= value <= POSITION_MAX:
                    err(
                        "out-of-scale",
                        f"positions[{actor_ids[a]}][{mode_ids[m]}]",
                        f"position out of scale: {value} not in "
                        f"[{POSITION_MIN}, {POSITION_MAX}]",
                    )

    # Influence matrix: actors x actors, 0..3, self-influence forced to zero.
    inf_shape = project.influence.shape
    if inf_shape != (n_actors, n_actors):
        err(
            "dimension-mismatch",
            "influence",
            f"expected {n_actors}x{n_actors} influence matrix, got {inf_shape[0]}x{inf_shape[1]}",
        )
    else:
        for a, row in enumerate(project.influence.rows):
            for b, value in enumerate(row):
                where = f"influence[{actor_ids[a]}][{actor_ids[b]}]"
                if not INFLUENCE_MIN <= value <= INFLUENCE_MAX:
                    err(
                        "out-of-scale",
                        where,
                        f"influence out of scale: {value} not in "
                        f"[{INFLUENCE_MIN}, {INFLUENCE_MAX}]",
                    )
                elif a == b and value != 0:
                    err("nonzero-self-influence", where, "nonzero self-influence")

    seen_pairs: set[tuple[str, str]] = set()
    for i, failure in enumerate(project.failures):
        where = f"failures[{i}]"
        if failure.actor not in seen_actor_ids:
            err("unknown-actor", where, f"unknown actor id {failure.actor!r}")
            continue
        if failure.mode not in seen_mode_ids:
            err("unknown-mode", where, f"unknown failure mode id {failure.mode!r}")
            continue
        pair = (failure.actor, failure.mode)
        if pair in seen_pairs:
            err("duplicate-failure", where, f"duplicate failure for actor {failure.actor!r}, mode {failure.mode!r}")
        seen_pairs.add(pair)
        if not SEVERITY_MIN <= failure.severity <= SEVERITY_MAX:
            err("out-of-scale", where, f"severity out of scale: {failure.severity}")
        if not DETECTION_MIN <= failure.detection <= DETECTION_MAX:
            err("out-of-scale", where, f"detection out of scale: {failure.detection}")
        if not OCCURRENCE_MIN <= failure.occurrence <= OCCURRENCE_MAX:
            err("out-of-scale", where, f"occurrence out of scale: {failure.occurrence}")

        # Soft consistency: a harmful rated failure should be mirrored by a
        # positive stance toward that failure mode.
        if (
            failure.severity > 0
            and pos_shape == (n_actors, n_modes)
            and project.positions.rows[project.actor_index(failure.actor)][
                project.mode_index(failure.mode)
            ]
            <= 0
        ):
            warnings.append(
                Issue(
                    "stance-mismatch",
                    f"positions[{failure.actor}][{failure.mode}]",
                    f"actor {failure.actor!r} has a harmful rated failure for "
                    f"{failure.mode!r} but a non-positive stance entry",
                )
            )

    return ValidationResult(errors=tuple(errors), warnings=tuple(warnings))
