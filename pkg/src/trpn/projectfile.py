"""Project file format: a versioned JSON document with optional CSV matrices.

One self-describing JSON document is the source of truth for a project.
The two dense matrices may be written inline as ``{"rows": [[...]]}`` or
referenced as ``{"path": "positions.csv"}`` pointing at a plain numeric CSV
(rows = actors in document order), since matrices usually start life as
spreadsheet exports. Unknown fields are errors under strict mode and
warnings otherwise.
"""

import csv
import json
from pathlib import Path

from .model import (
    Actor,
    DirectInfluenceMatrix,
    FailureInstance,
    FailureMode,
    InvalidProjectError,
    Issue,
    PositionMatrix,
    ProjectDefinition,
    validate_project,
)

FORMAT_VERSION = 1

_TOP_KEYS = {"format_version", "name", "created", "actors", "failure_modes",
             "failures", "positions", "influence"}
_ACTOR_KEYS = {"id", "name"}
_MODE_KEYS = {"id", "label", "effect_description"}
_FAILURE_KEYS = {"actor", "mode", "severity", "detection", "occurrence"}
_MATRIX_KEYS = {"rows", "path"}


class ProjectFileError(Exception):
    """The document cannot be read at all: parse error, bad structure,
    missing field, or unsupported format version."""


def _fail(where: str, message: str) -> None:
    raise ProjectFileError(f"{where}: {message}")


def _expect(doc: dict, key: str, kind, where: str):
    if key not in doc:
        _fail(where, f"missing required field {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        _fail(f"{where}.{key}", f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _check_unknown(doc: dict, known: set, where: str, strict: bool,
                   warnings: list[Issue]) -> None:
    unknown = sorted(set(doc) - known)
    if not unknown:
        return
    message = f"unknown field(s): {', '.join(unknown)}"
    if strict:
        _fail(where, message)
    warnings.append(Issue("unknown-field", where, message))


def _int_rows(value, where: str) -> list[list[int]]:
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        _fail(where, "expected a list of rows")
    rows = []
    for r, row in enumerate(value):
        out = []
        for c, cell in enumerate(row):
            if isinstance(cell, bool) or not isinstance(cell, int):
                _fail(f"{where}[{r}][{c}]", f"expected integer, got {cell!r}")
            out.append(cell)
        rows.append(out)
    return rows


def _csv_rows(path: Path, where: str) -> list[list[int]]:
    if not path.exists():
        _fail(where, f"referenced matrix file not found: {path}")
    rows = []
    with open(path, newline="") as handle:
        for r, row in enumerate(csv.reader(handle)):
            if not row or all(not cell.strip() for cell in row):
                continue
            out = []
            for c, cell in enumerate(row):
                try:
                    out.append(int(cell.strip()))
                except ValueError:
                    _fail(f"{where} ({path.name}, row {r + 1}, col {c + 1})",
                          f"expected integer, got {cell.strip()!r}")
            rows.append(out)
    return rows


def _matrix_rows(value, where: str, base_dir: Path | None, strict: bool,
                 warnings: list[Issue]) -> list[list[int]]:
    if not isinstance(value, dict):
        _fail(where, "expected an object with 'rows' or 'path'")
    _check_unknown(value, _MATRIX_KEYS, where, strict, warnings)
    if ("rows" in value) == ("path" in value):
        _fail(where, "provide exactly one of 'rows' or 'path'")
    if "rows" in value:
        return _int_rows(value["rows"], f"{where}.rows")
    ref = value["path"]
    if not isinstance(ref, str):
        _fail(f"{where}.path", f"expected string path, got {type(ref).__name__}")
    path = Path(ref)
    if not path.is_absolute():
        path = (base_dir or Path.cwd()) / path
    return _csv_rows(path, where)


def project_from_dict(
    doc: dict, *, strict: bool = False, base_dir: Path | None = None
) -> tuple[ProjectDefinition, list[Issue]]:
    """Build a project from a parsed document; structural problems raise.

    Returns the project plus any unknown-field warnings. Value-level
    validation is the caller's job (see load_project).
    """
    if not isinstance(doc, dict):
        raise ProjectFileError(f"project document must be an object, got {type(doc).__name__}")

    warnings: list[Issue] = []
    _check_unknown(doc, _TOP_KEYS, "project", strict, warnings)

    version = _expect(doc, "format_version", int, "project")
    if version != FORMAT_VERSION:
        _fail("project.format_version", f"unsupported version {version} (supported: {FORMAT_VERSION})")

    name = _expect(doc, "name", str, "project")
    created = doc.get("created", "")
    if not isinstance(created, str):
        _fail("project.created", f"expected string timestamp, got {type(created).__name__}")

    actors = []
    for i, entry in enumerate(_expect(doc, "actors", list, "project")):
        where = f"project.actors[{i}]"
        if not isinstance(entry, dict):
            _fail(where, "expected an object")
        _check_unknown(entry, _ACTOR_KEYS, where, strict, warnings)
        actor_id = _expect(entry, "id", str, where)
        actors.append(Actor(id=actor_id, name=entry.get("name", actor_id) or actor_id))

    modes = []
    for i, entry in enumerate(_expect(doc, "failure_modes", list, "project")):
        where = f"project.failure_modes[{i}]"
        if not isinstance(entry, dict):
            _fail(where, "expected an object")
        _check_unknown(entry, _MODE_KEYS, where, strict, warnings)
        modes.append(
            FailureMode(
                id=_expect(entry, "id", str, where),
                label=_expect(entry, "label", str, where),
                effect_description=str(entry.get("effect_description", "")),
            )
        )

    failures = []
    for i, entry in enumerate(_expect(doc, "failures", list, "project")):
        where = f"project.failures[{i}]"
        if not isinstance(entry, dict):
            _fail(where, "expected an object")
        _check_unknown(entry, _FAILURE_KEYS, where, strict, warnings)
        failures.append(
            FailureInstance(
                actor=_expect(entry, "actor", str, where),
                mode=_expect(entry, "mode", str, where),
                severity=_expect(entry, "severity", int, where),
                detection=_expect(entry, "detection", int, where),
                occurrence=_expect(entry, "occurrence", int, where),
            )
        )

    try:
        positions = PositionMatrix.from_rows(
            _matrix_rows(_expect(doc, "positions", dict, "project"),
                         "project.positions", base_dir, strict, warnings)
        )
        influence = DirectInfluenceMatrix.from_rows(
            _matrix_rows(_expect(doc, "influence", dict, "project"),
                         "project.influence", base_dir, strict, warnings)
        )
    except ValueError as exc:
        raise ProjectFileError(str(exc)) from None

    project = ProjectDefinition(
        name=name,
        actors=tuple(actors),
        modes=tuple(modes),
        failures=tuple(failures),
        positions=positions,
        influence=influence,
        created=created,
    )
    return project, warnings


def project_to_dict(project: ProjectDefinition) -> dict:
    """Canonical document form of a project (matrices inline)."""
    return {
        "format_version": FORMAT_VERSION,
        "name": project.name,
        "created": project.created,
        "actors": [{"id": a.id, "name": a.name} for a in project.actors],
        "failure_modes": [
            {"id": m.id, "label": m.label, "effect_description": m.effect_description}
            for m in project.modes
        ],
        "failures": [
            {
                "actor": f.actor,
                "mode": f.mode,
                "severity": f.severity,
                "detection": f.detection,
                "occurrence": f.occurrence,
            }
            for f in project.failures
        ],
        "positions": {"rows": project.positions.as_lists()},
        "influence": {"rows": project.influence.as_lists()},
    }


def load_project_with_warnings(
    path, *, strict: bool = False
) -> tuple[ProjectDefinition, tuple[Issue, ...]]:
    """Read, parse and validate a project file.

    Raises ProjectFileError (with line/column for JSON syntax problems)
    when the document cannot be read, and InvalidProjectError carrying the
    located issues when it parses but fails validation.
    """
    path = Path(path)
    if not path.exists():
        raise ProjectFileError(f"project file not found: {path}")
    text = path.read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProjectFileError(
            f"{path.name}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None

    project, warnings = project_from_dict(doc, strict=strict, base_dir=path.parent)
    result = validate_project(project)
    if not result.ok:
        raise InvalidProjectError(result)
    return project, tuple(warnings) + result.warnings


def load_project(path, *, strict: bool = False) -> ProjectDefinition:
    project, _ = load_project_with_warnings(path, strict=strict)
    return project


def save_project(project: ProjectDefinition, path) -> None:
    Path(path).write_text(json.dumps(project_to_dict(project), indent=2) + "\n")
