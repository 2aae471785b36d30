"""HTTP facade over the engine: projects, analyses and what-if scenarios.

Projects and scenario action logs persist as JSON files in a store
directory; reports are derived data and are recomputed from the stored
inputs on every read, which keeps every scenario report consistent with
its action list by construction. Each project carries an optimistic
version counter: mutations must present the current version and bump it.
"""

import json
import os
import threading
from pathlib import Path

from fastapi import Body, FastAPI, HTTPException

from .aggregate import (
    ScenarioError,
    TreatmentAction,
    analyze_project,
    apply_scenario,
    build_scenario,
    compare_scenarios,
)
from .influence import DegenerateNetworkError
from .model import InvalidProjectError, validate_project
from .projectfile import ProjectFileError, project_from_dict
from .report import build_report_document


class VersionConflictError(Exception):
    def __init__(self, current_version: int):
        self.current_version = current_version
        super().__init__(f"version conflict; current version is {current_version}")


class SessionStore:
    """Disk-backed store of project documents and scenario action logs."""

    def __init__(self, root: Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.RLock()
        self._records: dict[str, dict] = {}
        for path in sorted(self.root.glob("*.json")):
            self._records[path.stem] = json.loads(path.read_text())

    def _persist(self, pid: str) -> None:
        path = self.root / f"{pid}.json"
        tmp = path.with_suffix(".json.tmp")
        tmp.write_text(json.dumps(self._records[pid], indent=2) + "\n")
        os.replace(tmp, path)

    def _record(self, pid: str) -> dict:
        try:
            return self._records[pid]
        except KeyError:
            raise KeyError(f"unknown project id: {pid!r}") from None

    @staticmethod
    def _parse(doc: dict):
        """Validate a project document, returning the parsed project."""
        project, _ = project_from_dict(doc)
        result = validate_project(project)
        if not result.ok:
            raise InvalidProjectError(result)
        return project

    def list_projects(self) -> list[dict]:
        with self._lock:
            return [
                {"id": pid, "name": rec["project"].get("name", ""), "version": rec["version"]}
                for pid, rec in sorted(self._records.items())
            ]

    def create_project(self, doc: dict) -> tuple[str, int]:
        with self._lock:
            self._parse(doc)
            n = 1
            while f"p{n}" in self._records:
                n += 1
            pid = f"p{n}"
            self._records[pid] = {"version": 1, "project": doc, "scenarios": {}}
            self._persist(pid)
            return pid, 1

    def get_project(self, pid: str) -> tuple[dict, int]:
        with self._lock:
            rec = self._record(pid)
            return rec["project"], rec["version"]

    def update_project(self, pid: str, doc: dict, expected_version: int) -> int:
        with self._lock:
            rec = self._record(pid)
            if rec["version"] != expected_version:
                raise VersionConflictError(rec["version"])
            self._parse(doc)
            rec["project"] = doc
            rec["version"] += 1
            self._persist(pid)
            return rec["version"]

    def delete_project(self, pid: str) -> None:
        with self._lock:
            self._record(pid)
            del self._records[pid]
            path = self.root / f"{pid}.json"
            if path.exists():
                path.unlink()

    def project(self, pid: str):
        """Parsed, validated project for analysis."""
        doc, _ = self.get_project(pid)
        return self._parse(doc)

    def add_scenario(
        self, pid: str, actions: list[dict], scenario_id: str | None = None,
        expected_version: int | None = None,
    ) -> tuple[str, int]:
        with self._lock:
            rec = self._record(pid)
            if expected_version is not None and rec["version"] != expected_version:
                raise VersionConflictError(rec["version"])
            scenarios = rec["scenarios"]
            if scenario_id is None:
                n = 1
                while f"s{n}" in scenarios:
                    n += 1
                scenario_id = f"s{n}"
            elif scenario_id in scenarios:
                raise VersionConflictError(rec["version"])
            # Reject bad actions before anything is stored.
            base = self._parse(rec["project"])
            apply_scenario(base, [TreatmentAction.from_dict(a) for a in actions])
            scenarios[scenario_id] = actions
            rec["version"] += 1
            self._persist(pid)
            return scenario_id, rec["version"]

    def list_scenarios(self, pid: str) -> list[dict]:
        with self._lock:
            rec = self._record(pid)
            return [
                {"id": sid, "actions": actions}
                for sid, actions in sorted(rec["scenarios"].items())
            ]

    def get_scenario_actions(self, pid: str, sid: str) -> list[dict]:
        with self._lock:
            rec = self._record(pid)
            try:
                return rec["scenarios"][sid]
            except KeyError:
                raise KeyError(f"unknown scenario id: {sid!r}") from None


def _http_error(exc) -> HTTPException:
    if isinstance(exc, KeyError):
        return HTTPException(status_code=404, detail=str(exc).strip("'\""))
    if isinstance(exc, VersionConflictError):
        return HTTPException(
            status_code=409,
            detail={"message": "version conflict", "current_version": exc.current_version},
        )
    if isinstance(exc, InvalidProjectError):
        return HTTPException(
            status_code=400,
            detail={
                "errors": [
                    {"code": i.code, "where": i.where, "message": i.message}
                    for i in exc.result.errors
                ],
                "warnings": [
                    {"code": i.code, "where": i.where, "message": i.message}
                    for i in exc.result.warnings
                ],
            },
        )
    if isinstance(exc, (ProjectFileError, ScenarioError)):
        return HTTPException(status_code=400, detail=str(exc))
    if isinstance(exc, DegenerateNetworkError):
        return HTTPException(status_code=422, detail=str(exc))
    raise exc


def create_app(store: SessionStore) -> FastAPI:
    app = FastAPI(title="failure-risk analysis service", version="1")

    def _scenario(pid: str, sid: str):
        actions = [
            TreatmentAction.from_dict(a)
            for a in store.get_scenario_actions(pid, sid)
        ]
        return build_scenario(sid, store.project(pid), actions)

    @app.get("/projects")
    def list_projects():
        return {"projects": store.list_projects()}

    @app.post("/projects", status_code=201)
    def create_project(doc: dict = Body(...)):
        try:
            pid, version = store.create_project(doc)
        except Exception as exc:
            raise _http_error(exc) from None
        return {"id": pid, "version": version}

    @app.get("/projects/{pid}")
    def get_project(pid: str):
        try:
            doc, version = store.get_project(pid)
        except Exception as exc:
            raise _http_error(exc) from None
        return {"id": pid, "version": version, "project": doc}

    @app.put("/projects/{pid}")
    def update_project(pid: str, payload: dict = Body(...)):
        if "version" not in payload or "project" not in payload:
            raise HTTPException(status_code=400,
                                detail="body must carry 'version' and 'project'")
        try:
            version = store.update_project(pid, payload["project"], payload["version"])
        except Exception as exc:
            raise _http_error(exc) from None
        return {"id": pid, "version": version}

    @app.delete("/projects/{pid}", status_code=204)
    def delete_project(pid: str):
        try:
            store.delete_project(pid)
        except Exception as exc:
            raise _http_error(exc) from None

    @app.get("/projects/{pid}/analysis")
    def get_analysis(pid: str):
        try:
            analysis = analyze_project(store.project(pid))
        except Exception as exc:
            raise _http_error(exc) from None
        return build_report_document(analysis)

    @app.post("/projects/{pid}/scenarios", status_code=201)
    def create_scenario(pid: str, payload: dict = Body(...)):
        actions = payload.get("actions")
        if not isinstance(actions, list):
            raise HTTPException(status_code=400, detail="body must carry an 'actions' list")
        try:
            sid, version = store.add_scenario(
                pid, actions, payload.get("id"), payload.get("version")
            )
            scenario = _scenario(pid, sid)
        except Exception as exc:
            raise _http_error(exc) from None
        return {
            "id": sid,
            "version": version,
            "report": build_report_document(scenario.analysis),
        }

    @app.get("/projects/{pid}/scenarios")
    def list_scenarios(pid: str):
        try:
            return {"scenarios": store.list_scenarios(pid)}
        except Exception as exc:
            raise _http_error(exc) from None

    @app.get("/projects/{pid}/scenarios/{sid}")
    def get_scenario(pid: str, sid: str):
        try:
            scenario = _scenario(pid, sid)
        except Exception as exc:
            raise _http_error(exc) from None
        return {
            "id": sid,
            "actions": [a.to_dict() for a in scenario.actions],
            "report": build_report_document(scenario.analysis),
        }

    @app.get("/projects/{pid}/scenarios/{first}/compare/{second}")
    def compare(pid: str, first: str, second: str):
        try:
            comparison = compare_scenarios(_scenario(pid, first), _scenario(pid, second))
        except Exception as exc:
            raise _http_error(exc) from None
        return {
            "first": comparison.first,
            "second": comparison.second,
            "deltas": [
                {
                    "actor": d.actor,
                    "in_first": d.in_first,
                    "in_second": d.in_second,
                    "trpn_first": d.trpn_first,
                    "trpn_second": d.trpn_second,
                    "trpn_delta": d.trpn_delta,
                    "rank_first": d.rank_first,
                    "rank_second": d.rank_second,
                    "rank_delta": d.rank_delta,
                    "eliminated": d.eliminated,
                }
                for d in comparison.deltas
            ],
        }

    return app
