"""Command-line interface: validate, analyze, scenario, serve.

Exit codes: 0 success, 1 validation/analysis failure, 2 parse failure.
All diagnostics go to stderr; stdout carries the human-readable report.
"""

import json
import sys
from pathlib import Path

import click

from . import figures, projectfile, report
from .aggregate import (
    ScenarioError,
    TreatmentAction,
    analyze_project,
    apply_scenario,
)
from .influence import DegenerateNetworkError
from .model import InvalidProjectError
from .projectfile import ProjectFileError

EXIT_VALIDATION = 1
EXIT_PARSE = 2

_FORMATS = click.Choice(["human", "machine", "both"])


def _echo_issues(issues, kind: str) -> None:
    for issue in issues:
        click.echo(f"{kind}: {issue}", err=True)


def _load(path: str, strict: bool):
    try:
        return projectfile.load_project_with_warnings(path, strict=strict)
    except ProjectFileError as exc:
        click.echo(f"parse error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    except InvalidProjectError as exc:
        _echo_issues(exc.result.errors, "error")
        _echo_issues(exc.result.warnings, "warning")
        sys.exit(EXIT_VALIDATION)


def _analyze(project):
    try:
        return analyze_project(project)
    except DegenerateNetworkError as exc:
        click.echo(f"analysis error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)


def _write_report(analysis, out: Path, fmt: str, with_figures: bool) -> None:
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if fmt in ("machine", "both"):
        path = out / "report.json"
        path.write_text(report.render_machine(analysis))
        written.append(path)
        written.extend(report.write_delimited(analysis, out))
    if fmt in ("human", "both"):
        human = report.render_human(analysis)
        path = out / "report.txt"
        path.write_text(human)
        written.append(path)
        click.echo(human, nl=False)
    if with_figures:
        written.extend(figures.save_report_figures(analysis, out))
    for path in written:
        click.echo(f"wrote {path}", err=True)


@click.group()
def main():
    """Failure-risk ranking for point-to-point project teams."""


@main.command()
@click.argument("project", type=click.Path())
@click.option("--strict", is_flag=True, help="Reject unknown fields instead of warning.")
def validate(project, strict):
    """Validate a project file and report every located issue."""
    loaded, warnings = _load(project, strict)
    _echo_issues(warnings, "warning")
    click.echo(
        f"OK: {len(loaded.actors)} actors, {len(loaded.modes)} failure modes, "
        f"{len(loaded.failures)} rated failures"
    )


@main.command()
@click.argument("project", type=click.Path())
@click.option("--out", type=click.Path(), envvar="TRPN_OUT", default="trpn-report",
              show_default=True, help="Output directory (env: TRPN_OUT).")
@click.option("--format", "fmt", type=_FORMATS, default="both", show_default=True)
@click.option("--figures/--no-figures", "with_figures", default=True,
              help="Render PNG figures alongside the delimited output.")
@click.option("--strict", is_flag=True, help="Reject unknown fields instead of warning.")
def analyze(project, out, fmt, with_figures, strict):
    """Run the full risk analysis and write the report artifacts."""
    loaded, warnings = _load(project, strict)
    _echo_issues(warnings, "warning")
    analysis = _analyze(loaded)
    _write_report(analysis, Path(out), fmt, with_figures)


@main.command()
@click.argument("project", type=click.Path())
@click.option("--actions", "actions_path", type=click.Path(), required=True,
              help="JSON file with the treatment action list.")
@click.option("--out", type=click.Path(), envvar="TRPN_OUT", default="trpn-scenario",
              show_default=True, help="Output directory (env: TRPN_OUT).")
@click.option("--format", "fmt", type=_FORMATS, default="both", show_default=True)
@click.option("--figures/--no-figures", "with_figures", default=True)
@click.option("--strict", is_flag=True)
def scenario(project, actions_path, out, fmt, with_figures, strict):
    """Apply a treatment action list and report the re-assessed project."""
    loaded, warnings = _load(project, strict)
    _echo_issues(warnings, "warning")

    path = Path(actions_path)
    if not path.exists():
        click.echo(f"parse error: actions file not found: {path}", err=True)
        sys.exit(EXIT_PARSE)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        click.echo(
            f"parse error: {path.name}: line {exc.lineno}, column {exc.colno}: {exc.msg}",
            err=True,
        )
        sys.exit(EXIT_PARSE)
    entries = doc.get("actions") if isinstance(doc, dict) else doc
    if not isinstance(entries, list):
        click.echo("parse error: actions document must be a list or an object "
                   "with an 'actions' list", err=True)
        sys.exit(EXIT_PARSE)

    try:
        actions = [TreatmentAction.from_dict(entry) for entry in entries]
        _, analysis = apply_scenario(loaded, actions)
    except ScenarioError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    except InvalidProjectError as exc:
        _echo_issues(exc.result.errors, "error")
        sys.exit(EXIT_VALIDATION)
    except DegenerateNetworkError as exc:
        click.echo(f"analysis error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    _write_report(analysis, Path(out), fmt, with_figures)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8787, show_default=True, type=int)
@click.option("--store", type=click.Path(), envvar="TRPN_STORE", default="trpn-store",
              show_default=True, help="On-disk project store (env: TRPN_STORE).")
def serve(host, port, store):
    """Run the HTTP analysis service (binds to loopback by default)."""
    import uvicorn

    from .service import SessionStore, create_app

    app = create_app(SessionStore(Path(store)))
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
