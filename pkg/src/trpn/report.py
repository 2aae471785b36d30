"""Report rendering: machine JSON, human-readable tables, delimited matrices.

The machine form keeps full precision and a fixed field order so repeated
runs on the same input are byte-identical. The human form rounds effect
weights to 2 decimals and risk totals to 1 decimal.
"""

import csv
import json
from pathlib import Path

from .aggregate import Analysis

REPORT_VERSION = 1


def _int_rows(matrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in matrix]


def _float_rows(matrix) -> list[list[float]]:
    return [[float(x) for x in row] for row in matrix]


def build_report_document(analysis: Analysis) -> dict:
    """Full machine-readable analysis: matrices, breakdowns, ranking."""
    project = analysis.project
    profile = analysis.influence
    conv = analysis.convergence
    report = analysis.report
    return {
        "format_version": REPORT_VERSION,
        "project": {
            "name": project.name,
            "created": project.created,
            "actors": [{"id": a.id, "name": a.name} for a in project.actors],
            "failure_modes": [{"id": m.id, "label": m.label} for m in project.modes],
        },
        "power": {
            "midi": _int_rows(profile.midi),
            "net_influence": [int(x) for x in profile.net_influence],
            "net_dependence": [int(x) for x in profile.net_dependence],
            "power_raw": [float(x) for x in profile.power_raw],
            "power_normalized": [float(x) for x in profile.power_normalized],
        },
        "convergence": {
            "three_mao": _float_rows(conv.three_mao),
            "three_caa": _float_rows(conv.three_caa),
            "three_daa": _float_rows(conv.three_daa),
            "mcdv": _float_rows(conv.mcdv),
        },
        "risk": {
            "per_actor": [
                {
                    "actor": entry.actor,
                    "tprpn": entry.tprpn,
                    "tirpn": entry.tirpn,
                    "trpn": entry.trpn,
                    "failures": [
                        {
                            "mode": f.mode,
                            "severity": f.severity,
                            "detection": f.detection,
                            "occurrence": f.occurrence,
                            "prpn": value,
                        }
                        for f, value in entry.failures
                    ],
                    "effects": [
                        {"target": e.target, "irpn": e.irpn} for e in entry.effects
                    ],
                }
                for entry in report.per_actor
            ],
            "ranking": list(report.ranking),
            "warnings": [
                {"code": w.code, "where": w.where, "message": w.message}
                for w in report.warnings
            ],
        },
    }


def render_machine(analysis: Analysis) -> str:
    return json.dumps(build_report_document(analysis), indent=2) + "\n"


def render_human(analysis: Analysis) -> str:
    """Ranked treatment-priority table plus the effect-weight grid."""
    project = analysis.project
    report = analysis.report
    names = {a.id: a.name for a in project.actors}
    width = max([len(a.id) for a in project.actors] + [5])

    lines = [
        f"Failure-risk priority report -- {project.name}",
        f"{len(project.actors)} actors, {len(project.modes)} failure modes, "
        f"{len(project.failures)} rated failures",
        "",
        "Treatment priority (TRPN = personal TPRPN + interdependent TIRPN):",
        f"  rank  {'actor':<{width}}  {'TPRPN':>7}  {'TIRPN':>8}  {'TRPN':>8}  name",
    ]
    for rank, actor_id in enumerate(report.ranking, start=1):
        entry = report.risk_of(actor_id)
        lines.append(
            f"  {rank:>4}  {actor_id:<{width}}  {entry.tprpn:>7}  "
            f"{entry.tirpn:>+8.1f}  {entry.trpn:>8.1f}  {names[actor_id]}"
        )

    lines += ["", "Effect weights between actors (MCDV, 2 dp):"]
    ids = project.actor_ids
    cell = max(width, 6)
    lines.append("  " + " " * width + "  " + "  ".join(f"{i:>{cell}}" for i in ids))
    for i, actor_id in enumerate(ids):
        row = "  ".join(f"{analysis.convergence.mcdv[i][j]:>{cell}.2f}" for j in range(len(ids)))
        lines.append(f"  {actor_id:<{width}}  {row}")

    if report.warnings:
        lines += ["", "Warnings:"]
        lines += [f"  - {w}" for w in report.warnings]

    return "\n".join(lines) + "\n"


def _write_matrix_csv(path: Path, matrix, row_labels, col_labels) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow([""] + list(col_labels))
        for label, row in zip(row_labels, matrix):
            writer.writerow([label] + [x for x in row])


def write_delimited(analysis: Analysis, outdir) -> list[Path]:
    """Write the ranking and every pipeline matrix as CSV files."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    project = analysis.project
    ids = project.actor_ids
    names = {a.id: a.name for a in project.actors}
    written = []

    path = outdir / "ranking.csv"
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["rank", "actor", "name", "tprpn", "tirpn", "trpn"])
        for rank, actor_id in enumerate(analysis.report.ranking, start=1):
            entry = analysis.report.risk_of(actor_id)
            writer.writerow(
                [rank, actor_id, names[actor_id], entry.tprpn, entry.tirpn, entry.trpn]
            )
    written.append(path)

    matrices = [
        ("midi.csv", _int_rows(analysis.influence.midi), ids),
        ("three_mao.csv", _float_rows(analysis.convergence.three_mao), project.mode_ids),
        ("three_caa.csv", _float_rows(analysis.convergence.three_caa), ids),
        ("three_daa.csv", _float_rows(analysis.convergence.three_daa), ids),
        ("mcdv.csv", _float_rows(analysis.convergence.mcdv), ids),
    ]
    for filename, matrix, cols in matrices:
        path = outdir / filename
        _write_matrix_csv(path, matrix, ids, cols)
        written.append(path)
    return written
