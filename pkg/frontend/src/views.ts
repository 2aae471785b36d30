// Pure view builders: service payloads in, HTML strings out. No DOM access
// and no risk arithmetic here, so every view is unit-testable in node.

import type {
  ComparisonDoc,
  ProjectDoc,
  ReportDoc,
  TreatmentAction,
} from "./types.js";
import { INFLUENCE_SCALE, POSITION_SCALE } from "./validate.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function actorName(report: ReportDoc, actorId: string): string {
  const actor = report.project.actors.find((a) => a.id === actorId);
  return actor ? actor.name : actorId;
}

/** Ranked priority list with a personal/interdependent split bar per actor. */
export function rankingView(report: ReportDoc, selectedActor: string | null): string {
  const lines = report.risk.per_actor;
  const byId = new Map(lines.map((line) => [line.actor, line]));
  const largest = Math.max(...lines.map((line) => Math.abs(line.trpn)), 1e-9);

  const cards = report.risk.ranking.map((actorId, index) => {
    const line = byId.get(actorId);
    if (!line) {
      return "";
    }
    const personalWidth = (Math.abs(line.tprpn) / largest) * 100;
    const interWidth = (Math.abs(line.tirpn) / largest) * 100;
    const interClass = line.tirpn >= 0 ? "bar-inter-up" : "bar-inter-down";
    const selected = actorId === selectedActor ? " selected" : "";
    return `
      <li class="rank-card${selected}" data-actor="${escapeHtml(actorId)}">
        <span class="rank-number">${index + 1}</span>
        <span class="rank-actor">${escapeHtml(actorName(report, actorId))}</span>
        <span class="rank-trpn">${line.trpn.toFixed(1)}</span>
        <span class="rank-split">TPRPN ${line.tprpn} / TIRPN ${line.tirpn >= 0 ? "+" : ""}${line.tirpn.toFixed(1)}</span>
        <span class="bar">
          <span class="bar-personal" style="width:${personalWidth.toFixed(1)}%"></span>
          <span class="${interClass}" style="width:${interWidth.toFixed(1)}%"></span>
        </span>
      </li>`;
  });
  return `<ol class="ranking">${cards.join("")}</ol>`;
}

/**
 * Outgoing-effect star for one actor: arrows to every actor its weight row
 * actually touches (nonzero entries only), labelled with the service's
 * interdependent contributions.
 */
export function effectBreakdownView(report: ReportDoc, actorId: string): string {
  const line = report.risk.per_actor.find((entry) => entry.actor === actorId);
  if (!line) {
    return `<p class="empty">unknown actor ${escapeHtml(actorId)}</p>`;
  }
  const actorIndex = report.project.actors.findIndex((a) => a.id === actorId);
  const weights = report.convergence.mcdv[actorIndex] ?? [];
  const targets = report.project.actors
    .map((actor, index) => ({ actor, weight: weights[index] ?? 0 }))
    .filter(({ actor, weight }) => actor.id !== actorId && weight !== 0);

  const size = 380;
  const center = size / 2;
  const radius = size / 2 - 50;
  const irpnByTarget = new Map(line.effects.map((e) => [e.target, e.irpn]));
  const largest = Math.max(...targets.map(({ weight }) => Math.abs(weight)), 1e-9);

  const parts = targets.map(({ actor, weight }, index) => {
    const angle = (2 * Math.PI * index) / targets.length - Math.PI / 2;
    const x = center + radius * Math.cos(angle);
    const y = center + radius * Math.sin(angle);
    const stroke = weight > 0 ? "#c0392b" : "#27ae60";
    const strokeWidth = 1 + 3 * (Math.abs(weight) / largest);
    const irpn = irpnByTarget.get(actor.id);
    const label = irpn === undefined
      ? `w ${weight.toFixed(2)}`
      : `${irpn >= 0 ? "+" : ""}${irpn.toFixed(1)}`;
    const labelX = center + (radius / 2) * Math.cos(angle);
    const labelY = center + (radius / 2) * Math.sin(angle);
    return `
      <line x1="${center}" y1="${center}" x2="${x.toFixed(1)}" y2="${y.toFixed(1)}"
            stroke="${stroke}" stroke-width="${strokeWidth.toFixed(2)}"
            marker-end="url(#arrow)" />
      <text x="${labelX.toFixed(1)}" y="${labelY.toFixed(1)}" class="edge-label">${label}</text>
      <circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="18" class="node" />
      <text x="${x.toFixed(1)}" y="${(y + 4).toFixed(1)}" class="node-label">${escapeHtml(actor.id)}</text>`;
  });

  const emptyNote = targets.length === 0
    ? `<text x="${center}" y="${size - 12}" class="edge-label">no outgoing effects</text>`
    : "";
  return `
    <div class="effect-panel" data-actor="${escapeHtml(actorId)}">
      <h3>${escapeHtml(actorName(report, actorId))} &mdash; TPRPN ${line.tprpn},
        TIRPN ${line.tirpn >= 0 ? "+" : ""}${line.tirpn.toFixed(1)},
        TRPN ${line.trpn.toFixed(1)}</h3>
      <svg viewBox="0 0 ${size} ${size}" class="effect-star" role="img">
        <defs>
          <marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5"
                  markerWidth="7" markerHeight="7" orient="auto-start-reverse">
            <path d="M 0 0 L 10 5 L 0 10 z" fill="#555" />
          </marker>
        </defs>
        ${parts.join("")}
        <circle cx="${center}" cy="${center}" r="24" class="node node-center" />
        <text x="${center}" y="${center + 4}" class="node-label">${escapeHtml(actorId)}</text>
        ${emptyNote}
      </svg>
    </div>`;
}

/** Delta table between two scenarios; eliminated actors are struck through. */
export function scenarioCompareView(comparison: ComparisonDoc): string {
  const rows = comparison.deltas.map((delta) => {
    if (delta.eliminated) {
      const side = delta.in_first ? "second" : "first";
      return `
        <tr class="eliminated"><td><s>${escapeHtml(delta.actor)}</s></td>
        <td colspan="3">eliminated in ${side} scenario</td></tr>`;
    }
    const rankDelta = delta.rank_delta ?? 0;
    const arrow = rankDelta < 0 ? "&#8593;" : rankDelta > 0 ? "&#8595;" : "&#8594;";
    const trpnDelta = delta.trpn_delta ?? 0;
    return `
      <tr><td>${escapeHtml(delta.actor)}</td>
      <td>${(delta.trpn_first ?? 0).toFixed(1)} &rarr; ${(delta.trpn_second ?? 0).toFixed(1)}</td>
      <td class="${trpnDelta > 0 ? "delta-up" : trpnDelta < 0 ? "delta-down" : ""}">
        ${trpnDelta >= 0 ? "+" : ""}${trpnDelta.toFixed(1)}</td>
      <td>${arrow} ${delta.rank_first ?? "-"} to ${delta.rank_second ?? "-"}</td></tr>`;
  });
  return `
    <table class="compare-table">
      <thead><tr>
        <th>actor</th><th>TRPN ${escapeHtml(comparison.first)} &rarr; ${escapeHtml(comparison.second)}</th>
        <th>&Delta;TRPN</th><th>rank</th>
      </tr></thead>
      <tbody>${rows.join("")}</tbody>
    </table>`;
}

/** Stance and influence grids with scale-constrained numeric inputs. */
export function matrixEditorView(doc: ProjectDoc): string {
  const positionHeader = doc.failure_modes
    .map((mode) => `<th title="${escapeHtml(mode.label)}">${escapeHtml(mode.id)}</th>`)
    .join("");
  const positionRows = doc.actors.map((actor, a) => {
    const cells = doc.failure_modes.map((mode, m) => `
      <td><input type="number" class="cell" data-grid="positions"
           data-actor="${escapeHtml(actor.id)}" data-mode="${escapeHtml(mode.id)}"
           min="${POSITION_SCALE.min}" max="${POSITION_SCALE.max}" step="1"
           value="${doc.positions.rows[a][m]}"></td>`);
    return `<tr><th>${escapeHtml(actor.id)}</th>${cells.join("")}</tr>`;
  });

  const influenceHeader = doc.actors
    .map((actor) => `<th>${escapeHtml(actor.id)}</th>`)
    .join("");
  const influenceRows = doc.actors.map((source, a) => {
    const cells = doc.actors.map((target, b) => `
      <td><input type="number" class="cell" data-grid="influence"
           data-source="${escapeHtml(source.id)}" data-target="${escapeHtml(target.id)}"
           min="${INFLUENCE_SCALE.min}" max="${INFLUENCE_SCALE.max}" step="1"
           value="${doc.influence.rows[a][b]}" ${a === b ? "disabled" : ""}></td>`);
    return `<tr><th>${escapeHtml(source.id)}</th>${cells.join("")}</tr>`;
  });

  return `
    <div class="editors">
      <div>
        <h3>Stances (-3..3)</h3>
        <table class="grid"><thead><tr><th></th>${positionHeader}</tr></thead>
        <tbody>${positionRows.join("")}</tbody></table>
      </div>
      <div>
        <h3>Direct influence (0..3)</h3>
        <table class="grid"><thead><tr><th></th>${influenceHeader}</tr></thead>
        <tbody>${influenceRows.join("")}</tbody></table>
      </div>
    </div>`;
}

export function pendingActionsView(actions: TreatmentAction[], dirty: boolean): string {
  if (actions.length === 0) {
    return `<p class="empty">no staged actions</p>`;
  }
  const items = actions.map((action) => {
    switch (action.kind) {
      case "mitigate_failure": {
        const ranks = (["severity", "detection", "occurrence"] as const)
          .filter((k) => action[k] !== undefined)
          .map((k) => `${k}=${action[k]}`)
          .join(", ");
        return `<li>mitigate ${escapeHtml(action.actor)}/${escapeHtml(action.mode)}: ${ranks}</li>`;
      }
      case "adjust_position":
        return `<li>stance ${escapeHtml(action.actor)}/${escapeHtml(action.mode)} = ${action.value}</li>`;
      case "adjust_influence":
        return `<li>influence ${escapeHtml(action.source)} &rarr; ${escapeHtml(action.target)} = ${action.value}</li>`;
      case "eliminate_actor":
        return `<li>eliminate ${escapeHtml(action.actor)}</li>`;
    }
  });
  const badge = dirty ? `<span class="dirty-badge">unsaved edits</span>` : "";
  return `${badge}<ul class="pending">${items.join("")}</ul>`;
}

export function errorBannerView(inline: string[], service: string | null,
                                conflict: boolean): string {
  const parts: string[] = [];
  if (conflict) {
    parts.push(
      `<div class="banner conflict">Someone else changed this project
       (version conflict). Reload to pick up the latest state.</div>`,
    );
  }
  for (const message of inline) {
    parts.push(`<div class="banner inline-error">${escapeHtml(message)}</div>`);
  }
  if (service !== null && !conflict) {
    parts.push(`<div class="banner service-error">${escapeHtml(service)}</div>`);
  }
  return parts.join("");
}

export function warningsView(report: ReportDoc): string {
  if (report.risk.warnings.length === 0) {
    return "";
  }
  const items = report.risk.warnings
    .map((w) => `<li>${escapeHtml(w.where)}: ${escapeHtml(w.message)}</li>`)
    .join("");
  return `<ul class="warnings">${items}</ul>`;
}
