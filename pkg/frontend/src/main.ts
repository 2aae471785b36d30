// DOM wiring. Everything interesting happens in the store and the view
// builders; this file only moves events in and HTML out.

import { ApiClient } from "./api.js";
import { BASE_SCENARIO_ID, WorkbenchStore } from "./state.js";
import type { ProjectDoc, TreatmentAction } from "./types.js";
import {
  effectBreakdownView,
  errorBannerView,
  matrixEditorView,
  pendingActionsView,
  rankingView,
  scenarioCompareView,
  warningsView,
} from "./views.js";

const params = new URLSearchParams(window.location.search);
const api = new ApiClient(params.get("service") ?? "http://127.0.0.1:8787");
const store = new WorkbenchStore(api);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function render(): void {
  const report = store.activeReport;
  const state = store.state;

  el("banner").innerHTML = errorBannerView(
    state.inlineErrors, state.serviceError, state.versionConflict,
  );

  if (!state.project || !report) {
    el("workbench").hidden = true;
    return;
  }
  el("workbench").hidden = false;
  el("project-title").textContent =
    `${state.project.project.name} (v${state.project.version})`;

  const tabs = [`<button class="tab${state.activeScenarioId === null ? " active" : ""}"
                  data-scenario="">base</button>`];
  for (const id of state.scenarios.keys()) {
    if (id === BASE_SCENARIO_ID) {
      continue;
    }
    const active = state.activeScenarioId === id ? " active" : "";
    tabs.push(`<button class="tab${active}" data-scenario="${id}">${id}</button>`);
  }
  el("scenario-tabs").innerHTML = tabs.join("");

  el("ranking").innerHTML = rankingView(report, state.selection.actor);
  el("effects").innerHTML = state.selection.actor
    ? effectBreakdownView(report, state.selection.actor)
    : `<p class="empty">select an actor to see its outgoing effects</p>`;
  el("warnings").innerHTML = warningsView(report);
  el("editors").innerHTML = matrixEditorView(state.project.project);
  el("pending").innerHTML = pendingActionsView(state.pendingActions, state.dirty);
  el("compare").innerHTML = state.comparison
    ? scenarioCompareView(state.comparison)
    : `<p class="empty">apply a scenario or pick two to compare (two-way only)</p>`;

  const options = [BASE_SCENARIO_ID, ...state.scenarios.keys()]
    .filter((id, index, all) => all.indexOf(id) === index)
    .map((id) => `<option value="${id}">${id}</option>`)
    .join("");
  el<HTMLSelectElement>("compare-first").innerHTML = options;
  el<HTMLSelectElement>("compare-second").innerHTML = options;

  const actorOptions = report.project.actors
    .map((a) => `<option value="${a.id}">${a.name}</option>`)
    .join("");
  el<HTMLSelectElement>("treat-actor").innerHTML = actorOptions;
  el<HTMLSelectElement>("treat-mode").innerHTML = report.project.failure_modes
    .map((m) => `<option value="${m.id}">${m.label}</option>`)
    .join("");
}

store.subscribe(render);

async function refreshProjectList(): Promise<void> {
  try {
    const listing = await api.listProjects();
    el<HTMLSelectElement>("project-list").innerHTML = listing.projects
      .map((p) => `<option value="${p.id}">${p.name} (${p.id})</option>`)
      .join("");
  } catch {
    el<HTMLSelectElement>("project-list").innerHTML = "";
  }
}

el("open-project").addEventListener("click", async () => {
  const id = el<HTMLSelectElement>("project-list").value;
  if (id) {
    await store.openProject(id);
  }
});

el<HTMLInputElement>("project-file").addEventListener("change", async (event) => {
  const input = event.target as HTMLInputElement;
  const file = input.files?.[0];
  if (!file) {
    return;
  }
  const doc = JSON.parse(await file.text()) as ProjectDoc;
  await store.loadProjectDocument(doc);
  await refreshProjectList();
});

el("ranking").addEventListener("click", (event) => {
  const card = (event.target as HTMLElement).closest<HTMLElement>(".rank-card");
  if (card?.dataset.actor) {
    store.selectActor(card.dataset.actor);
  }
});

el("scenario-tabs").addEventListener("click", (event) => {
  const tab = (event.target as HTMLElement).closest<HTMLElement>(".tab");
  if (tab) {
    store.setActiveScenario(tab.dataset.scenario || null);
  }
});

// Constrained matrix cells: a change stages an action; out-of-scale input is
// rejected by the store before any request and the grid snaps back on render.
el("editors").addEventListener("change", (event) => {
  const input = event.target as HTMLInputElement;
  if (!input.classList.contains("cell")) {
    return;
  }
  const value = Number(input.value);
  let action: TreatmentAction;
  if (input.dataset.grid === "positions") {
    action = {
      kind: "adjust_position",
      actor: input.dataset.actor ?? "",
      mode: input.dataset.mode ?? "",
      value,
    };
  } else {
    action = {
      kind: "adjust_influence",
      source: input.dataset.source ?? "",
      target: input.dataset.target ?? "",
      value,
    };
  }
  if (!store.stageAction(action)) {
    render(); // snap the cell back to the service's value
  }
});

el("treat-mitigate").addEventListener("click", () => {
  const occurrence = Number(el<HTMLInputElement>("treat-occurrence").value);
  store.stageAction({
    kind: "mitigate_failure",
    actor: el<HTMLSelectElement>("treat-actor").value,
    mode: el<HTMLSelectElement>("treat-mode").value,
    occurrence,
  });
});

el("treat-eliminate").addEventListener("click", () => {
  store.stageAction({
    kind: "eliminate_actor",
    actor: el<HTMLSelectElement>("treat-actor").value,
  });
});

el("apply-pending").addEventListener("click", async () => {
  const name = el<HTMLInputElement>("scenario-name").value.trim();
  await store.applyPending(name || `s${store.state.scenarios.size + 1}`);
});

el("discard-pending").addEventListener("click", () => store.discardPending());

el("run-compare").addEventListener("click", async () => {
  await store.compare(
    el<HTMLSelectElement>("compare-first").value,
    el<HTMLSelectElement>("compare-second").value,
  );
});

el("reload").addEventListener("click", async () => {
  await store.refresh();
});

void refreshProjectList();
