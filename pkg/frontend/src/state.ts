// Workbench state: one active project, its base analysis, open scenarios,
// the current selection and any staged-but-unapplied treatment actions.
// All numbers shown anywhere come from service payloads stored here; the
// store only moves them around.

import { ApiClient, ApiError } from "./api.js";
import type {
  ComparisonDoc,
  ProjectDoc,
  ProjectEnvelope,
  ReportDoc,
  ScenarioEnvelope,
  TreatmentAction,
} from "./types.js";
import { eliminationBlocked, validateAction } from "./validate.js";

export const BASE_SCENARIO_ID = "base";

export interface WorkbenchState {
  project: ProjectEnvelope | null;
  baseAnalysis: ReportDoc | null;
  scenarios: Map<string, ScenarioEnvelope>;
  activeScenarioId: string | null;
  selection: { actor: string | null };
  pendingActions: TreatmentAction[];
  dirty: boolean;
  inlineErrors: string[];
  serviceError: string | null;
  versionConflict: boolean;
  comparison: ComparisonDoc | null;
}

type Listener = (state: WorkbenchState) => void;

export class WorkbenchStore {
  readonly api: ApiClient;
  readonly state: WorkbenchState = {
    project: null,
    baseAnalysis: null,
    scenarios: new Map(),
    activeScenarioId: null,
    selection: { actor: null },
    pendingActions: [],
    dirty: false,
    inlineErrors: [],
    serviceError: null,
    versionConflict: false,
    comparison: null,
  };
  private listeners: Listener[] = [];

  constructor(api: ApiClient) {
    this.api = api;
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  private fail(error: unknown): void {
    if (error instanceof ApiError) {
      this.state.versionConflict = error.status === 409;
      this.state.serviceError = error.message;
    } else {
      this.state.serviceError = String(error);
    }
    this.emit();
  }

  /** Report currently on screen: active scenario's, else the base analysis. */
  get activeReport(): ReportDoc | null {
    if (this.state.activeScenarioId !== null) {
      const scenario = this.state.scenarios.get(this.state.activeScenarioId);
      if (scenario) {
        return scenario.report;
      }
    }
    return this.state.baseAnalysis;
  }

  async loadProjectDocument(doc: ProjectDoc): Promise<void> {
    try {
      const created = await this.api.createProject(doc);
      await this.openProject(created.id);
    } catch (error) {
      this.fail(error);
    }
  }

  async openProject(id: string): Promise<void> {
    try {
      this.state.project = await this.api.getProject(id);
      this.state.baseAnalysis = await this.api.getAnalysis(id);
      this.state.scenarios = new Map();
      this.state.activeScenarioId = null;
      this.state.selection = { actor: null };
      this.state.pendingActions = [];
      this.state.dirty = false;
      this.state.inlineErrors = [];
      this.state.serviceError = null;
      this.state.versionConflict = false;
      this.state.comparison = null;
      this.emit();
    } catch (error) {
      this.fail(error);
    }
  }

  async refresh(): Promise<void> {
    if (!this.state.project) {
      return;
    }
    const id = this.state.project.id;
    try {
      this.state.project = await this.api.getProject(id);
      this.state.baseAnalysis = await this.api.getAnalysis(id);
      for (const scenarioId of this.state.scenarios.keys()) {
        this.state.scenarios.set(scenarioId, await this.api.getScenario(id, scenarioId));
      }
      this.state.versionConflict = false;
      this.state.serviceError = null;
      this.emit();
    } catch (error) {
      this.fail(error);
    }
  }

  selectActor(actorId: string | null): void {
    this.state.selection = { actor: actorId };
    this.emit();
  }

  setActiveScenario(scenarioId: string | null): void {
    this.state.activeScenarioId = scenarioId;
    this.emit();
  }

  /**
   * Stage one treatment action. Scale problems and last-actor elimination
   * are caught here, before anything reaches the service; a rejected action
   * is reported through inlineErrors and not staged.
   */
  stageAction(action: TreatmentAction): boolean {
    const problems = validateAction(action);
    if (action.kind === "eliminate_actor") {
      const report = this.activeReport;
      const staged = this.state.pendingActions.filter(
        (a) => a.kind === "eliminate_actor",
      ).length;
      const remaining = (report ? report.risk.ranking.length : 0) - staged;
      const blocked = eliminationBlocked(remaining);
      if (blocked !== null) {
        problems.push(blocked);
      }
    }
    if (problems.length > 0) {
      this.state.inlineErrors = problems;
      this.emit();
      return false;
    }
    this.state.pendingActions.push(action);
    this.state.dirty = true;
    this.state.inlineErrors = [];
    this.emit();
    return true;
  }

  discardPending(): void {
    this.state.pendingActions = [];
    this.state.dirty = false;
    this.state.inlineErrors = [];
    this.emit();
  }

  /** Make sure the empty "base" scenario exists so deltas can be compared. */
  private async ensureBaseScenario(id: string): Promise<void> {
    if (this.state.scenarios.has(BASE_SCENARIO_ID)) {
      return;
    }
    try {
      const scenario = await this.api.createScenario(id, [], BASE_SCENARIO_ID);
      this.state.scenarios.set(BASE_SCENARIO_ID, scenario);
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        // Already created earlier (possibly by another session): fetch it.
        this.state.scenarios.set(
          BASE_SCENARIO_ID,
          await this.api.getScenario(id, BASE_SCENARIO_ID),
        );
        return;
      }
      throw error;
    }
  }

  /**
   * Post the staged actions as a new scenario, refresh its report from the
   * service, and pull the per-actor deltas against the base scenario.
   */
  async applyPending(scenarioId: string): Promise<ScenarioEnvelope | null> {
    if (!this.state.project || this.state.pendingActions.length === 0) {
      return null;
    }
    const id = this.state.project.id;
    try {
      await this.ensureBaseScenario(id);
      const scenario = await this.api.createScenario(
        id,
        this.state.pendingActions,
        scenarioId,
      );
      this.state.scenarios.set(scenario.id, scenario);
      this.state.activeScenarioId = scenario.id;
      this.state.pendingActions = [];
      this.state.dirty = false;
      this.state.project = await this.api.getProject(id);
      this.state.comparison = await this.api.compareScenarios(
        id,
        BASE_SCENARIO_ID,
        scenario.id,
      );
      this.state.serviceError = null;
      this.emit();
      return scenario;
    } catch (error) {
      this.fail(error);
      return null;
    }
  }

  /** Two-way comparison only; anything else is out of scope by design. */
  async compare(first: string, second: string): Promise<void> {
    if (!this.state.project) {
      return;
    }
    try {
      this.state.comparison = await this.api.compareScenarios(
        this.state.project.id,
        first,
        second,
      );
      this.state.serviceError = null;
      this.emit();
    } catch (error) {
      this.fail(error);
    }
  }
}
