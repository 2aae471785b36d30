// Thin typed client for the analysis service. Errors keep the service's
// own wording so views can render them verbatim.

import type {
  ComparisonDoc,
  ProjectDoc,
  ProjectEnvelope,
  ReportDoc,
  ScenarioEnvelope,
  TreatmentAction,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly detail: unknown;

  constructor(status: number, detail: unknown) {
    super(typeof detail === "string" ? detail : JSON.stringify(detail));
    this.status = status;
    this.detail = detail;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(base = "http://127.0.0.1:8787", fetchFn: FetchLike = fetch) {
    this.base = base.replace(/\/$/, "");
    this.fetchFn = fetchFn;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.base}${path}`, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (response.status === 204) {
      return undefined as T;
    }
    const payload = await response.json().catch(() => null);
    if (!response.ok) {
      throw new ApiError(response.status, payload?.detail ?? payload ?? response.statusText);
    }
    return payload as T;
  }

  listProjects(): Promise<{ projects: { id: string; name: string; version: number }[] }> {
    return this.request("GET", "/projects");
  }

  createProject(doc: ProjectDoc): Promise<{ id: string; version: number }> {
    return this.request("POST", "/projects", doc);
  }

  getProject(id: string): Promise<ProjectEnvelope> {
    return this.request("GET", `/projects/${id}`);
  }

  updateProject(id: string, version: number, doc: ProjectDoc): Promise<{ id: string; version: number }> {
    return this.request("PUT", `/projects/${id}`, { version, project: doc });
  }

  deleteProject(id: string): Promise<void> {
    return this.request("DELETE", `/projects/${id}`);
  }

  getAnalysis(id: string): Promise<ReportDoc> {
    return this.request("GET", `/projects/${id}/analysis`);
  }

  createScenario(
    id: string,
    actions: TreatmentAction[],
    scenarioId?: string,
  ): Promise<ScenarioEnvelope> {
    const body: Record<string, unknown> = { actions };
    if (scenarioId !== undefined) {
      body.id = scenarioId;
    }
    return this.request("POST", `/projects/${id}/scenarios`, body);
  }

  listScenarios(id: string): Promise<{ scenarios: { id: string; actions: TreatmentAction[] }[] }> {
    return this.request("GET", `/projects/${id}/scenarios`);
  }

  getScenario(id: string, scenarioId: string): Promise<ScenarioEnvelope> {
    return this.request("GET", `/projects/${id}/scenarios/${scenarioId}`);
  }

  compareScenarios(id: string, first: string, second: string): Promise<ComparisonDoc> {
    return this.request("GET", `/projects/${id}/scenarios/${first}/compare/${second}`);
  }
}
