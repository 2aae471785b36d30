// Wire types for the analysis service. The workbench never computes risk
// itself; every number it shows comes out of one of these payloads.

export interface ActorRef {
  id: string;
  name: string;
}

export interface FailureModeRef {
  id: string;
  label: string;
}

export interface ProjectDoc {
  format_version: number;
  name: string;
  created?: string;
  actors: ActorRef[];
  failure_modes: { id: string; label: string; effect_description?: string }[];
  failures: {
    actor: string;
    mode: string;
    severity: number;
    detection: number;
    occurrence: number;
  }[];
  positions: { rows: number[][] };
  influence: { rows: number[][] };
}

export interface ProjectEnvelope {
  id: string;
  version: number;
  project: ProjectDoc;
}

export interface FailureLine {
  mode: string;
  severity: number;
  detection: number;
  occurrence: number;
  prpn: number;
}

export interface EffectLine {
  target: string;
  irpn: number;
}

export interface ActorRiskLine {
  actor: string;
  tprpn: number;
  tirpn: number;
  trpn: number;
  failures: FailureLine[];
  effects: EffectLine[];
}

export interface ReportDoc {
  format_version: number;
  project: {
    name: string;
    created: string;
    actors: ActorRef[];
    failure_modes: FailureModeRef[];
  };
  power: {
    midi: number[][];
    net_influence: number[];
    net_dependence: number[];
    power_raw: number[];
    power_normalized: number[];
  };
  convergence: {
    three_mao: number[][];
    three_caa: number[][];
    three_daa: number[][];
    mcdv: number[][];
  };
  risk: {
    per_actor: ActorRiskLine[];
    ranking: string[];
    warnings: { code: string; where: string; message: string }[];
  };
}

export type TreatmentAction =
  | { kind: "mitigate_failure"; actor: string; mode: string; severity?: number; detection?: number; occurrence?: number }
  | { kind: "adjust_position"; actor: string; mode: string; value: number }
  | { kind: "adjust_influence"; source: string; target: string; value: number }
  | { kind: "eliminate_actor"; actor: string };

export interface ScenarioEnvelope {
  id: string;
  version?: number;
  actions?: TreatmentAction[];
  report: ReportDoc;
}

export interface ActorDelta {
  actor: string;
  in_first: boolean;
  in_second: boolean;
  trpn_first: number | null;
  trpn_second: number | null;
  trpn_delta: number | null;
  rank_first: number | null;
  rank_second: number | null;
  rank_delta: number | null;
  eliminated: boolean;
}

export interface ComparisonDoc {
  first: string;
  second: string;
  deltas: ActorDelta[];
}
