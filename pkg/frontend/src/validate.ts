// Client-side scale guards. These mirror the service's validation so bad
// input is rejected before any request is sent; the service remains the
// authority and re-checks everything.

import type { TreatmentAction } from "./types.js";

export const POSITION_SCALE = { min: -3, max: 3 } as const;
export const INFLUENCE_SCALE = { min: 0, max: 3 } as const;
export const SEVERITY_SCALE = { min: -3, max: 3 } as const;
export const DETECTION_SCALE = { min: 1, max: 5 } as const;
export const OCCURRENCE_SCALE = { min: 1, max: 5 } as const;

export interface Scale {
  min: number;
  max: number;
}

export function inScale(value: number, scale: Scale): boolean {
  return Number.isInteger(value) && value >= scale.min && value <= scale.max;
}

export function scaleError(label: string, value: number, scale: Scale): string | null {
  if (inScale(value, scale)) {
    return null;
  }
  return `${label} must be an integer between ${scale.min} and ${scale.max}, got ${value}`;
}

/** Validate one treatment action; returns error messages (empty = fine). */
export function validateAction(action: TreatmentAction): string[] {
  const problems: string[] = [];
  const push = (message: string | null) => {
    if (message !== null) {
      problems.push(message);
    }
  };
  switch (action.kind) {
    case "mitigate_failure":
      if (action.severity === undefined && action.detection === undefined &&
          action.occurrence === undefined) {
        problems.push("set at least one of severity, detection, occurrence");
      }
      if (action.severity !== undefined) push(scaleError("severity", action.severity, SEVERITY_SCALE));
      if (action.detection !== undefined) push(scaleError("detection", action.detection, DETECTION_SCALE));
      if (action.occurrence !== undefined) push(scaleError("occurrence", action.occurrence, OCCURRENCE_SCALE));
      break;
    case "adjust_position":
      push(scaleError("position", action.value, POSITION_SCALE));
      break;
    case "adjust_influence":
      push(scaleError("influence", action.value, INFLUENCE_SCALE));
      if (action.source === action.target && action.value !== 0) {
        problems.push("self-influence must stay zero");
      }
      break;
    case "eliminate_actor":
      break;
  }
  return problems;
}

/** Blocks eliminating the last actor; the count comes from the live report. */
export function eliminationBlocked(remainingActors: number): string | null {
  if (remainingActors <= 1) {
    return "cannot eliminate the last remaining actor";
  }
  return null;
}
