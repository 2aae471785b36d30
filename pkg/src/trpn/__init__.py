"""Failure-risk ranking for point-to-point project teams.

Combines per-actor FMEA risk priority numbers with an actor-influence
analysis: stances toward each failure mode are weighted by network power,
turned into pairwise effect weights, and used to propagate each actor's
personal risk onto everyone it sways. The result is a ranked treatment
priority list that a project manager can iterate on with what-if scenarios
(mitigate a failure, edit a matrix cell, eliminate an actor, re-rank).
"""

from .aggregate import (
    ActionKind,
    ActorRisk,
    Analysis,
    RiskReport,
    Scenario,
    ScenarioError,
    TreatmentAction,
    analyze_project,
    apply_scenario,
    build_scenario,
    compare_scenarios,
    irpn,
    interdependent_risk,
    trpn_report,
)
from .convergence import (
    ConvergenceProfile,
    build_convergence_profile,
    convergence_divergence,
    mcdv_matrix,
    scale_positions,
)
from .fmea import PersonalRiskBreakdown, personal_risk, prpn
from .influence import (
    DegenerateNetworkError,
    InfluenceProfile,
    build_influence_profile,
    compute_midi,
    net_dependence,
    net_influence,
    normalized_power,
    power_coefficient,
)
from .model import (
    Actor,
    DEFAULT_FAILURE_MODES,
    DirectInfluenceMatrix,
    EffectClass,
    FailureInstance,
    FailureMode,
    InvalidProjectError,
    Issue,
    PositionMatrix,
    ProjectDefinition,
    ValidationResult,
    severity_from_effect,
    validate_project,
)
from .projectfile import (
    ProjectFileError,
    load_project,
    load_project_with_warnings,
    project_from_dict,
    project_to_dict,
    save_project,
)
from .report import build_report_document, render_human, render_machine

__version__ = "0.1.0"

__all__ = [
    "ActionKind",
    "Actor",
    "ActorRisk",
    "Analysis",
    "ConvergenceProfile",
    "DEFAULT_FAILURE_MODES",
    "DegenerateNetworkError",
    "DirectInfluenceMatrix",
    "EffectClass",
    "FailureInstance",
    "FailureMode",
    "InfluenceProfile",
    "InvalidProjectError",
    "Issue",
    "PersonalRiskBreakdown",
    "PositionMatrix",
    "ProjectDefinition",
    "ProjectFileError",
    "RiskReport",
    "Scenario",
    "ScenarioError",
    "TreatmentAction",
    "ValidationResult",
    "analyze_project",
    "apply_scenario",
    "build_convergence_profile",
    "build_influence_profile",
    "build_report_document",
    "build_scenario",
    "compare_scenarios",
    "compute_midi",
    "convergence_divergence",
    "interdependent_risk",
    "irpn",
    "load_project",
    "load_project_with_warnings",
    "mcdv_matrix",
    "net_dependence",
    "net_influence",
    "normalized_power",
    "personal_risk",
    "power_coefficient",
    "project_from_dict",
    "project_to_dict",
    "prpn",
    "render_human",
    "render_machine",
    "save_project",
    "scale_positions",
    "severity_from_effect",
    "trpn_report",
    "validate_project",
]
