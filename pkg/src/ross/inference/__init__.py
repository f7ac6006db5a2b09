"""Forward-directed inference: binding, rule application, nested references and ranking."""

from ross.inference.engine import (
    APPLIED,
    ASSUMED,
    EVIDENCE,
    MATCH_FAILURE,
    SKIPPED,
    Application,
    InferenceReport,
    NestedOutcome,
    RuleOutcome,
    apply_behavior_class,
    apply_nested_reference,
    bind_binder_source,
    determine_next_timeline_time_point,
    rank_rule_candidates,
    run_candidate,
    run_forward_scenario,
    sandbox,
)
from ross.inference.report import render_report
from ross.inference.scenario import Query, Scenario, Seed, load_scenario, parse_scenario

__all__ = [
    "APPLIED",
    "ASSUMED",
    "EVIDENCE",
    "MATCH_FAILURE",
    "SKIPPED",
    "Application",
    "InferenceReport",
    "NestedOutcome",
    "Query",
    "RuleOutcome",
    "Scenario",
    "Seed",
    "apply_behavior_class",
    "apply_nested_reference",
    "bind_binder_source",
    "determine_next_timeline_time_point",
    "load_scenario",
    "parse_scenario",
    "rank_rule_candidates",
    "render_report",
    "run_candidate",
    "run_forward_scenario",
    "sandbox",
]
