"""Forward-directed inference over a sandbox context."""

from __future__ import annotations

import copy
from dataclasses import dataclass, field

from ross.errors import (
    DepthLimitExceeded,
    EndOfTimeline,
    ExprError,
    FactError,
    IncompatibleSeed,
    InferenceError,
    LookupFailure,
    MatchFailure,
    OutOfRange,
    TimelineError,
)
from ross.facts import (
    ANTECEDENT,
    CONSEQUENT,
    Context,
    GlobalAssumptions,
    InstanceModel,
    Match,
    ObjectInstance,
    TranscriptHeader,
    apply_populated_object_class,
    attach,
    clone_structural_parent,
    conflicts,
    create_context,
    set_state_attribute,
)
from ross.infopedia import ACTOR, BehaviorClass, Infopedia, PopulatedNode, ReferenceNode, find_behavior_classes
from ross.infopedia.compiler import compile_files
from ross.inference.scenario import Scenario, Seed
from ross.values import Environment, evaluate, successor

APPLIED, MATCH_FAILURE, SKIPPED = "applied", "match-failure", "skipped"
EVIDENCE, ASSUMED, NESTED_APPLIED = "evidence", "assumed", "applied"


@dataclass
class NestedOutcome:
    behavior: str
    mode: str
    probability: float | None
    actor: str | None = None


@dataclass
class Application:
    """What one behavior class application produced."""

    behavior: str
    major_time: object
    minor_time: object
    minor: ObjectInstance
    env: Environment
    antecedent: dict[str, str]
    consequent: dict[str, str]
    created: list[str]
    evidence: list[NestedOutcome]
    pending: list[ReferenceNode]
    probability: float


@dataclass
class RuleOutcome:
    behavior: str
    order: int
    status: str
    reason: str = ""
    probability: float = 1.0
    time_points: tuple = ()
    nested: list[NestedOutcome] = field(default_factory=list)
    applications: list[Application] = field(default_factory=list, repr=False)
    model: InstanceModel | None = field(default=None, repr=False, compare=False)

    @property
    def applied(self) -> bool:
        return self.status == APPLIED


@dataclass
class InferenceReport:
    verb: str
    outcomes: list[RuleOutcome]
    model: InstanceModel

    @property
    def selected(self) -> list[RuleOutcome]:
        return [o for o in self.outcomes if o.applied]

    @property
    def ranking(self) -> list[str]:
        return [o.behavior for o in self.outcomes]


def _prob(p: float | None) -> float:
    return 1.0 if p is None else p


def determine_next_timeline_time_point(info: Infopedia, sp_class: str, current):
    _, temporal = info.temporal_system(sp_class)
    try:
        return successor(current, temporal.value_set, 1)
    except OutOfRange:
        raise EndOfTimeline(f"{current!r} is the last point of timeline {temporal.value_set.name}") from None


def binder_source(behavior: BehaviorClass) -> PopulatedNode:
    for n in behavior.populated("prior"):
        if n.binder_source:
            return n
    raise InferenceError(f"behavior class {behavior.name} has no binder source")


def _temporal(node: PopulatedNode, t) -> bool:
    ds = node.dimension_system
    return ds is not None and any(x is t for x in ds.temporal)


def bind_binder_source(info: Infopedia, behavior: BehaviorClass, seed: ObjectInstance,
                       context: Context, time) -> Environment:
    """Bind the binder source's declared variables from the seed instance and the current time."""
    node = binder_source(behavior)
    if not info.compatible(seed.cls, node.cls):
        raise IncompatibleSeed(f"{seed.cls} cannot fill {behavior.name}.{node.name} ({node.cls})")
    env = Environment()
    for s in node.locational:
        if s.kind != "var":
            continue
        if _temporal(node, s.type):
            env.bind(s.value, time)
        else:
            stored = seed.placement.get(s.type.qualified)
            env.bind(s.value, stored if stored is not None else s.type.value_set.first())
    for s in node.qualitative:
        if s.type.is_identity and s.kind == "var":
            env.bind(s.value, seed.identifier)
    return env


def _actor_nodes(b: BehaviorClass, part: str) -> list[PopulatedNode]:
    return [n for n in b.populated(part) if n.role == ACTOR]


def _check_evidence(info: Infopedia, ref: ReferenceNode, env: Environment,
                    major: ObjectInstance) -> NestedOutcome:
    """An antecedent nested reference, checked against the facts instead of applied.

    The referenced rule's consequent actor states are compared with the
    parameter actor: a contradiction rejects the rule, agreement is evidence
    and absence leaves the reference assumed at its stated probability.
    """
    target = info.behavior(ref.behavior)
    ident = None
    if ref.actor is not None and ref.actor.expr is not None:
        ident = evaluate(ref.actor.expr, env)
    inst = None if ident is None else major.find(ident)
    if inst is None:
        return NestedOutcome(ref.behavior, ASSUMED, ref.probability, ident)
    found, total = 0, 0
    for node in _actor_nodes(target, "post"):
        for s in node.qualitative:
            if s.type.is_identity or s.kind != "val":
                continue
            total += 1
            t = info.attribute_type_for(inst.cls, s.type.qualified)
            have = inst.attributes.get(t.qualified)
            if conflicts(have, s.value, target.negation):
                raise MatchFailure(
                    f"nested {ref.behavior}: {inst.identifier} has {t.qualified} = {have.value}, "
                    f"the reference needs {s.value}")
            if have is not None:
                found += 1
    mode = EVIDENCE if total and found == total else ASSUMED
    return NestedOutcome(ref.behavior, mode, ref.probability, inst.identifier)


def apply_behavior_class(info: Infopedia, context: Context, behavior: BehaviorClass, env: Environment,
                         source: str, *, hints: dict[str, str | None] | None = None,
                         time=None, probability: float | None = None) -> Application:
    """Apply one behavior class at ``time`` (default: the context's last time point).

    Antecedent nodes are matched against the major structural parent, which is
    then cloned to the next time point; consequent nodes are applied to the
    clone.  On a match failure the context is left as it was.
    """
    time = context.last_time if time is None else time
    major = context.at(time)
    backup = (major.clone(), dict(context.counters), context.last_time)
    nxt = determine_next_timeline_time_point(info, context.sp_class, time)
    if nxt in context.points:
        raise TimelineError(f"time point {nxt!r} is already occupied")
    try:
        ante = Match()
        created: list[str] = []
        refs: list[ReferenceNode] = []
        for node in behavior.prior:
            if isinstance(node, ReferenceNode):
                refs.append(node)
                continue
            inst, made = apply_populated_object_class(
                info, node, list(major.walk()), env, ANTECEDENT, match=ante, hints=hints,
                forced=source if node.binder_source else None, parent=major, context=context,
                time_set=context.time_set)
            if made:
                created.append(inst.identifier)
        evidence = [_check_evidence(info, r, env, major) for r in refs]
        minor = clone_structural_parent(info, context, time, nxt)
    except (FactError, ExprError, LookupFailure):
        context.points[time], context.counters, context.last_time = backup[0], backup[1], backup[2]
        raise
    try:
        post = Match()
        pending: list[ReferenceNode] = []
        p = 1.0
        for r in evidence:
            p *= _prob(r.probability)
        for node in behavior.post:
            if isinstance(node, ReferenceNode):
                pending.append(node)
                continue
            written = node.probability if node.probability is not None else probability
            inst, made = apply_populated_object_class(
                info, node, list(minor.walk()), env, CONSEQUENT, match=post, hints=hints,
                prefer=ante.roles.get(node.role), parent=minor, context=context,
                time_set=context.time_set, negated=behavior.negation, probability=written)
            p *= _prob(node.probability)
            if made:
                created.append(inst.identifier)
            for s in node.locational:
                if _temporal(node, s.type):
                    at = inst.placement[s.type.qualified]
                    if context.time_set.index(at) <= context.time_set.index(time):
                        raise TimelineError(f"{behavior.name}.{node.name} writes at {at}, not after {time}")
    except (FactError, ExprError, LookupFailure):
        del context.points[nxt]
        context.points[time], context.counters, context.last_time = backup[0], backup[1], backup[2]
        raise
    return Application(behavior.name, time, nxt, minor, env, dict(ante.roles), dict(post.roles),
                       created, evidence, pending, p)


def apply_nested_reference(info: Infopedia, context: Context, reference: ReferenceNode, env: Environment,
                           *, depth: int = 1, max_depth: int = 4) -> list[Application]:
    """Apply a consequent nested reference at the context's latest time point.

    The parameter actor is the instance whose identifier the reference's
    expression yields; nested references of the applied rule follow
    recursively.  Returns every application made, outermost first.
    """
    if depth > max_depth:
        raise DepthLimitExceeded(f"nested reference {reference.behavior} exceeds depth {max_depth}")
    behavior = info.behavior(reference.behavior)
    time = context.last_time
    sp = context.at(time)
    if reference.actor is None or reference.actor.expr is None:
        raise InferenceError(f"nested reference {reference.behavior} names no parameter actor")
    ident = evaluate(reference.actor.expr, env)
    actor = sp.find(ident)
    if actor is None:
        raise MatchFailure(f"nested reference {reference.behavior}: no instance {ident} at {time}")
    if not info.compatible(actor.cls, reference.actor.cls):
        raise IncompatibleSeed(f"{actor.cls} is not a {reference.actor.cls}")
    nested_env = bind_binder_source(info, behavior, actor, context, time)
    app = apply_behavior_class(info, context, behavior, nested_env, actor.identifier,
                               time=time, probability=reference.probability)
    app.probability *= _prob(reference.probability)
    out = [app]
    for ref in app.pending:
        out += apply_nested_reference(info, context, ref, nested_env, depth=depth + 1, max_depth=max_depth)
    return out


def rank_rule_candidates(outcomes: list[RuleOutcome]) -> list[RuleOutcome]:
    """Applied first by descending probability, then declaration order; the rest after."""
    return sorted(outcomes, key=lambda o: (not o.applied, -o.probability if o.applied else 0.0, o.order))


def _typed(raw: str, vs):
    if vs.is_integer:
        try:
            return int(raw)
        except ValueError:
            return raw
    if vs.is_float:
        try:
            return float(raw)
        except ValueError:
            return raw
    return raw


def sandbox(info: Infopedia, scenario: Scenario) -> tuple[InstanceModel, Context, dict[str, str | None], str]:
    """A fresh working model with every seed attached at the first time point.

    Returns the model, its context, the seed role hints and the actor seed's identifier.
    """
    lead = scenario.actor_seed
    bases = info.view(lead.cls).sp_bases
    if not bases:
        raise IncompatibleSeed(f"{lead.cls} names no structural parent class")
    ctx = create_context(info, scenario.context_id, bases[0], mood=scenario.mood, leading_class=lead.cls)
    sp = ctx.at(ctx.last_time)
    hints: dict[str, str | None] = {}
    lead_id = None
    for seed in scenario.seeds:
        inst = _attach_seed(info, ctx, sp, seed)
        hints[inst.identifier] = seed.role
        if seed is lead:
            lead_id = inst.identifier
    model = InstanceModel(TranscriptHeader(scenario.text_source, scenario.document_file),
                          GlobalAssumptions(), [ctx])
    return model, ctx, hints, lead_id


def _attach_seed(info: Infopedia, ctx: Context, sp: ObjectInstance, seed: Seed) -> ObjectInstance:
    ident = seed.identifier or ctx.next_identifier(seed.cls)
    ctx.note_identifier(seed.cls, ident)
    inst = attach(info, sp, seed.cls, ident, content=seed.content, multiple=seed.multiple)
    for type_name, raw in seed.attributes:
        t = info.attribute_type_for(inst.cls, type_name)
        set_state_attribute(info, inst, t.qualified, _typed(raw, t.value_set))
    return inst


def run_candidate(info: Infopedia, scenario: Scenario, behavior: BehaviorClass) -> RuleOutcome:
    """One candidate rule in its own sandbox, with its consequent nested references."""
    outcome = RuleOutcome(behavior.name, behavior.order, MATCH_FAILURE)
    if behavior.direction == "Backward":
        outcome.status, outcome.reason = SKIPPED, "direction"
        return outcome
    model, ctx, hints, lead = sandbox(info, scenario)
    try:
        time = ctx.last_time
        env = bind_binder_source(info, behavior, ctx.at(time).find(lead), ctx, time)
        app = apply_behavior_class(info, ctx, behavior, env, lead, hints=hints, time=time)
        apps = [app]
        for ref in app.pending:
            apps += apply_nested_reference(info, ctx, ref, env, max_depth=scenario.max_depth)
    except (FactError, InferenceError, ExprError, LookupFailure) as e:
        outcome.reason = f"{type(e).__name__}: {e}"
        return outcome
    outcome.status = APPLIED
    outcome.applications = apps
    outcome.model = model
    outcome.time_points = tuple(ctx.times())
    outcome.nested = list(app.evidence) + [
        NestedOutcome(a.behavior, NESTED_APPLIED, None, a.antecedent.get(ACTOR)) for a in apps[1:]]
    p = app.probability
    for a in apps[1:]:
        p *= a.probability
    outcome.probability = p
    return outcome


def run_forward_scenario(scenario: Scenario, info: Infopedia | None = None) -> InferenceReport:
    if info is None:
        info = compile_files([str(p) for p in scenario.sources], [str(p) for p in scenario.include])
    q = scenario.query
    found = find_behavior_classes(info, q.verb, q.actor_class, q.actee_class, q.modifiers, q.prior,
                                  q.extra_class)
    outcomes = rank_rule_candidates([run_candidate(info, scenario, b) for b in found])
    if outcomes and outcomes[0].applied:
        model = outcomes[0].model
    else:
        model = sandbox(info, scenario)[0]
    return InferenceReport(q.verb, outcomes, copy.deepcopy(model))
