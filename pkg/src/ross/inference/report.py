"""Plain-text rendering of inference reports, one record per line."""

from __future__ import annotations

from ross.inference.engine import InferenceReport, RuleOutcome


def _p(v: float | None) -> str:
    return "-" if v is None else f"{v:g}"


def _outcome_lines(rank: int, o: RuleOutcome) -> list[str]:
    if o.applied:
        times = ",".join(str(t) for t in o.time_points)
        lines = [f"rank {rank}\t{o.status}\t{o.behavior}\tprobability={_p(o.probability)}\ttime-points={times}"]
    else:
        lines = [f"rank {rank}\t{o.status}\t{o.behavior}\treason={o.reason}"]
    for n in o.nested:
        actor = f"\tactor={n.actor}" if n.actor else ""
        lines.append(f"  nested\t{n.mode}\t{n.behavior}\tprobability={_p(n.probability)}{actor}")
    return lines


def render_report(report: InferenceReport) -> str:
    lines = [f"query\tverb={report.verb}\tcandidates={len(report.outcomes)}"]
    if not report.outcomes:
        lines.append("no candidates")
    for i, o in enumerate(report.outcomes, 1):
        lines += _outcome_lines(i, o)
    for o in report.selected:
        lines.append(f"selected\t{o.behavior}\t{_p(o.probability)}")
    for ctx in report.model.contexts:
        for t in ctx.times():
            for inst in ctx.points[t].walk():
                for a in inst.attributes.values():
                    neg = "not " if a.negated else ""
                    prob = f"\tprobability={_p(a.probability)}" if a.probability is not None else ""
                    lines.append(f"state\t{t}\t{inst.cls}.{inst.identifier}\t{a.type} = {neg}{a.value}{prob}")
    return "\n".join(lines) + "\n"
