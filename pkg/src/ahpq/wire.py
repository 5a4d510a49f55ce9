"""JSON-shaped dict forms of the domain objects.

One serializer feeds both the CLI's JSON output and the HTTP API so the two
surfaces report identical numbers. Judgment ratios travel as exact strings
("3", "1/7"); weights travel as raw floats, rounding is a client concern.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping

from .catalog import (AttributeCatalogEntry, MetricKind, MetricRecord, Rate,
                      RateRange, Scored)
from .format import ParseIssue, format_ratio
from .model import (AlternativeDecl, DecisionModel, ModelMetadata, Node,
                    PairwiseJudgment, ValidationReport)
from .priority import ConsistencyReport
from .synthesis import AnalysisDelta, AnalysisResult, ResultRow

ALTERNATIVES_SENTINEL = "alternatives"


def ratio_from_wire(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"not a ratio: {value!r}")
    if isinstance(value, int):
        result = Fraction(value)
    elif isinstance(value, str):
        result = Fraction(value)
    elif isinstance(value, float):
        result = Fraction(str(value))
    else:
        raise ValueError(f"not a ratio: {value!r}")
    if result <= 0:
        raise ValueError(f"ratio must be positive: {value!r}")
    return result


def judgment_to_dict(j: PairwiseJudgment) -> dict:
    return {"left": j.left, "right": j.right, "value": format_ratio(j.value)}


def node_to_dict(node: Node) -> dict:
    return {
        "name": node.name,
        "judgments": [judgment_to_dict(j) for j in node.judgments],
        "children": (ALTERNATIVES_SENTINEL if node.children is None
                     else [node_to_dict(c) for c in node.children]),
    }


def node_from_dict(d: Mapping) -> Node:
    judgments = tuple(PairwiseJudgment(left=str(j["left"]), right=str(j["right"]),
                                       value=ratio_from_wire(j["value"]))
                      for j in d.get("judgments", ()))
    raw_children = d.get("children", [])
    if raw_children == ALTERNATIVES_SENTINEL or raw_children is None:
        children: tuple[Node, ...] | None = None
    else:
        children = tuple(node_from_dict(c) for c in raw_children)
    return Node(name=str(d["name"]), judgments=judgments, children=children)


def model_to_dict(model: DecisionModel) -> dict:
    return {
        "version": model.version,
        "metadata": {"name": model.metadata.name,
                     "description": model.metadata.description,
                     "author": model.metadata.author},
        "alternatives": [{"name": a.name, "attributes": dict(a.attributes)}
                         for a in model.alternatives],
        "goal": node_to_dict(model.goal),
    }


def model_from_dict(d: Mapping) -> DecisionModel:
    meta = d.get("metadata", {})
    goal = node_from_dict(d["goal"])
    return DecisionModel(
        version=str(d.get("version", "2.0")),
        goal=goal,
        alternatives=tuple(AlternativeDecl(name=str(a["name"]),
                                           attributes=dict(a.get("attributes", {})))
                           for a in d.get("alternatives", ())),
        metadata=ModelMetadata(name=str(meta.get("name", goal.name)),
                               description=str(meta.get("description", "")),
                               author=str(meta.get("author", ""))),
    )


def report_to_dict(report: ValidationReport) -> dict:
    def issues(items):
        return [{"path": list(i.path), "code": i.code, "message": i.message}
                for i in items]
    return {"errors": issues(report.errors), "warnings": issues(report.warnings)}


def parse_issues_to_dicts(issues: tuple[ParseIssue, ...]) -> list[dict]:
    return [{"span": {"line": i.span.line, "column": i.span.column},
             "kind": i.kind, "message": i.message} for i in issues]


def consistency_to_dict(report: ConsistencyReport) -> dict:
    return {
        "lambda_max": report.lambda_max,
        "n": report.n,
        "consistency_index": report.consistency_index,
        "random_index": report.random_index,
        "consistency_ratio": report.consistency_ratio,
        "status": report.status.value,
    }


def row_to_dict(row: ResultRow) -> dict:
    return {
        "path": list(row.path),
        "name": row.name,
        "depth": row.depth,
        "local_weight": row.local_weight,
        "global_weight": row.global_weight,
        "per_alternative_weight": dict(row.per_alternative_weight),
        "consistency": consistency_to_dict(row.consistency),
    }


def result_to_dict(result: AnalysisResult) -> dict:
    from .synthesis import rank_alternatives
    return {
        "rows": [row_to_dict(r) for r in result.rows],
        "alternative_totals": dict(result.alternative_totals),
        "ranking": [{"alternative": name, "weight": weight}
                    for name, weight in rank_alternatives(result)],
        "overall_consistency": result.overall_consistency,
    }


def delta_to_dict(delta: AnalysisDelta) -> dict:
    return {
        "changed": {
            "path": list(delta.changed.path),
            "pair": list(delta.changed.pair),
            "old_value": format_ratio(delta.changed.old_value),
            "new_value": format_ratio(delta.changed.new_value),
        },
        "before": result_to_dict(delta.before),
        "after": result_to_dict(delta.after),
        "total_shift": dict(delta.total_shift),
    }


def catalog_entry_to_dict(entry: AttributeCatalogEntry) -> dict:
    return {
        "usability_dimension": entry.usability_dimension.value,
        "category": entry.category.value,
        "attribute": entry.attribute,
        "sources": list(entry.sources),
        "key": entry.key,
    }


def metric_value_to_dict(value) -> dict:
    if isinstance(value, Rate):
        return {"rate": value.value}
    if isinstance(value, RateRange):
        return {"low": value.low, "high": value.high}
    if isinstance(value, Scored):
        return {"mean": value.mean, "stddev": value.stddev}
    raise TypeError(f"not a metric value: {value!r}")


def metric_record_to_dict(record: MetricRecord) -> dict:
    return {
        "attribute": record.attribute,
        "metric_name": record.metric_name,
        "kind": record.kind.value,
        "values": {alt: metric_value_to_dict(v) for alt, v in record.values.items()},
    }


def metric_record_from_dict(d: Mapping) -> MetricRecord:
    kind = MetricKind(d["kind"])
    values = {}
    for alt, raw in d.get("values", {}).items():
        if kind is MetricKind.SUCCESS_RATE:
            values[alt] = Rate(float(raw["rate"]))
        elif kind is MetricKind.RANGE_RATE:
            values[alt] = RateRange(float(raw["low"]), float(raw["high"]))
        else:
            values[alt] = Scored(float(raw["mean"]), float(raw["stddev"]))
    return MetricRecord(attribute=str(d["attribute"]),
                        metric_name=str(d.get("metric_name", "")),
                        kind=kind, values=values)
