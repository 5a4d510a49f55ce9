"""Deterministic text renderings of analysis results and hierarchies.

TABLE mirrors the worked example's results layout: a header row, then one
row per node with Weight, one column per alternative, and Consistency, all
as one-decimal percentages, two spaces between fields, two spaces of indent
per depth level below the categories. Identical inputs produce byte-identical
output in every format.
"""

from __future__ import annotations

import csv
import enum
import io
import json

from .model import DecisionModel, iter_nodes
from .synthesis import AnalysisResult
from .wire import result_to_dict


class ReportFormat(str, enum.Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"
    DOT = "dot"
    ASCII_TREE = "ascii"


def _pct(value: float) -> str:
    return f"{value * 100:.1f}%"


def render_report(result: AnalysisResult, format: ReportFormat = ReportFormat.TABLE) -> str:
    if format is ReportFormat.TABLE:
        return _render_table(result)
    if format is ReportFormat.JSON:
        return json.dumps(result_to_dict(result), indent=2) + "\n"
    if format is ReportFormat.CSV:
        return _render_csv(result)
    raise ValueError(f"render_report cannot produce {format.value!r}")


def _render_table(result: AnalysisResult) -> str:
    alternatives = list(result.alternative_totals)
    lines = ["  ".join(["", "Weight", *alternatives, "Consistency"])]
    for row in result.rows:
        indent = "  " * max(row.depth - 1, 0)
        cells = [indent + row.name, _pct(row.global_weight)]
        cells += [_pct(row.per_alternative_weight[alt]) for alt in alternatives]
        cells.append(_pct(row.consistency_ratio))
        lines.append("  ".join(cells))
    return "\n".join(lines) + "\n"


def _render_csv(result: AnalysisResult) -> str:
    alternatives = list(result.alternative_totals)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["path", "name", "depth", "local_weight", "global_weight",
                     "global_weight_pct", *alternatives, "consistency_ratio"])
    for row in result.rows:
        writer.writerow([
            "/".join(row.path), row.name, row.depth,
            repr(row.local_weight), repr(row.global_weight),
            f"{row.global_weight * 100:.1f}",
            *(repr(row.per_alternative_weight[alt]) for alt in alternatives),
            repr(row.consistency_ratio),
        ])
    return buffer.getvalue()


def render_tree(model: DecisionModel, format: ReportFormat = ReportFormat.ASCII_TREE) -> str:
    if format is ReportFormat.ASCII_TREE:
        return _render_ascii_tree(model)
    if format is ReportFormat.DOT:
        return _render_dot(model)
    raise ValueError(f"render_tree cannot produce {format.value!r}")


def _render_ascii_tree(model: DecisionModel) -> str:
    lines = [model.goal.name]

    def walk(node, prefix: str) -> None:
        if node.children is None:
            entries = [f"({a.name})" for a in model.alternatives]
        else:
            entries = list(node.children)
        for i, entry in enumerate(entries):
            last = i == len(entries) - 1
            connector = "`- " if last else "+- "
            if isinstance(entry, str):
                lines.append(prefix + connector + entry)
            else:
                lines.append(prefix + connector + entry.name)
                walk(entry, prefix + ("   " if last else "|  "))

    walk(model.goal, "")
    return "\n".join(lines) + "\n"


def _render_dot(model: DecisionModel) -> str:
    def quote(text: str) -> str:
        return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["digraph decision {", "  rankdir=TB;"]
    edges = []
    for path, node in iter_nodes(model):
        node_id = "/".join(path)
        shape = "box" if len(path) == 1 else ("oval" if node.is_leaf else "box")
        lines.append(f"  {quote(node_id)} [label={quote(node.name)}, shape={shape}];")
        if node.is_leaf:
            for alt in model.alternatives:
                edges.append(f"  {quote(node_id)} -> {quote('alt:' + alt.name)};")
        else:
            for child in node.children or ():
                edges.append(f"  {quote(node_id)} -> {quote(node_id + '/' + child.name)};")
    for alt in model.alternatives:
        lines.append(f"  {quote('alt:' + alt.name)} [label={quote(alt.name)}, "
                     f"shape=ellipse];")
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
