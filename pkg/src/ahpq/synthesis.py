"""Whole-model evaluation: local priorities per node, global weight
propagation, distributive alternative totals, and what-if re-evaluation.

Global weights multiply down the ancestor chain from the goal (weight 1).
An alternative's total is the sum over leaf criteria of the leaf's global
weight times its local alternative priority.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import AhpError
from .model import (DecisionModel, Node, node_at, replace_judgment,
                    validate_model, GOAL_SEGMENT)
from .priority import (ComparisonMatrix, ConsistencyReport, build_matrix,
                       consistency, principal_eigenvector)


@dataclass(frozen=True)
class ResultRow:
    """One node's share of the decision: its weight inside its sibling group,
    the product down from the goal, and that weight split per alternative."""

    path: tuple[str, ...]
    name: str
    depth: int
    local_weight: float
    global_weight: float
    per_alternative_weight: Mapping[str, float]
    consistency: ConsistencyReport

    @property
    def consistency_ratio(self) -> float:
        return self.consistency.consistency_ratio


@dataclass(frozen=True)
class AnalysisResult:
    """Synthesized tree of weights: goal row first, then depth-first with
    siblings in descending global weight (declaration order on ties)."""

    rows: tuple[ResultRow, ...]
    alternative_totals: Mapping[str, float]
    overall_consistency: float

    def row_at(self, path: tuple[str, ...]) -> ResultRow:
        for row in self.rows:
            if row.path == path:
                return row
        raise AhpError("UNKNOWN_PATH", f"no result row at {'/'.join(path)}")


@dataclass(frozen=True)
class JudgmentChange:
    path: tuple[str, ...]
    pair: tuple[str, str]
    old_value: Fraction
    new_value: Fraction


@dataclass(frozen=True)
class AnalysisDelta:
    """Before/after evaluation of a single hypothetical judgment edit."""

    changed: JudgmentChange
    before: AnalysisResult
    after: AnalysisResult
    total_shift: Mapping[str, float]


def _local_priorities(node: Node, path: tuple[str, ...],
                      alternatives: tuple[str, ...]) -> tuple[tuple[str, ...], tuple[float, ...], ConsistencyReport]:
    members = alternatives if node.is_leaf else tuple(c.name for c in node.children or ())
    matrix: ComparisonMatrix = build_matrix(members, node.judgments)
    vector = principal_eigenvector(matrix)
    if not vector.converged:
        raise AhpError("NO_CONVERGENCE",
                       f"power iteration did not converge after {vector.iterations} "
                       f"iterations", path=path)
    return members, vector.weights, consistency(vector.lambda_max, matrix.n)


def evaluate(model: DecisionModel) -> AnalysisResult:
    """Analyze a valid model.

    Raises INVALID_MODEL when validation reports errors and NO_CONVERGENCE
    (with the offending node path) if an eigensolve fails to settle.
    """
    report = validate_model(model)
    if not report.ok:
        first = report.errors[0]
        raise AhpError("INVALID_MODEL",
                       f"model has {len(report.errors)} validation error(s); first: "
                       f"{first.code} at {'/'.join(first.path) or '(model)'}: {first.message}")

    alternatives = model.alternative_names
    rows: list[ResultRow] = []
    totals = {name: 0.0 for name in alternatives}

    def walk(node: Node, path: tuple[str, ...], depth: int,
             local: float, global_weight: float) -> ResultRow:
        members, weights, cons = _local_priorities(node, path, alternatives)
        if node.is_leaf:
            per_alt = {name: global_weight * w for name, w in zip(members, weights)}
            for name, w in per_alt.items():
                totals[name] += w
            row = ResultRow(path=path, name=node.name, depth=depth,
                            local_weight=local, global_weight=global_weight,
                            per_alternative_weight=per_alt, consistency=cons)
            rows.append(row)
            return row
        row_index = len(rows)
        rows.append(None)  # type: ignore[arg-type]  # placeholder, filled below
        child_rows = []
        by_weight = sorted(zip(node.children or (), weights),
                           key=lambda item: -item[1])
        for child, w in by_weight:
            child_rows.append(walk(child, path + (child.name,), depth + 1,
                                   w, global_weight * w))
        per_alt = {name: sum(r.per_alternative_weight.get(name, 0.0) for r in child_rows)
                   for name in alternatives}
        row = ResultRow(path=path, name=node.name, depth=depth,
                        local_weight=local, global_weight=global_weight,
                        per_alternative_weight=per_alt, consistency=cons)
        rows[row_index] = row
        return row

    goal_row = walk(model.goal, (GOAL_SEGMENT,), 0, 1.0, 1.0)
    return AnalysisResult(rows=tuple(rows),
                          alternative_totals=totals,
                          overall_consistency=goal_row.consistency_ratio)


def whatif(model: DecisionModel, path: tuple[str, ...] | list[str],
           pair: tuple[str, str], value: Fraction | int) -> AnalysisDelta:
    """Re-evaluate with a single judgment hypothetically replaced.

    The input model is not mutated; ``value`` is read in the orientation of
    ``pair`` and may be given as Fraction or int.
    """
    value = Fraction(value)
    if value <= 0:
        raise AhpError("BAD_VALUE", f"judgment value must be positive, got {value}")
    path = tuple(path)
    node = node_at(model, path)  # raises UNKNOWN_PATH
    stored = next((j for j in node.judgments if j.oriented(*pair) is not None), None)
    if stored is None:
        raise AhpError("UNKNOWN_PAIR",
                       f"no judgment for pair ({pair[0]}, {pair[1]})", path=path)
    old_value = stored.oriented(*pair)
    assert old_value is not None
    edited = replace_judgment(model, path, pair, value)
    before = evaluate(model)
    after = evaluate(edited)
    shift = {name: after.alternative_totals[name] - before.alternative_totals[name]
             for name in model.alternative_names}
    return AnalysisDelta(changed=JudgmentChange(path=path, pair=tuple(pair),
                                                old_value=old_value, new_value=value),
                         before=before, after=after, total_shift=shift)


def rank_alternatives(result: AnalysisResult) -> list[tuple[str, float]]:
    """Alternatives by descending total; declaration order breaks ties."""
    items = list(result.alternative_totals.items())
    items.sort(key=lambda item: -item[1])
    return items
