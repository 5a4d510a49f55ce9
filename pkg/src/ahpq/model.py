"""Decision hierarchy data model and structural validation.

A decision model is a goal node spanning a tree of criteria, a list of
alternatives, and pairwise importance judgments at every node. Judgments are
stored one-directional as exact rationals; the reciprocal is implied, never
stored, so a matrix built from them is reciprocal by construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator, Mapping, TYPE_CHECKING

from .errors import AhpError

if TYPE_CHECKING:
    from .catalog import MetricRecord
    from .format import ParseIssue

# Canonical judgment domain: 1/9 (right vastly preferred) .. 9 (left vastly
# preferred). Values outside produce VALUE_OUT_OF_SCALE warnings.
SCALE_MIN = Fraction(1, 9)
SCALE_MAX = Fraction(9)

# The odd Saaty steps and their reciprocals; anything else in range is legal
# but flagged as off the customary scale.
SAATY_SET = frozenset(
    [Fraction(1), Fraction(3), Fraction(5), Fraction(7), Fraction(9),
     Fraction(1, 3), Fraction(1, 5), Fraction(1, 7), Fraction(1, 9)]
)

# First path segment addressing the goal node, regardless of its display name.
GOAL_SEGMENT = "Goal"


@dataclass(frozen=True)
class PairwiseJudgment:
    """left : right importance ratio; (left, right, v) means left is v times
    as important as right, so it is interchangeable with (right, left, 1/v)."""

    left: str
    right: str
    value: Fraction

    def oriented(self, left: str, right: str) -> Fraction | None:
        """Value of this judgment read in the given orientation, or None if
        it covers a different pair."""
        if (self.left, self.right) == (left, right):
            return self.value
        if (self.left, self.right) == (right, left):
            return 1 / self.value
        return None


@dataclass(frozen=True)
class AlternativeDecl:
    """A candidate under comparison; attributes are carried opaquely."""

    name: str
    attributes: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Node:
    """A criterion in the hierarchy.

    ``children`` is either a tuple of sub-criteria or None, the sentinel for
    a leaf criterion whose judgments compare the model's alternatives.
    """

    name: str
    judgments: tuple[PairwiseJudgment, ...] = ()
    children: tuple["Node", ...] | None = None

    @property
    def is_leaf(self) -> bool:
        return self.children is None


@dataclass(frozen=True)
class ModelMetadata:
    name: str = ""
    description: str = ""
    author: str = ""


@dataclass(frozen=True)
class DecisionModel:
    """A complete goal/criteria/alternatives hierarchy with judgments.

    ``parse_warnings`` and ``metrics`` are carried alongside the structure
    and excluded from equality: two models are equal iff their hierarchy,
    alternatives, metadata and exact judgment values agree.
    """

    version: str
    goal: Node
    alternatives: tuple[AlternativeDecl, ...]
    metadata: ModelMetadata = ModelMetadata()
    parse_warnings: tuple["ParseIssue", ...] = field(default=(), compare=False)
    metrics: tuple["MetricRecord", ...] = field(default=(), compare=False)

    @property
    def alternative_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.alternatives)


@dataclass(frozen=True)
class ValidationIssue:
    path: tuple[str, ...]
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """All structural violations found in a model. The model is analyzable
    iff ``errors`` is empty."""

    errors: tuple[ValidationIssue, ...]
    warnings: tuple[ValidationIssue, ...]

    @property
    def ok(self) -> bool:
        return not self.errors


def iter_nodes(model: DecisionModel) -> Iterator[tuple[tuple[str, ...], Node]]:
    """Depth-first (path, node) pairs in declaration order, goal first."""

    def walk(path: tuple[str, ...], node: Node) -> Iterator[tuple[tuple[str, ...], Node]]:
        yield path, node
        for child in node.children or ():
            yield from walk(path + (child.name,), child)

    yield from walk((GOAL_SEGMENT,), model.goal)


def node_at(model: DecisionModel, path: list[str] | tuple[str, ...]) -> Node:
    """Resolve a node by path. The first segment must address the goal,
    either as the literal "Goal" or by the goal's display name."""
    if not path:
        raise AhpError("UNKNOWN_PATH", "empty path")
    head, *rest = path
    if head not in (GOAL_SEGMENT, model.goal.name):
        raise AhpError("UNKNOWN_PATH", f"path must start at the goal, got {head!r}",
                       path=tuple(path))
    node = model.goal
    walked = [GOAL_SEGMENT]
    for segment in rest:
        match = next((c for c in node.children or () if c.name == segment), None)
        if match is None:
            raise AhpError("UNKNOWN_PATH",
                           f"{segment!r} is not a child of {'/'.join(walked)}",
                           path=tuple(path))
        node = match
        walked.append(segment)
    return node


def _check_judgments(path: tuple[str, ...], node: Node, member_names: tuple[str, ...],
                     errors: list[ValidationIssue], warnings: list[ValidationIssue]) -> None:
    """Judgment rules shared by criteria and leaf nodes: known names, distinct
    sides, positive in-scale values, every unordered pair covered once."""
    members = set(member_names)
    seen: dict[frozenset[str], PairwiseJudgment] = {}
    for j in node.judgments:
        if j.left == j.right:
            errors.append(ValidationIssue(path, "SELF_COMPARISON",
                                          f"judgment compares {j.left!r} with itself"))
            continue
        unknown = [n for n in (j.left, j.right) if n not in members]
        if unknown:
            errors.append(ValidationIssue(path, "UNKNOWN_NAME",
                                          f"judgment references unknown name(s) {unknown}"))
            continue
        if j.value <= 0:
            errors.append(ValidationIssue(path, "BAD_VALUE",
                                          f"judgment ({j.left}, {j.right}) has non-positive value {j.value}"))
            continue
        key = frozenset((j.left, j.right))
        if key in seen:
            prior = seen[key]
            if prior.oriented(j.left, j.right) == j.value:
                errors.append(ValidationIssue(path, "DUPLICATE_PAIR",
                                              f"pair ({j.left}, {j.right}) judged more than once"))
            else:
                errors.append(ValidationIssue(
                    path, "CONFLICTING_PAIR",
                    f"pair ({j.left}, {j.right}) judged {j.value} but an earlier judgment "
                    f"implies {prior.oriented(j.left, j.right)}"))
            continue
        seen[key] = j
        if not SCALE_MIN <= j.value <= SCALE_MAX:
            warnings.append(ValidationIssue(path, "VALUE_OUT_OF_SCALE",
                                            f"judgment ({j.left}, {j.right}) value {j.value} "
                                            f"outside [1/9, 9]"))
        elif j.value not in SAATY_SET:
            warnings.append(ValidationIssue(path, "VALUE_OFF_SCALE_STEP",
                                            f"judgment ({j.left}, {j.right}) value {j.value} "
                                            f"is not on the 1/3/5/7/9 scale"))
    if len(member_names) >= 2:
        for a, b in itertools.combinations(member_names, 2):
            if frozenset((a, b)) not in seen:
                errors.append(ValidationIssue(path, "MISSING_PAIR",
                                              f"no judgment for pair ({a}, {b})"))


def validate_model(model: DecisionModel) -> ValidationReport:
    """Collect every structural violation in the model.

    An empty error list guarantees evaluation cannot fail structurally:
    every node with k >= 2 members carries exactly k(k-1)/2 usable judgments.
    """
    errors: list[ValidationIssue] = []
    warnings: list[ValidationIssue] = []

    if model.version != "2.0":
        errors.append(ValidationIssue((), "BAD_VERSION",
                                      f"unsupported model version {model.version!r}"))
    if len(model.alternatives) < 2:
        errors.append(ValidationIssue((), "TOO_FEW_ALTERNATIVES",
                                      f"need at least 2 alternatives, got {len(model.alternatives)}"))
    alt_names = model.alternative_names
    for name, count in _counts(alt_names).items():
        if count > 1:
            errors.append(ValidationIssue((), "DUPLICATE_ALTERNATIVE",
                                          f"alternative {name!r} declared {count} times"))
    for alt in model.alternatives:
        if not alt.name:
            errors.append(ValidationIssue((), "EMPTY_NAME", "alternative with empty name"))

    for path, node in iter_nodes(model):
        if node.is_leaf:
            _check_judgments(path, node, alt_names, errors, warnings)
            continue
        children = node.children or ()
        if not children:
            errors.append(ValidationIssue(path, "NO_CHILDREN",
                                          "node has neither sub-criteria nor alternatives"))
            continue
        names = tuple(c.name for c in children)
        for name, count in _counts(names).items():
            if count > 1:
                errors.append(ValidationIssue(path, "DUPLICATE_CHILD",
                                              f"child {name!r} declared {count} times"))
        _check_judgments(path, node, names, errors, warnings)

    return ValidationReport(errors=tuple(errors), warnings=tuple(warnings))


def _counts(names: tuple[str, ...]) -> dict[str, int]:
    out: dict[str, int] = {}
    for n in names:
        out[n] = out.get(n, 0) + 1
    return out


def replace_judgment(model: DecisionModel, path: tuple[str, ...],
                     pair: tuple[str, str], value: Fraction) -> DecisionModel:
    """New model with one judgment at ``path`` replaced; the input model is
    untouched. ``value`` is read in the orientation of ``pair``."""
    left, right = pair
    target = node_at(model, path)  # raises UNKNOWN_PATH
    stored = next((j for j in target.judgments
                   if j.oriented(left, right) is not None), None)
    if stored is None:
        raise AhpError("UNKNOWN_PAIR", f"no judgment for pair ({left}, {right})",
                       path=tuple(path))
    if (stored.left, stored.right) == (left, right):
        new_judgment = PairwiseJudgment(left, right, value)
    else:
        new_judgment = PairwiseJudgment(stored.left, stored.right, 1 / value)

    def rebuild(node: Node, remaining: tuple[str, ...]) -> Node:
        if not remaining:
            judgments = tuple(new_judgment if j is stored else j for j in node.judgments)
            return replace(node, judgments=judgments)
        head, rest = remaining[0], remaining[1:]
        children = tuple(rebuild(c, rest) if c.name == head else c
                         for c in node.children or ())
        return replace(node, children=children)

    return replace(model, goal=rebuild(model.goal, tuple(path[1:])))
