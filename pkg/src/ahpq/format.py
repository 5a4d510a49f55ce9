"""Reader and writer for the version 2.0 model file format.

The format is a constrained YAML subset: top-level ``Version``,
``Alternatives`` (anchored ``&alternatives``) and ``Goal`` mappings, node
bodies with ``preferences.pairwise`` triplet lists and ``children`` that are
either nested node mappings or an alias back to the alternatives anchor.
Ratio tokens like ``1/7`` are kept as exact rationals end to end.

Parsing is built on the YAML composer so every rejection carries the line
and column it came from, and alias references resolve by node identity.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

import yaml

from .model import (AlternativeDecl, DecisionModel, ModelMetadata, Node,
                    PairwiseJudgment)

# Error kinds, fixed vocabulary. INDENTATION covers low-level syntax problems
# (bad block structure, tabs, unclosed flow sequences); MISSING_SECTION covers
# absent or malformed required structure.
INDENTATION = "INDENTATION"
UNKNOWN_KEY = "UNKNOWN_KEY"
BAD_RATIO = "BAD_RATIO"
UNRESOLVED_ALIAS = "UNRESOLVED_ALIAS"
MISSING_SECTION = "MISSING_SECTION"
BAD_VERSION = "BAD_VERSION"

_NULL_TAG = "tag:yaml.org,2002:null"

_NODE_KEYS = ("name", "description", "author", "preferences", "children")

# Plain-scalar emission is restricted to names that cannot change meaning
# when reparsed; anything else is emitted JSON-quoted (valid YAML).
_PLAIN_SCALAR = re.compile(r"^[A-Za-z0-9](?:[A-Za-z0-9 _.()&+',-]*[A-Za-z0-9.)'])?$")


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int


@dataclass(frozen=True)
class ParseIssue:
    span: SourceSpan
    kind: str
    message: str


class ParseError(Exception):
    """Fatal rejection of a model document, located at a source span."""

    def __init__(self, span: SourceSpan, kind: str, message: str):
        super().__init__(f"line {span.line}, column {span.column}: {kind}: {message}")
        self.span = span
        self.kind = kind
        self.message = message


def _span(mark) -> SourceSpan:
    if mark is None:
        return SourceSpan(1, 1)
    return SourceSpan(mark.line + 1, mark.column + 1)


def _node_span(node) -> SourceSpan:
    return _span(getattr(node, "start_mark", None))


class _Walker:
    """Turns a composed YAML node tree into a DecisionModel."""

    def __init__(self) -> None:
        self.warnings: list[ParseIssue] = []
        self.alternatives_node = None

    def warn(self, node, kind: str, message: str) -> None:
        self.warnings.append(ParseIssue(_node_span(node), kind, message))

    def mapping_items(self, node, context: str) -> list[tuple[str, object, object]]:
        if not isinstance(node, yaml.MappingNode):
            raise ParseError(_node_span(node), MISSING_SECTION,
                             f"{context} must be a mapping")
        items = []
        for key_node, value_node in node.value:
            if not isinstance(key_node, yaml.ScalarNode):
                raise ParseError(_node_span(key_node), MISSING_SECTION,
                                 f"{context} keys must be plain scalars")
            items.append((key_node.value.strip(), key_node, value_node))
        return items

    def scalar_text(self, node, context: str) -> str:
        if not isinstance(node, yaml.ScalarNode):
            raise ParseError(_node_span(node), MISSING_SECTION,
                             f"{context} must be a scalar value")
        # Folded/literal block scalars keep a trailing newline; drop it.
        return node.value.rstrip("\n")

    def parse_ratio(self, node) -> Fraction:
        if not isinstance(node, yaml.ScalarNode):
            raise ParseError(_node_span(node), BAD_RATIO,
                             "ratio must be a number or p/q fraction")
        text = node.value.strip()
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ParseError(_node_span(node), BAD_RATIO,
                             f"cannot read {text!r} as a ratio") from None
        if value <= 0:
            raise ParseError(_node_span(node), BAD_RATIO,
                             f"ratio must be positive, got {text!r}")
        return value

    def parse_pairwise(self, node) -> tuple[PairwiseJudgment, ...]:
        if isinstance(node, yaml.ScalarNode) and node.tag == _NULL_TAG:
            return ()
        if not isinstance(node, yaml.SequenceNode):
            raise ParseError(_node_span(node), MISSING_SECTION,
                             "pairwise must be a list of [Left, Right, ratio] entries")
        judgments = []
        for entry in node.value:
            if not isinstance(entry, yaml.SequenceNode) or len(entry.value) != 3:
                raise ParseError(_node_span(entry), BAD_RATIO,
                                 "pairwise entry must be [Left, Right, ratio]")
            left_node, right_node, ratio_node = entry.value
            for side in (left_node, right_node):
                if not isinstance(side, yaml.ScalarNode):
                    raise ParseError(_node_span(side), BAD_RATIO,
                                     "pairwise entry sides must be names")
            judgments.append(PairwiseJudgment(left=left_node.value.strip(),
                                              right=right_node.value.strip(),
                                              value=self.parse_ratio(ratio_node)))
        return tuple(judgments)

    def parse_preferences(self, node, path: str) -> tuple[PairwiseJudgment, ...]:
        judgments: tuple[PairwiseJudgment, ...] = ()
        for key, key_node, value_node in self.mapping_items(node, f"{path}.preferences"):
            if key == "pairwise":
                judgments = self.parse_pairwise(value_node)
            else:
                self.warn(key_node, UNKNOWN_KEY,
                          f"ignoring unknown preferences key {key!r} under {path}")
        return judgments

    def parse_children(self, node, path: str) -> tuple[Node, ...] | None:
        if node is self.alternatives_node:
            return None  # alias back to the alternatives anchor: leaf criterion
        if isinstance(node, yaml.ScalarNode) and node.tag == _NULL_TAG:
            return ()
        children = []
        for name, _key_node, body in self.mapping_items(node, f"{path}.children"):
            children.append(self.parse_node(name, body, f"{path}/{name}"))
        return tuple(children)

    def parse_node(self, name: str, body, path: str) -> Node:
        judgments: tuple[PairwiseJudgment, ...] = ()
        children: tuple[Node, ...] | None = ()
        if isinstance(body, yaml.ScalarNode) and body.tag == _NULL_TAG:
            return Node(name=name, judgments=(), children=())
        for key, key_node, value_node in self.mapping_items(body, path):
            if key == "preferences":
                judgments = self.parse_preferences(value_node, path)
            elif key == "children":
                children = self.parse_children(value_node, path)
            elif key in _NODE_KEYS:
                pass  # name/description/author carry no structure below the goal
            else:
                self.warn(key_node, UNKNOWN_KEY,
                          f"ignoring unknown key {key!r} under {path}")
        return Node(name=name, judgments=judgments, children=children)

    def parse_alternatives(self, node) -> tuple[AlternativeDecl, ...]:
        self.alternatives_node = node
        if isinstance(node, yaml.ScalarNode) and node.tag == _NULL_TAG:
            return ()
        decls = []
        for name, _key_node, value_node in self.mapping_items(node, "Alternatives"):
            attributes: dict[str, str] = {}
            if isinstance(value_node, yaml.MappingNode):
                for attr, attr_key_node, attr_value in self.mapping_items(
                        value_node, f"alternative {name}"):
                    if isinstance(attr_value, yaml.ScalarNode):
                        attributes[attr] = attr_value.value
                    else:
                        self.warn(attr_key_node, UNKNOWN_KEY,
                                  f"ignoring non-scalar attribute {attr!r} of "
                                  f"alternative {name!r}")
            elif not (isinstance(value_node, yaml.ScalarNode)
                      and value_node.tag == _NULL_TAG):
                self.warn(value_node, UNKNOWN_KEY,
                          f"ignoring unexpected value for alternative {name!r}")
            decls.append(AlternativeDecl(name=name, attributes=attributes))
        return tuple(decls)

    def parse_goal(self, node) -> tuple[Node, ModelMetadata]:
        name = ""
        description = ""
        author = ""
        judgments: tuple[PairwiseJudgment, ...] = ()
        children: tuple[Node, ...] | None = ()
        for key, key_node, value_node in self.mapping_items(node, "Goal"):
            if key == "name":
                name = self.scalar_text(value_node, "Goal name")
            elif key == "description":
                description = self.scalar_text(value_node, "Goal description")
            elif key == "author":
                author = self.scalar_text(value_node, "Goal author")
            elif key == "preferences":
                judgments = self.parse_preferences(value_node, "Goal")
            elif key == "children":
                children = self.parse_children(value_node, "Goal")
            else:
                self.warn(key_node, UNKNOWN_KEY,
                          f"ignoring unknown key {key!r} under Goal")
        goal = Node(name=name or "Goal", judgments=judgments, children=children)
        return goal, ModelMetadata(name=name or "Goal", description=description,
                                   author=author)


def parse_model(text: str) -> DecisionModel:
    """Parse a model document; raises ParseError on any rejection.

    Tolerated-and-recorded issues (unknown keys) end up on the returned
    model's ``parse_warnings``.
    """
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        problem = getattr(exc, "problem", None) or str(exc)
        context = getattr(exc, "context", None)
        message = f"{context}: {problem}" if context else problem
        kind = UNRESOLVED_ALIAS if "undefined alias" in problem else INDENTATION
        raise ParseError(_span(mark), kind, message) from None
    if root is None:
        raise ParseError(SourceSpan(1, 1), MISSING_SECTION, "document is empty")

    walker = _Walker()
    sections = {key: value for key, _k, value in
                walker.mapping_items(root, "document")}
    for required in ("Version", "Alternatives", "Goal"):
        if required not in sections:
            raise ParseError(_node_span(root), MISSING_SECTION,
                             f"missing required section {required!r}")
    for key, key_node, _value in walker.mapping_items(root, "document"):
        if key not in ("Version", "Alternatives", "Goal"):
            walker.warn(key_node, UNKNOWN_KEY, f"ignoring unknown section {key!r}")

    version_node = sections["Version"]
    version = walker.scalar_text(version_node, "Version")
    if version != "2.0":
        raise ParseError(_node_span(version_node), BAD_VERSION,
                         f"unsupported version {version!r}, expected 2.0")

    alternatives = walker.parse_alternatives(sections["Alternatives"])
    goal, metadata = walker.parse_goal(sections["Goal"])
    return DecisionModel(version="2.0", goal=goal, alternatives=alternatives,
                         metadata=metadata, parse_warnings=tuple(walker.warnings))


def format_ratio(value: Fraction) -> str:
    """1 -> "1", 3 -> "3", 1/7 -> "1/7", 3/2 -> "3/2"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _scalar(text: str) -> str:
    if text and _PLAIN_SCALAR.match(text) and text not in ("true", "false", "null"):
        return text
    return json.dumps(text)


def serialize_model(model: DecisionModel) -> str:
    """Emit a document that parses back to a structurally identical model."""
    out: list[str] = []
    out.append("Version: 2.0")
    out.append("")
    out.append("Alternatives: &alternatives")
    for alt in model.alternatives:
        out.append(f"  {_scalar(alt.name)}:")
        for key, value in alt.attributes.items():
            out.append(f"    {_scalar(key)}: {_scalar(value)}")
    out.append("")
    out.append("Goal:")
    out.append(f"  name: {_scalar(model.metadata.name or model.goal.name)}")
    if model.metadata.description:
        if "\n" in model.metadata.description:
            out.append(f"  description: {json.dumps(model.metadata.description)}")
        else:
            out.append("  description: >")
            out.append(f"    {model.metadata.description}")
    if model.metadata.author:
        out.append(f"  author: {_scalar(model.metadata.author)}")
    _emit_node_body(out, model.goal, indent="  ")
    return "\n".join(out) + "\n"


def _emit_node_body(out: list[str], node: Node, indent: str) -> None:
    if node.judgments:
        out.append(f"{indent}preferences:")
        out.append(f"{indent}  pairwise:")
        for j in node.judgments:
            out.append(f"{indent}    - [{_scalar(j.left)}, {_scalar(j.right)}, "
                       f"{format_ratio(j.value)}]")
    if node.children is None:
        out.append(f"{indent}children: *alternatives")
    elif node.children:
        out.append(f"{indent}children:")
        for child in node.children:
            out.append(f"{indent}  {_scalar(child.name)}:")
            _emit_node_body(out, child, indent + "    ")
