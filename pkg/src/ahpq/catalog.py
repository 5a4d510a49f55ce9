"""Built-in chatbot quality-attribute taxonomy, measured-evidence records,
and model scaffolding.

The catalog groups attributes under the ISO 9241 usability dimensions
(efficiency, effectiveness, satisfaction) and six categories. It is
suggestive, not prescriptive: scaffolding accepts any attribute text, and
measured evidence never alters weights; the human converts evidence into
pairwise judgments.
"""

from __future__ import annotations

import csv
import enum
import io
import itertools
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import AhpError
from .model import (AlternativeDecl, DecisionModel, ModelMetadata, Node,
                    PairwiseJudgment, iter_nodes)


class UsabilityDimension(str, enum.Enum):
    EFFICIENCY = "EFFICIENCY"
    EFFECTIVENESS = "EFFECTIVENESS"
    SATISFACTION = "SATISFACTION"


class Category(str, enum.Enum):
    PERFORMANCE = "Performance"
    FUNCTIONALITY = "Functionality"
    HUMANITY = "Humanity"
    AFFECT = "Affect"
    ETHICS_BEHAVIOR = "EthicsBehavior"
    ACCESSIBILITY = "Accessibility"


# Fixed dimension for each category.
CATEGORY_DIMENSION = {
    Category.PERFORMANCE: UsabilityDimension.EFFICIENCY,
    Category.FUNCTIONALITY: UsabilityDimension.EFFECTIVENESS,
    Category.HUMANITY: UsabilityDimension.EFFECTIVENESS,
    Category.AFFECT: UsabilityDimension.SATISFACTION,
    Category.ETHICS_BEHAVIOR: UsabilityDimension.SATISFACTION,
    Category.ACCESSIBILITY: UsabilityDimension.SATISFACTION,
}


@dataclass(frozen=True)
class AttributeCatalogEntry:
    """One quality attribute with its literature sources and the short
    identifier used for hierarchy node names."""

    usability_dimension: UsabilityDimension
    category: Category
    attribute: str
    sources: tuple[str, ...]
    key: str


def _identifier(text: str) -> str:
    """CamelCase identifier from free attribute text."""
    words = re.findall(r"[A-Za-z0-9]+", text)
    return "".join(w[:1].upper() + w[1:] for w in words)


def _entry(category: Category, attribute: str, sources: Sequence[str],
           key: str | None = None) -> AttributeCatalogEntry:
    return AttributeCatalogEntry(
        usability_dimension=CATEGORY_DIMENSION[category],
        category=category,
        attribute=attribute,
        sources=tuple(sources),
        key=key or _identifier(attribute),
    )


CATALOG: tuple[AttributeCatalogEntry, ...] = (
    # Efficiency / Performance
    _entry(Category.PERFORMANCE, "Graceful degradation", ["Cohen & Lane (2016)"]),
    _entry(Category.PERFORMANCE, "Robustness to manipulation", ["Thieltges (2016)"]),
    _entry(Category.PERFORMANCE, "Robustness to unexpected input", ["Kluwer (2011)"],
           key="UnexpectedInput"),
    _entry(Category.PERFORMANCE,
           "Avoid inappropriate utterances and be able to perform damage control",
           ["Morrissey and Kirakowski (2013)"]),
    _entry(Category.PERFORMANCE,
           "Effective function allocation, provides appropriate escalation channels to humans",
           ["Staven (2017)"], key="Escalation"),
    # Effectiveness / Functionality
    _entry(Category.FUNCTIONALITY, "Accurate speech synthesis", ["Kuligowska (2015)"]),
    _entry(Category.FUNCTIONALITY, "Interprets commands accurately", ["Eeuwen (2017)"]),
    _entry(Category.FUNCTIONALITY,
           "Use appropriate degrees of formality, linguistic register",
           ["Morrissey & Kirakowski (2013)"]),
    _entry(Category.FUNCTIONALITY, "Linguistic accuracy of outputs", ["Wallace (2003)"]),
    _entry(Category.FUNCTIONALITY, "Execute requested tasks", ["Ramos (2017)"]),
    _entry(Category.FUNCTIONALITY,
           "Facilitate transactions and follows up with status reports",
           ["Eeuwen (2017)"]),
    _entry(Category.FUNCTIONALITY, "General ease of use", ["Solomon (2017)"]),
    _entry(Category.FUNCTIONALITY, "Engage in on-the-fly problem solving",
           ["Cohen & Lane (2016)"]),
    _entry(Category.FUNCTIONALITY,
           "Contains breadth of knowledge, is flexible in interpreting it",
           ["Cohen & Lane (2016)"]),
    # Effectiveness / Humanity. The taxonomy deliberately carries both Turing
    # positions; prioritization is left to the analyst.
    _entry(Category.HUMANITY, "Passes the Turing test",
           ["Weizenbaum (1966)", "Wallace (2003)"]),
    _entry(Category.HUMANITY, "Does not have to pass the Turing Test",
           ["Ramos (2017)"]),
    _entry(Category.HUMANITY, "Transparent to inspection, discloses its chatbot identity",
           ["Bostrom & Yudkowski (2014)"], key="Transparent"),
    _entry(Category.HUMANITY, "Include errors to increase realism", ["Coniam (2014)"]),
    _entry(Category.HUMANITY, "Convincing, satisfying, & natural interaction",
           ["Morrissey & Kirakowski (2013)"]),
    _entry(Category.HUMANITY, "Able to respond to specific questions",
           ["Morrissey & Kirakowski (2013)"], key="SpecificQs"),
    _entry(Category.HUMANITY, "Able to maintain themed discussion",
           ["Morrissey & Kirakowski (2013)"], key="ThemedDiscussion"),
    # Satisfaction / Affect
    _entry(Category.AFFECT, "Provide greetings, convey personality",
           ["Morrissey & Kirakowski (2013)"], key="Personality"),
    _entry(Category.AFFECT, "Give conversational cues", ["Pauletto et al. (2013)"]),
    _entry(Category.AFFECT,
           "Provide emotional information through tone, inflection, and expressivity",
           ["Solomon (2017)"]),
    _entry(Category.AFFECT, "Exude warmth and authenticity", ["Eeuwen (2017)"]),
    _entry(Category.AFFECT, "Make tasks more fun and interesting", ["Ramos (2017)"]),
    _entry(Category.AFFECT, "Entertain and/or enable participant to enjoy the interaction",
           ["Meira & Canuto (2015)"], key="Entertaining"),
    _entry(Category.AFFECT, "Read and respond to moods of human participant",
           ["Meira & Canuto (2015)"]),
    # Satisfaction / Ethics & Behavior
    _entry(Category.ETHICS_BEHAVIOR,
           "Respect, inclusion, and preservation of dignity (linked to choice of training set)",
           ["Neff & Nagy (2016)"]),
    _entry(Category.ETHICS_BEHAVIOR, "Ethics and cultural knowledge of users",
           ["Applin & Fischer (2015)"]),
    _entry(Category.ETHICS_BEHAVIOR, "Protect and respect privacy", ["Eeuwen (2017)"]),
    _entry(Category.ETHICS_BEHAVIOR, "Nondeception", ["Isaac & Bridewell (2014)"]),
    _entry(Category.ETHICS_BEHAVIOR, "Sensitivity to safety and social concerns",
           ["Miner et al. (2016)"]),
    _entry(Category.ETHICS_BEHAVIOR, "Trustworthiness (linked to perceived quality)",
           ["Herzum et al. (2002)"]),
    _entry(Category.ETHICS_BEHAVIOR, "Awareness of trends and social context",
           ["Vetter (2002)"]),
    # Satisfaction / Accessibility
    _entry(Category.ACCESSIBILITY, "Responds to social cues or lack thereof",
           ["Morrissey and Kirakowski (2013)"], key="SocialCues"),
    _entry(Category.ACCESSIBILITY, "Can detect meaning or intent",
           ["Wilson et al. (2017)"], key="MeaningIntent"),
    _entry(Category.ACCESSIBILITY,
           "Meets neurodiverse needs such as extra response time and text interface",
           ["Radziwill & Benton (2017)"]),
)


def catalog_entries(dimension: UsabilityDimension | str | None = None,
                    category: Category | str | None = None,
                    keyword: str | None = None) -> list[AttributeCatalogEntry]:
    """Filter the built-in catalog; no filter returns the full table."""
    entries = list(CATALOG)
    if dimension is not None:
        dimension = UsabilityDimension(dimension)
        entries = [e for e in entries if e.usability_dimension is dimension]
    if category is not None:
        category = Category(category)
        entries = [e for e in entries if e.category is category]
    if keyword is not None:
        needle = keyword.lower()
        entries = [e for e in entries
                   if needle in e.attribute.lower() or needle in e.key.lower()]
    return entries


def find_entry(category: Category | str, attribute: str) -> AttributeCatalogEntry | None:
    """Look up a catalog entry by key or full attribute text."""
    category = Category(category)
    for e in CATALOG:
        if e.category is category and (e.key == attribute or e.attribute == attribute):
            return e
    return None


# --- metric evidence (measured values per alternative) ---------------------


class MetricKind(str, enum.Enum):
    SUCCESS_RATE = "SUCCESS_RATE"
    RANGE_RATE = "RANGE_RATE"
    SCALED_SCORE = "SCALED_SCORE"


@dataclass(frozen=True)
class Rate:
    value: float

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"success rate must be in [0, 1], got {self.value}")


@dataclass(frozen=True)
class RateRange:
    low: float
    high: float

    def __post_init__(self):
        if not 0.0 <= self.low <= self.high <= 1.0:
            raise ValueError(f"rate range must satisfy 0 <= low <= high <= 1, "
                             f"got ({self.low}, {self.high})")


@dataclass(frozen=True)
class Scored:
    mean: float
    stddev: float

    def __post_init__(self):
        if not 0.0 <= self.mean <= 100.0:
            raise ValueError(f"scaled score mean must be in [0, 100], got {self.mean}")
        if self.stddev < 0.0:
            raise ValueError(f"stddev must be >= 0, got {self.stddev}")


MetricValue = Rate | RateRange | Scored

_KIND_TYPE = {MetricKind.SUCCESS_RATE: Rate,
              MetricKind.RANGE_RATE: RateRange,
              MetricKind.SCALED_SCORE: Scored}


@dataclass(frozen=True)
class MetricRecord:
    """Measured evidence for one attribute across alternatives."""

    attribute: str
    metric_name: str
    kind: MetricKind
    values: Mapping[str, MetricValue]

    def __post_init__(self):
        expected = _KIND_TYPE[self.kind]
        for alt, value in self.values.items():
            if not isinstance(value, expected):
                raise ValueError(f"{self.kind.value} record for {self.attribute!r} "
                                 f"holds a {type(value).__name__} for {alt!r}")


def example_metric_records() -> list[MetricRecord]:
    """The nine worked-example measurements for the OLD/NEW comparison."""
    return [
        MetricRecord("UnexpectedInput", "% of successes", MetricKind.RANGE_RATE,
                     {"OLD": RateRange(0.86, 0.92), "NEW": RateRange(0.91, 0.93)}),
        MetricRecord("Escalation", "% of successes", MetricKind.SUCCESS_RATE,
                     {"OLD": Rate(0.80), "NEW": Rate(1.00)}),
        MetricRecord("Transparent", "% of users who correctly classify",
                     MetricKind.SUCCESS_RATE,
                     {"OLD": Rate(1.00), "NEW": Rate(1.00)}),
        MetricRecord("ThemedDiscussion", "0 (low) .. 100 (high)", MetricKind.SCALED_SCORE,
                     {"OLD": Scored(72, 8), "NEW": Scored(85, 12)}),
        MetricRecord("SpecificQs", "% of successes", MetricKind.RANGE_RATE,
                     {"OLD": RateRange(0.68, 0.82), "NEW": RateRange(0.80, 0.85)}),
        MetricRecord("Personality", "0 (low) .. 100 (high)", MetricKind.SCALED_SCORE,
                     {"OLD": Scored(89, 3), "NEW": Scored(96, 3)}),
        MetricRecord("Entertaining", "0 (low) .. 100 (high)", MetricKind.SCALED_SCORE,
                     {"OLD": Scored(50, 21), "NEW": Scored(66, 4)}),
        MetricRecord("MeaningIntent", "% of successes", MetricKind.RANGE_RATE,
                     {"OLD": RateRange(0.85, 0.90), "NEW": RateRange(0.82, 0.86)}),
        MetricRecord("SocialCues", "% of successes", MetricKind.SUCCESS_RATE,
                     {"OLD": Rate(0.78), "NEW": Rate(0.77)}),
    ]


# --- scaffolding ------------------------------------------------------------


def scaffold_model(selection: Sequence[tuple[Category | str, str]],
                   alternatives: Sequence[str],
                   name: str = "Quality Assessment") -> DecisionModel:
    """Goal -> category -> attribute -> alternatives skeleton with every
    pairwise judgment initialized to 1.

    The placeholder judgments are flagged in the model description; edit
    them before reading anything into the analysis.
    """
    if not selection:
        raise AhpError("EMPTY_SELECTION", "select at least one attribute")
    if len(alternatives) < 2:
        raise AhpError("TOO_FEW_ALTERNATIVES",
                       f"need at least 2 alternatives, got {len(alternatives)}")

    grouped: dict[str, list[str]] = {}
    for category, attribute in selection:
        category = Category(category)
        entry = find_entry(category, attribute)
        key = entry.key if entry else _identifier(attribute)
        grouped.setdefault(category.value, []).append(key)

    unit = Fraction(1)

    def unit_pairs(names: Sequence[str]) -> tuple[PairwiseJudgment, ...]:
        return tuple(PairwiseJudgment(a, b, unit)
                     for a, b in itertools.combinations(names, 2))

    alt_names = tuple(alternatives)
    categories = []
    for category_name, attribute_keys in grouped.items():
        leaves = tuple(Node(name=key, judgments=unit_pairs(alt_names), children=None)
                       for key in attribute_keys)
        categories.append(Node(name=category_name,
                               judgments=unit_pairs(attribute_keys),
                               children=leaves))
    goal = Node(name=name, judgments=unit_pairs([c.name for c in categories]),
                children=tuple(categories))
    return DecisionModel(
        version="2.0",
        goal=goal,
        alternatives=tuple(AlternativeDecl(name=a) for a in alt_names),
        metadata=ModelMetadata(
            name=name,
            description="Scaffolded model; all pairwise judgments are placeholders (1) "
                        "awaiting real assessments.",
            author=""),
    )


def attach_metrics(model: DecisionModel,
                   records: Iterable[MetricRecord]) -> DecisionModel:
    """Model copy carrying evidence annotations; never alters analysis.

    Record attributes must name leaf criteria and record alternatives must be
    the model's alternatives.
    """
    records = tuple(records)
    leaves = {path[-1] for path, node in iter_nodes(model) if node.is_leaf}
    alternatives = set(model.alternative_names)
    for record in records:
        if record.attribute not in leaves:
            raise AhpError("UNKNOWN_ATTRIBUTE",
                           f"metric record names {record.attribute!r}, which is not a "
                           f"leaf criterion of the model")
        unknown = set(record.values) - alternatives
        if unknown:
            raise AhpError("UNKNOWN_ALTERNATIVE",
                           f"metric record for {record.attribute!r} names unknown "
                           f"alternative(s) {sorted(unknown)}")
    return replace(model, metrics=model.metrics + records)


# --- delimited import/export ------------------------------------------------

_CSV_HEADER = ["attribute", "metric_name", "kind", "alternative",
               "rate", "low", "high", "mean", "stddev"]


def dump_metrics_csv(records: Iterable[MetricRecord]) -> str:
    """One row per (record, alternative); value columns depend on kind."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(_CSV_HEADER)
    for record in records:
        for alt, value in record.values.items():
            row = [record.attribute, record.metric_name, record.kind.value, alt,
                   "", "", "", "", ""]
            if isinstance(value, Rate):
                row[4] = repr(value.value)
            elif isinstance(value, RateRange):
                row[5], row[6] = repr(value.low), repr(value.high)
            else:
                row[7], row[8] = repr(value.mean), repr(value.stddev)
            writer.writerow(row)
    return buffer.getvalue()


def load_metrics_csv(text: str) -> list[MetricRecord]:
    reader = csv.DictReader(io.StringIO(text))
    missing = set(_CSV_HEADER) - set(reader.fieldnames or ())
    if missing:
        raise ValueError(f"metrics file missing column(s): {sorted(missing)}")
    collected: dict[tuple[str, str, str], dict[str, MetricValue]] = {}
    for row in reader:
        kind = MetricKind(row["kind"])
        if kind is MetricKind.SUCCESS_RATE:
            value: MetricValue = Rate(float(row["rate"]))
        elif kind is MetricKind.RANGE_RATE:
            value = RateRange(float(row["low"]), float(row["high"]))
        else:
            value = Scored(float(row["mean"]), float(row["stddev"]))
        key = (row["attribute"], row["metric_name"], kind.value)
        collected.setdefault(key, {})[row["alternative"]] = value
    return [MetricRecord(attribute=a, metric_name=m, kind=MetricKind(k), values=vals)
            for (a, m, k), vals in collected.items()]
