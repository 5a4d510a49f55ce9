"""Pairwise-comparison decision analysis for chatbot quality assessment.

Builds hierarchical decision models over quality attributes, derives
priorities from the principal eigenvectors of reciprocal judgment matrices,
checks consistency, and ranks alternatives. Ships the quality-attribute
catalog, a v2.0 model-file reader/writer, a CLI, and an HTTP API.
"""

from importlib import resources

from .catalog import (AttributeCatalogEntry, Category, MetricKind, MetricRecord,
                      Rate, RateRange, Scored, UsabilityDimension, attach_metrics,
                      catalog_entries, example_metric_records, scaffold_model)
from .errors import AhpError
from .format import ParseError, ParseIssue, SourceSpan, parse_model, serialize_model
from .model import (AlternativeDecl, DecisionModel, ModelMetadata, Node,
                    PairwiseJudgment, ValidationIssue, ValidationReport,
                    iter_nodes, node_at, validate_model)
from .priority import (ComparisonMatrix, ConsistencyReport, ConsistencyStatus,
                       PriorityVector, build_matrix, consistency,
                       principal_eigenvector, saaty_random_index)
from .synthesis import (AnalysisDelta, AnalysisResult, ResultRow, evaluate,
                        rank_alternatives, whatif)

__version__ = "0.1.0"

__all__ = [
    "AhpError", "AlternativeDecl", "AnalysisDelta", "AnalysisResult",
    "AttributeCatalogEntry", "Category", "ComparisonMatrix", "ConsistencyReport",
    "ConsistencyStatus", "DecisionModel", "MetricKind", "MetricRecord",
    "ModelMetadata", "Node", "PairwiseJudgment", "ParseError", "ParseIssue",
    "PriorityVector", "Rate", "RateRange", "ResultRow", "Scored", "SourceSpan",
    "UsabilityDimension", "ValidationIssue", "ValidationReport",
    "attach_metrics", "build_matrix", "catalog_entries", "consistency",
    "evaluate", "example_metric_records", "example_model_text", "iter_nodes",
    "node_at", "parse_model", "principal_eigenvector", "rank_alternatives",
    "saaty_random_index", "scaffold_model", "serialize_model", "validate_model",
    "whatif",
]


def example_model_text() -> str:
    """The bundled OLD-vs-NEW chatbot comparison model (v2.0 file format)."""
    return resources.files("ahpq").joinpath("data/select_chatbots.yaml").read_text(
        encoding="utf-8")
