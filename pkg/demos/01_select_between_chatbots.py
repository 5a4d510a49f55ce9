"""Walkthrough: compare two chatbot versions end to end.

Loads the bundled OLD-vs-NEW comparison model, validates it, draws the
hierarchy, runs the analysis, and prints the results table. This is the
worked example the engine ships with.
"""

import ahpq
from ahpq.report import ReportFormat, render_report, render_tree

# Step 1: the model file. A hierarchy of quality attributes with pairwise
# judgments at every level, written in the v2.0 format.
text = ahpq.example_model_text()
print(text.splitlines()[0], "...")

model = ahpq.parse_model(text)
print(f"\nGoal: {model.goal.name}")
print(f"Alternatives: {', '.join(model.alternative_names)}")

# Step 2: validate, then visualize the decision hierarchy.
report = ahpq.validate_model(model)
print(f"Validation: {len(report.errors)} errors, {len(report.warnings)} warnings")

print("\nHierarchy:")
print(render_tree(model, ReportFormat.ASCII_TREE))

# Step 3: analyze. Local priorities come from the principal eigenvector of
# each node's comparison matrix; global weights multiply down the tree.
result = ahpq.evaluate(model)
print(render_report(result, ReportFormat.TABLE))

winner, weight = ahpq.rank_alternatives(result)[0]
print(f"Best alternative: {winner} at {weight * 100:.1f}%")
print(f"Goal consistency ratio: {result.overall_consistency * 100:.1f}% "
      "(below 20%, so the judgment set is usable)")
