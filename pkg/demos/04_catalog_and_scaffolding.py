"""Start a new assessment from the built-in quality-attribute catalog.

Browse the taxonomy, pick the attributes that matter for your chatbots,
scaffold a model with placeholder judgments, and attach measured evidence
to the leaves.
"""

import ahpq
from ahpq import Category, UsabilityDimension
from ahpq.catalog import dump_metrics_csv
from ahpq.report import ReportFormat, render_tree

# The catalog groups attributes by usability dimension and category.
print(f"Catalog: {len(ahpq.catalog_entries())} attributes across "
      f"{len(list(Category))} categories\n")

for dimension in UsabilityDimension:
    entries = ahpq.catalog_entries(dimension=dimension)
    categories = sorted({e.category.value for e in entries})
    print(f"{dimension.value:<14} {len(entries):>2} attributes in {categories}")

print("\nPerformance attributes:")
for entry in ahpq.catalog_entries(category=Category.PERFORMANCE):
    print(f"  [{entry.key}] {entry.attribute}  ({'; '.join(entry.sources)})")

# Scaffold a model from a selection. Every judgment starts at 1 (equal
# importance); the description flags them as placeholders to edit.
selection = [
    (Category.PERFORMANCE, "UnexpectedInput"),
    (Category.PERFORMANCE, "Escalation"),
    (Category.ACCESSIBILITY, "MeaningIntent"),
    (Category.ACCESSIBILITY, "SocialCues"),
]
model = ahpq.scaffold_model(selection, ["OLD", "NEW"], name="Quarterly Review")
print("\nScaffolded hierarchy:")
print(render_tree(model, ReportFormat.ASCII_TREE))
print("Validates:", ahpq.validate_model(model).ok)

# Attach measured evidence. Evidence informs the human making judgments;
# it never changes the computed weights.
records = [r for r in ahpq.example_metric_records()
           if r.attribute in ("UnexpectedInput", "Escalation",
                              "MeaningIntent", "SocialCues")]
annotated = ahpq.attach_metrics(model, records)
print(f"Attached {len(annotated.metrics)} metric records; analysis unchanged:",
      ahpq.evaluate(annotated).alternative_totals ==
      ahpq.evaluate(model).alternative_totals)

print("\nEvidence as a delimited file:")
print(dump_metrics_csv(records))
