"""Sensitivity analysis: probe how single judgments move the final ranking.

What-if re-evaluates the model with one judgment hypothetically replaced,
without touching the original. Useful for spotting judgments that carry the
decision and for checking suspected data-entry mistakes.
"""

from fractions import Fraction

import ahpq

F = Fraction

model = ahpq.parse_model(ahpq.example_model_text())
baseline = ahpq.evaluate(model)
print("Baseline totals:",
      {k: f"{v * 100:.1f}%" for k, v in baseline.alternative_totals.items()})

# The Escalation judgment says OLD is strongly favored (7). Flip it.
delta = ahpq.whatif(model, ("Goal", "Performance", "Escalation"),
                    ("OLD", "NEW"), F(1, 7))
print(f"\nEscalation (OLD, NEW): {delta.changed.old_value} -> "
      f"{delta.changed.new_value}")
for name, shift in delta.total_shift.items():
    print(f"  {name}: {delta.before.alternative_totals[name] * 100:.1f}% -> "
          f"{delta.after.alternative_totals[name] * 100:.1f}%  ({shift * 100:+.1f} pp)")

# Sweep one judgment across the whole scale to see its leverage.
print("\nSweep of UnexpectedInput (OLD, NEW):")
for value in [F(1, 9), F(1, 3), F(1), F(3), F(9)]:
    d = ahpq.whatif(model, ("Goal", "Performance", "UnexpectedInput"),
                    ("OLD", "NEW"), value)
    old_total = d.after.alternative_totals["OLD"]
    marker = " <- current" if value == F(3) else ""
    print(f"  value {str(value):>4}: OLD total {old_total * 100:.1f}%{marker}")

# The original model is untouched by all of the above.
assert ahpq.evaluate(model).alternative_totals == baseline.alternative_totals
print("\nOriginal model unchanged: ranking still",
      [name for name, _ in ahpq.rank_alternatives(baseline)])
