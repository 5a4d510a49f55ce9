"""Priority math on its own: reciprocal matrices, eigenvector weights,
and the consistency ratio.

Shows how a handful of pairwise judgments turns into a weight vector, and
what happens to the consistency ratio when the judgments contradict each
other.
"""

from fractions import Fraction

import numpy as np

from ahpq import (PairwiseJudgment, build_matrix, consistency,
                  principal_eigenvector)

F = Fraction

# Four quality categories judged pairwise. A value of 7 means the left one
# is much more important; 1/3 means the right one is slightly favored.
judgments = [
    PairwiseJudgment("Performance", "Humanity", F(7)),
    PairwiseJudgment("Performance", "Affect", F(7)),
    PairwiseJudgment("Performance", "Accessibility", F(1, 3)),
    PairwiseJudgment("Humanity", "Affect", F(1, 5)),
    PairwiseJudgment("Humanity", "Accessibility", F(1, 7)),
    PairwiseJudgment("Affect", "Accessibility", F(1, 7)),
]
matrix = build_matrix(["Performance", "Humanity", "Affect", "Accessibility"],
                      judgments)

print("Comparison matrix (reciprocals filled in automatically):")
with np.printoptions(precision=3, suppress=True):
    print(matrix.entries)

vector = principal_eigenvector(matrix)
print("\nPriorities from the principal eigenvector:")
for name, weight in zip(matrix.elements, vector.weights):
    print(f"  {name:<14} {weight * 100:5.1f}%")
print(f"  lambda_max = {vector.lambda_max:.4f} "
      f"(converged in {vector.iterations} iterations)")

report = consistency(vector.lambda_max, matrix.n)
print(f"\nConsistency: CI = {report.consistency_index:.4f}, "
      f"RI = {report.random_index}, CR = {report.consistency_ratio * 100:.1f}% "
      f"-> {report.status.value}")

# A perfectly consistent set of judgments gives CR = 0 and weights that are
# just the normalized columns.
consistent = build_matrix(["A", "B", "C"], [
    PairwiseJudgment("A", "B", F(3)),
    PairwiseJudgment("A", "C", F(9)),
    PairwiseJudgment("B", "C", F(3)),
])
v = principal_eigenvector(consistent)
print("\nConsistent 3x3:", [round(w, 4) for w in v.weights],
      f"CR = {consistency(v.lambda_max, 3).consistency_ratio:.2e}")

# A circular preference (A > B > C > A) is maximally self-contradictory.
circular = build_matrix(["A", "B", "C"], [
    PairwiseJudgment("A", "B", F(9)),
    PairwiseJudgment("B", "C", F(9)),
    PairwiseJudgment("A", "C", F(1, 9)),
])
v = principal_eigenvector(circular)
r = consistency(v.lambda_max, 3)
print(f"Circular 3x3:   CR = {r.consistency_ratio * 100:.0f}% -> {r.status.value}")
