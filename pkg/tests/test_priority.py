"""Comparison matrices, power-iteration priorities, and consistency."""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from ahpq import (AhpError, ConsistencyStatus, PairwiseJudgment, build_matrix,
                  consistency, principal_eigenvector, saaty_random_index)
from ahpq.priority import consistency_status

F = Fraction

SAATY_VALUES = [F(1), F(3), F(5), F(7), F(9), F(1, 3), F(1, 5), F(1, 7), F(1, 9)]

GOAL_JUDGMENTS = [
    PairwiseJudgment("Performance", "Humanity", F(7)),
    PairwiseJudgment("Performance", "Affect", F(7)),
    PairwiseJudgment("Performance", "Accessibility", F(1, 3)),
    PairwiseJudgment("Humanity", "Affect", F(1, 5)),
    PairwiseJudgment("Humanity", "Accessibility", F(1, 7)),
    PairwiseJudgment("Affect", "Accessibility", F(1, 7)),
]
GOAL_ELEMENTS = ["Performance", "Humanity", "Affect", "Accessibility"]

# Dominant eigenvalue of the goal matrix, frozen from a dense eigensolve.
GOAL_LAMBDA_MAX = 4.495578251939143


def dense_eig_oracle(entries: np.ndarray) -> tuple[np.ndarray, float]:
    """Independent priority oracle: full eigen-decomposition."""
    values, vectors = np.linalg.eig(entries)
    i = int(np.argmax(values.real))
    vec = np.abs(vectors[:, i].real)
    return vec / vec.sum(), float(values[i].real)


def random_reciprocal(rng: np.random.RandomState, n: int):
    judgments = []
    names = [f"c{i}" for i in range(n)]
    for a, b in itertools.combinations(names, 2):
        judgments.append(PairwiseJudgment(a, b, SAATY_VALUES[rng.randint(len(SAATY_VALUES))]))
    return build_matrix(names, judgments)


class TestBuildMatrix:
    def test_goal_matrix_rows(self):
        m = build_matrix(GOAL_ELEMENTS, GOAL_JUDGMENTS)
        assert m.ratios == (
            (F(1), F(7), F(7), F(1, 3)),
            (F(1, 7), F(1), F(1, 5), F(1, 7)),
            (F(1, 7), F(5), F(1), F(1, 7)),
            (F(3), F(7), F(7), F(1)),
        )
        # reciprocal fill: the (Accessibility, Performance) cell is 3
        assert m.ratios[3][0] == F(3)

    def test_single_judgment_two_elements(self):
        m = build_matrix(["OLD", "NEW"], [PairwiseJudgment("OLD", "NEW", F(1, 7))])
        assert m.ratios == ((F(1), F(1, 7)), (F(7), F(1)))

    def test_one_element_no_judgments(self):
        m = build_matrix(["ONLY"], [])
        assert m.ratios == ((F(1),),)

    def test_missing_pair(self):
        with pytest.raises(AhpError) as err:
            build_matrix(["A", "B", "C"], [PairwiseJudgment("A", "B", F(3))])
        assert err.value.code == "MISSING_PAIR"

    def test_conflicting_pair(self):
        with pytest.raises(AhpError) as err:
            build_matrix(["A", "B"], [PairwiseJudgment("A", "B", F(3)),
                                      PairwiseJudgment("B", "A", F(3))])
        assert err.value.code == "CONFLICTING_PAIR"

    def test_duplicate_pair(self):
        with pytest.raises(AhpError) as err:
            build_matrix(["A", "B"], [PairwiseJudgment("A", "B", F(3)),
                                      PairwiseJudgment("A", "B", F(3))])
        assert err.value.code == "DUPLICATE_PAIR"

    def test_unknown_element(self):
        with pytest.raises(AhpError) as err:
            build_matrix(["A", "B"], [PairwiseJudgment("A", "X", F(3))])
        assert err.value.code == "UNKNOWN_ELEMENT"

    def test_exact_reciprocity_before_floats(self):
        rng = np.random.RandomState(7)
        for _ in range(25):
            m = random_reciprocal(rng, int(rng.randint(2, 7)))
            for i in range(m.n):
                assert m.ratios[i][i] == F(1)
                for j in range(m.n):
                    assert m.ratios[i][j] * m.ratios[j][i] == F(1)
                    assert m.ratios[i][j] > 0


class TestPrincipalEigenvector:
    def test_two_by_two_closed_form(self):
        m = build_matrix(["A", "B"], [PairwiseJudgment("A", "B", F(7))])
        v = principal_eigenvector(m)
        assert v.weights == (0.875, 0.125)
        assert v.lambda_max == 2.0
        assert v.converged

    def test_goal_matrix_weights(self):
        m = build_matrix(GOAL_ELEMENTS, GOAL_JUDGMENTS)
        v = principal_eigenvector(m)
        for got, expected in zip(v.weights, [0.321, 0.041, 0.094, 0.545]):
            assert got == pytest.approx(expected, abs=1e-3)
        assert v.lambda_max == pytest.approx(4.497, abs=0.01)
        assert v.lambda_max == pytest.approx(GOAL_LAMBDA_MAX, abs=1e-8)

    def test_consistent_matrix_equals_normalized_column(self):
        judgments = [PairwiseJudgment("Transparent", "ThemedDiscussion", F(1, 5)),
                     PairwiseJudgment("Transparent", "SpecificQs", F(1, 5)),
                     PairwiseJudgment("ThemedDiscussion", "SpecificQs", F(1))]
        m = build_matrix(["Transparent", "ThemedDiscussion", "SpecificQs"], judgments)
        v = principal_eigenvector(m)
        for got, expected in zip(v.weights, [1 / 11, 5 / 11, 5 / 11]):
            assert got == pytest.approx(expected, abs=1e-9)
        assert v.lambda_max == pytest.approx(3.0, abs=1e-9)

    def test_weights_sum_to_one_and_positive(self):
        rng = np.random.RandomState(11)
        for _ in range(50):
            m = random_reciprocal(rng, int(rng.randint(1, 8)))
            v = principal_eigenvector(m)
            assert sum(v.weights) == pytest.approx(1.0, abs=1e-9)
            assert all(w > 0 for w in v.weights)
            assert v.lambda_max >= m.n - 1e-9

    def test_matches_dense_oracle(self):
        rng = np.random.RandomState(42)
        for _ in range(40):
            m = random_reciprocal(rng, int(rng.randint(3, 7)))
            v = principal_eigenvector(m)
            oracle_w, oracle_lam = dense_eig_oracle(m.entries)
            assert np.abs(np.array(v.weights) - oracle_w).max() < 1e-8
            assert v.lambda_max == pytest.approx(oracle_lam, abs=1e-8)

    def test_permutation_equivariance(self):
        rng = np.random.RandomState(3)
        m = random_reciprocal(rng, 5)
        v = principal_eigenvector(m)
        order = [4, 2, 0, 3, 1]
        permuted = build_matrix(
            [m.elements[i] for i in order],
            [PairwiseJudgment(m.elements[order[a]], m.elements[order[b]],
                              m.ratios[order[a]][order[b]])
             for a, b in itertools.combinations(range(5), 2)])
        pv = principal_eigenvector(permuted)
        for a in range(5):
            assert pv.weights[a] == pytest.approx(v.weights[order[a]], abs=1e-9)
        assert pv.lambda_max == pytest.approx(v.lambda_max, abs=1e-9)

    def test_start_vector_scaling_is_absorbed_by_normalization(self):
        # One L1-normalized step maps c*v and v to the same iterate.
        rng = np.random.RandomState(5)
        m = random_reciprocal(rng, 4)
        v0 = np.full(4, 0.25)
        for c in (1e-6, 0.5, 3.0, 1e6):
            a = m.entries @ (c * v0)
            b = m.entries @ v0
            assert np.allclose(a / a.sum(), b / b.sum(), atol=1e-12)

    def test_non_convergence_reports_last_iterate(self):
        m = build_matrix(GOAL_ELEMENTS, GOAL_JUDGMENTS)
        v = principal_eigenvector(m, tolerance=0.0, max_iterations=5)
        assert not v.converged
        assert v.iterations == 5
        assert sum(v.weights) == pytest.approx(1.0, abs=1e-9)


class TestConsistency:
    def test_goal_level_report(self):
        report = consistency(GOAL_LAMBDA_MAX, 4)
        assert report.consistency_ratio == pytest.approx(0.184, abs=0.001)
        assert report.random_index == 0.90
        assert report.status is ConsistencyStatus.ACCEPTABLE

    def test_two_by_two_always_ideal(self):
        report = consistency(2.0, 2)
        assert report.consistency_ratio == 0.0
        assert report.status is ConsistencyStatus.IDEAL

    def test_consistent_three_by_three(self):
        report = consistency(3.0, 3)
        assert report.consistency_ratio == 0.0
        assert report.status is ConsistencyStatus.IDEAL

    def test_single_element(self):
        assert consistency(1.0, 1).consistency_ratio == 0.0

    def test_bad_order(self):
        with pytest.raises(AhpError) as err:
            consistency(1.0, 0)
        assert err.value.code == "BAD_ORDER"

    def test_band_boundaries(self):
        assert consistency_status(0.0999) is ConsistencyStatus.IDEAL
        assert consistency_status(0.10) is ConsistencyStatus.ACCEPTABLE
        assert consistency_status(0.15) is ConsistencyStatus.ACCEPTABLE
        assert consistency_status(0.20) is ConsistencyStatus.ACCEPTABLE
        assert consistency_status(0.2001) is ConsistencyStatus.INCONSISTENT


class TestRandomIndex:
    @pytest.mark.parametrize("n,expected", [
        (1, 0.00), (2, 0.00), (3, 0.58), (4, 0.90), (5, 1.12),
        (6, 1.24), (7, 1.32), (8, 1.41), (9, 1.45), (10, 1.49),
    ])
    def test_table(self, n, expected):
        assert saaty_random_index(n) == expected

    def test_orders_above_ten_reuse_order_ten(self):
        assert saaty_random_index(11) == 1.49
        assert saaty_random_index(25) == 1.49

    def test_bad_order(self):
        with pytest.raises(AhpError):
            saaty_random_index(0)

    def test_ri4_back_solves_from_reported_goal_consistency(self):
        # The published 18.4% goal consistency implies RI close to 0.90.
        implied = (GOAL_LAMBDA_MAX - 4) / (3 * 0.184)
        assert implied == pytest.approx(0.90, abs=0.01)
