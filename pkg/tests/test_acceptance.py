"""Acceptance suite: every release criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line
per criterion.
"""

import itertools
import json
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

import ahpq
from ahpq import (PairwiseJudgment, build_matrix, catalog_entries,
                  principal_eigenvector, saaty_random_index, scaffold_model)
from ahpq.cli import run as cli_run

F = Fraction

PP = 0.01  # one percentage point, as a weight fraction


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"criterion {number} FAIL: {description}")
        raise
    print(f"criterion {number} PASS: {description}")


def analyze_json(capsys, example_file) -> dict:
    code = cli_run(["analyze", str(example_file), "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    return json.loads(out)


# Published results table, percent: name -> (weight, OLD, NEW).
PUBLISHED_ROWS = {
    "Goal": (100.0, 66.2, 33.8),
    "Accessibility": (54.5, 39.1, 15.3),
    "MeaningIntent": (47.7, 35.7, 11.9),
    "SocialCues": (6.8, 3.4, 3.4),
    "Performance": (32.1, 24.6, 7.5),
    "UnexpectedInput": (28.1, 21.1, 7.0),
    "Escalation": (4.0, 3.5, 0.5),
    "Affect": (9.4, 1.6, 7.8),
    "Entertaining": (7.8, 1.3, 6.5),
    "Personality": (1.6, 0.3, 1.3),
    "Humanity": (4.1, 1.0, 3.1),
    "SpecificQs": (1.9, 0.3, 1.5),
    "ThemedDiscussion": (1.9, 0.5, 1.4),
    "Transparent": (0.4, 0.2, 0.2),
}

SAATY_VALUES = [F(1), F(3), F(5), F(7), F(9), F(1, 3), F(1, 5), F(1, 7), F(1, 9)]


def test_criterion_1_golden_reproduction(capsys, example_file):
    with criterion(1, "analyze reproduces the published results within 0.15 pp"):
        started = time.perf_counter()
        payload = analyze_json(capsys, example_file)
        elapsed = time.perf_counter() - started

        totals = payload["alternative_totals"]
        assert totals["OLD"] * 100 == pytest.approx(66.2, abs=0.15)
        assert totals["NEW"] * 100 == pytest.approx(33.8, abs=0.15)

        rows = {r["path"][-1] if len(r["path"]) > 1 else "Goal": r
                for r in payload["rows"]}
        for name, (weight, old, new) in PUBLISHED_ROWS.items():
            row = rows[name]
            assert row["global_weight"] * 100 == pytest.approx(weight, abs=0.15), name
            assert row["per_alternative_weight"]["OLD"] * 100 == \
                pytest.approx(old, abs=0.15), name
            assert row["per_alternative_weight"]["NEW"] * 100 == \
                pytest.approx(new, abs=0.15), name
        assert elapsed < 1.0


def test_criterion_2_consistency_reproduction(capsys, example_file):
    with criterion(2, "goal CR is 18.4% +- 0.5 pp with RI4 = 0.90; other nodes 0.0%"):
        assert saaty_random_index(4) == 0.90
        payload = analyze_json(capsys, example_file)
        goal = payload["rows"][0]
        assert goal["consistency"]["consistency_ratio"] * 100 == \
            pytest.approx(18.4, abs=0.5)
        assert goal["consistency"]["random_index"] == 0.90
        for row in payload["rows"][1:]:
            assert row["consistency"]["consistency_ratio"] * 100 == \
                pytest.approx(0.0, abs=0.05), row["path"]


def test_criterion_3_eigenvector_oracle_suite():
    with criterion(3, "power iteration matches a dense eigensolver on 120 "
                      "random reciprocal matrices within 1e-8"):
        started = time.perf_counter()
        rng = np.random.RandomState(20260810)
        checked = 0
        while checked < 120:
            n = int(rng.randint(3, 7))
            names = [f"c{i}" for i in range(n)]
            judgments = [
                PairwiseJudgment(a, b, SAATY_VALUES[rng.randint(len(SAATY_VALUES))])
                for a, b in itertools.combinations(names, 2)]
            matrix = build_matrix(names, judgments)
            vector = principal_eigenvector(matrix)
            assert vector.converged
            assert vector.lambda_max >= n - 1e-9

            values, vectors = np.linalg.eig(matrix.entries)
            i = int(np.argmax(values.real))
            oracle = np.abs(vectors[:, i].real)
            oracle = oracle / oracle.sum()
            assert np.abs(np.array(vector.weights) - oracle).max() < 1e-8
            checked += 1
        assert time.perf_counter() - started < 10.0


def test_criterion_4_consistent_matrix_property():
    with criterion(4, "matrices built from a weight vector give CR < 1e-9 and "
                      "recover the generating weights within 1e-9"):
        rng = np.random.RandomState(4242)
        for _ in range(60):
            n = int(rng.randint(2, 8))
            raw = rng.uniform(0.1, 10.0, size=n)
            weights = [F(float(w)) for w in raw]  # exact rationals of the floats
            names = [f"w{i}" for i in range(n)]
            judgments = [PairwiseJudgment(names[i], names[j],
                                          weights[i] / weights[j])
                         for i, j in itertools.combinations(range(n), 2)]
            matrix = build_matrix(names, judgments)
            vector = principal_eigenvector(matrix)
            report = ahpq.consistency(vector.lambda_max, n)
            assert report.consistency_ratio < 1e-9
            expected = raw / raw.sum()
            assert np.abs(np.array(vector.weights) - expected).max() < 1e-9


def _random_scaffolds(seed, count):
    import dataclasses
    import random

    from ahpq.model import Node

    rng = random.Random(seed)
    for _ in range(count):
        entries = rng.sample(catalog_entries(), rng.randint(2, 10))
        alts = rng.sample(["P", "Q", "R", "S", "T"], rng.randint(2, 5))
        model = scaffold_model([(e.category, e.attribute) for e in entries], alts)

        def randomize(node):
            judgments = tuple(dataclasses.replace(j, value=rng.choice(SAATY_VALUES))
                              for j in node.judgments)
            children = (None if node.children is None
                        else tuple(randomize(c) for c in node.children))
            return Node(node.name, judgments, children)

        yield dataclasses.replace(model, goal=randomize(model.goal))


def test_criterion_5_synthesis_conservation(example_model):
    with criterion(5, "totals sum to 1, child globals sum to parent, and sibling "
                      "permutation leaves weights unchanged (1e-9)"):
        import dataclasses

        models = [example_model] + list(_random_scaffolds(20260811, 20))
        for model in models:
            result = ahpq.evaluate(model)
            assert sum(result.alternative_totals.values()) == \
                pytest.approx(1.0, abs=1e-9)
            rows = {r.path: r for r in result.rows}
            for path, row in rows.items():
                kids = [r for p, r in rows.items()
                        if len(p) == len(path) + 1 and p[:len(path)] == path]
                if kids:
                    assert sum(k.global_weight for k in kids) == \
                        pytest.approx(row.global_weight, abs=1e-9)

            if model.goal.children:
                permuted = dataclasses.replace(
                    model, goal=dataclasses.replace(
                        model.goal, children=tuple(reversed(model.goal.children))))
                other = ahpq.evaluate(permuted)
                for name, total in result.alternative_totals.items():
                    assert other.alternative_totals[name] == \
                        pytest.approx(total, abs=1e-9)
                for row in result.rows:
                    assert other.row_at(row.path).global_weight == \
                        pytest.approx(row.global_weight, abs=1e-9)


def test_criterion_6_format_round_trip(example_model):
    with criterion(6, "parse -> serialize -> parse is structural identity with "
                      "exact rational ratios"):
        assert ahpq.parse_model(ahpq.serialize_model(example_model)) == example_model
        for model in _random_scaffolds(20260812, 20):
            assert ahpq.parse_model(ahpq.serialize_model(model)) == model
        base = ("Version: 2.0\nAlternatives: &alternatives\n  A:\n  B:\n"
                "Goal:\n  name: Ratios\n  preferences:\n    pairwise:\n"
                "      - [A, B, {token}]\n  children: *alternatives\n")
        ratios = [F(n) for n in range(1, 10)] + [F(1, n) for n in range(2, 10)]
        for value in ratios:
            token = (str(value.numerator) if value.denominator == 1
                     else f"{value.numerator}/{value.denominator}")
            model = ahpq.parse_model(base.format(token=token))
            assert model.goal.judgments[0].value == value
            again = ahpq.parse_model(ahpq.serialize_model(model))
            assert again.goal.judgments[0].value == value
            assert again == model


def test_criterion_7_whatif_oracle(example_model):
    with criterion(7, "what-if reallocations match the hand-derived weighted sums"):
        escalation = ahpq.whatif(example_model,
                                 ("Goal", "Performance", "Escalation"),
                                 ("OLD", "NEW"), F(1, 7))
        assert escalation.after.alternative_totals["OLD"] * 100 == \
            pytest.approx(63.3, abs=0.2)

        unexpected = ahpq.whatif(example_model,
                                 ("Goal", "Performance", "UnexpectedInput"),
                                 ("OLD", "NEW"), F(1))
        assert unexpected.after.alternative_totals["OLD"] * 100 == \
            pytest.approx(59.3, abs=0.2)

        noop = ahpq.whatif(example_model, ("Goal", "Performance", "Escalation"),
                           ("OLD", "NEW"), F(7))
        assert set(noop.total_shift.values()) == {0.0}


# Independent copy of the published attribute taxonomy: (dimension, category,
# attribute) rows exactly as printed.
PUBLISHED_TAXONOMY = [
    ("EFFICIENCY", "Performance", "Graceful degradation"),
    ("EFFICIENCY", "Performance", "Robustness to manipulation"),
    ("EFFICIENCY", "Performance", "Robustness to unexpected input"),
    ("EFFICIENCY", "Performance",
     "Avoid inappropriate utterances and be able to perform damage control"),
    ("EFFICIENCY", "Performance",
     "Effective function allocation, provides appropriate escalation channels to humans"),
    ("EFFECTIVENESS", "Functionality", "Accurate speech synthesis"),
    ("EFFECTIVENESS", "Functionality", "Interprets commands accurately"),
    ("EFFECTIVENESS", "Functionality",
     "Use appropriate degrees of formality, linguistic register"),
    ("EFFECTIVENESS", "Functionality", "Linguistic accuracy of outputs"),
    ("EFFECTIVENESS", "Functionality", "Execute requested tasks"),
    ("EFFECTIVENESS", "Functionality",
     "Facilitate transactions and follows up with status reports"),
    ("EFFECTIVENESS", "Functionality", "General ease of use"),
    ("EFFECTIVENESS", "Functionality", "Engage in on-the-fly problem solving"),
    ("EFFECTIVENESS", "Functionality",
     "Contains breadth of knowledge, is flexible in interpreting it"),
    ("EFFECTIVENESS", "Humanity", "Passes the Turing test"),
    ("EFFECTIVENESS", "Humanity", "Does not have to pass the Turing Test"),
    ("EFFECTIVENESS", "Humanity",
     "Transparent to inspection, discloses its chatbot identity"),
    ("EFFECTIVENESS", "Humanity", "Include errors to increase realism"),
    ("EFFECTIVENESS", "Humanity", "Convincing, satisfying, & natural interaction"),
    ("EFFECTIVENESS", "Humanity", "Able to respond to specific questions"),
    ("EFFECTIVENESS", "Humanity", "Able to maintain themed discussion"),
    ("SATISFACTION", "Affect", "Provide greetings, convey personality"),
    ("SATISFACTION", "Affect", "Give conversational cues"),
    ("SATISFACTION", "Affect",
     "Provide emotional information through tone, inflection, and expressivity"),
    ("SATISFACTION", "Affect", "Exude warmth and authenticity"),
    ("SATISFACTION", "Affect", "Make tasks more fun and interesting"),
    ("SATISFACTION", "Affect",
     "Entertain and/or enable participant to enjoy the interaction"),
    ("SATISFACTION", "Affect", "Read and respond to moods of human participant"),
    ("SATISFACTION", "EthicsBehavior",
     "Respect, inclusion, and preservation of dignity (linked to choice of training set)"),
    ("SATISFACTION", "EthicsBehavior", "Ethics and cultural knowledge of users"),
    ("SATISFACTION", "EthicsBehavior", "Protect and respect privacy"),
    ("SATISFACTION", "EthicsBehavior", "Nondeception"),
    ("SATISFACTION", "EthicsBehavior", "Sensitivity to safety and social concerns"),
    ("SATISFACTION", "EthicsBehavior", "Trustworthiness (linked to perceived quality)"),
    ("SATISFACTION", "EthicsBehavior", "Awareness of trends and social context"),
    ("SATISFACTION", "Accessibility", "Responds to social cues or lack thereof"),
    ("SATISFACTION", "Accessibility", "Can detect meaning or intent"),
    ("SATISFACTION", "Accessibility",
     "Meets neurodiverse needs such as extra response time and text interface"),
]


def test_criterion_8_catalog_integrity():
    with criterion(8, "catalog carries every taxonomy row verbatim and the nine "
                      "example measurements attach to the scaffolded model"):
        shipped = {(e.usability_dimension.value, e.category.value, e.attribute)
                   for e in catalog_entries()}
        for row in PUBLISHED_TAXONOMY:
            assert row in shipped, row
        assert len(catalog_entries()) == len(PUBLISHED_TAXONOMY)

        from ahpq.catalog import dump_metrics_csv, load_metrics_csv

        records = ahpq.example_metric_records()
        assert len(records) == 9
        reloaded = load_metrics_csv(dump_metrics_csv(records))
        assert sorted(r.attribute for r in reloaded) == \
            sorted(r.attribute for r in records)

        selection = [("Performance", "UnexpectedInput"),
                     ("Performance", "Escalation"),
                     ("Humanity", "Transparent"),
                     ("Humanity", "ThemedDiscussion"),
                     ("Humanity", "SpecificQs"),
                     ("Affect", "Personality"),
                     ("Affect", "Entertaining"),
                     ("Accessibility", "MeaningIntent"),
                     ("Accessibility", "SocialCues")]
        model = scaffold_model(selection, ["OLD", "NEW"])
        annotated = ahpq.attach_metrics(model, reloaded)
        assert len(annotated.metrics) == 9
        assert ahpq.evaluate(annotated).alternative_totals == \
            ahpq.evaluate(model).alternative_totals
