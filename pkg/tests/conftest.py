import pytest

import ahpq


@pytest.fixture(scope="session")
def example_text() -> str:
    return ahpq.example_model_text()


@pytest.fixture(scope="session")
def example_model(example_text):
    return ahpq.parse_model(example_text)


@pytest.fixture(scope="session")
def example_result(example_model):
    return ahpq.evaluate(example_model)


@pytest.fixture()
def example_file(tmp_path, example_text):
    path = tmp_path / "select_chatbots.yaml"
    path.write_text(example_text, encoding="utf-8")
    return path
