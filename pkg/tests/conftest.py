import re

import pytest

from wordbug.evaluation import bundled_dataset
from wordbug.model import Prediction, train_bow


class ConstantClassifier:
    class_names = ("neg", "pos")

    def __init__(self, confidences=(0.7, 0.3)):
        self.confidences = tuple(confidences)
        self.calls = 0

    def predict(self, text):
        self.calls += 1
        return Prediction(self.confidences)


class KeywordClassifier:
    """F_pos = hit when any keyword is present as a whole word, else miss."""

    class_names = ("neg", "pos")

    def __init__(self, keywords=("good",), hit=1.0, miss=0.4):
        self.keywords = set(keywords)
        self.hit, self.miss = hit, miss
        self.calls = 0
        self.seen = []

    def predict(self, text):
        self.calls += 1
        self.seen.append(text)
        words = set(re.findall(r"[A-Za-z']+", text.lower()))
        p = self.hit if words & self.keywords else self.miss
        return Prediction((1.0 - p, p))


class TableClassifier:
    """Looks the exact text up in a table of F_pos values."""

    class_names = ("neg", "pos")

    def __init__(self, table, default=0.5):
        self.table = dict(table)
        self.default = default

    def predict(self, text):
        p = self.table.get(text, self.default)
        return Prediction((1.0 - p, p))


@pytest.fixture
def keyword_clf():
    return KeywordClassifier()


@pytest.fixture(scope="session")
def sentiment_train():
    return bundled_dataset("sentiment_train")


@pytest.fixture(scope="session")
def sentiment_test():
    return bundled_dataset("sentiment_test")


@pytest.fixture(scope="session")
def nb_model(sentiment_train):
    return train_bow(sentiment_train.examples, "nb", class_names=sentiment_train.label_names)


@pytest.fixture(scope="session")
def logreg_model(sentiment_train):
    return train_bow(sentiment_train.examples, "logreg", class_names=sentiment_train.label_names)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
