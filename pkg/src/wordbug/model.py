"""Classifier abstraction, query accounting and the bundled bag-of-words models."""

from __future__ import annotations

import json
import logging
import math
import re
import threading
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Protocol, Sequence

import numpy as np
import requests

log = logging.getLogger(__name__)

PHASES = ("calibration", "initial", "sentence_scoring", "word_scoring", "modification")


class ClassifierError(Exception):
    pass


class TrainingError(ClassifierError):
    pass


class RemoteClassifierError(ClassifierError):
    pass


class RemoteNetworkError(RemoteClassifierError):
    pass


class RemoteStatusError(RemoteClassifierError):
    def __init__(self, status: int, body: str = ""):
        super().__init__(f"remote classifier returned HTTP {status}: {body[:200]}")
        self.status = status


class RemoteResponseError(RemoteClassifierError):
    pass


class LabelMismatchError(RemoteClassifierError):
    pass


@dataclass(frozen=True)
class Prediction:
    confidences: tuple[float, ...]

    def __post_init__(self):
        conf = tuple(float(c) for c in self.confidences)
        if not conf:
            raise ValueError("prediction needs at least one class")
        if any(not (0.0 <= c <= 1.0) for c in conf):
            raise ValueError(f"confidences out of [0, 1]: {conf}")
        if abs(math.fsum(conf) - 1.0) > 1e-9:
            raise ValueError(f"confidences sum to {math.fsum(conf)}, not 1")
        object.__setattr__(self, "confidences", conf)

    @property
    def label(self) -> int:
        # max() returns the first maximal element, i.e. the lowest index on ties
        return max(range(len(self.confidences)), key=self.confidences.__getitem__)

    def confidence(self, y: int) -> float:
        return self.confidences[y]

    @classmethod
    def from_scores(cls, scores: Iterable[float]) -> Prediction:
        s = np.asarray(list(scores), dtype=float)
        return cls(tuple((s / s.sum()).tolist()))

    def to_dict(self) -> dict:
        return {"label": self.label, "confidences": list(self.confidences)}


class Classifier(Protocol):
    class_names: Sequence[str]

    def predict(self, text: str) -> Prediction: ...


# -- query accounting ----------------------------------------------------------

@dataclass
class QueryCounter:
    calls: int = 0
    phase_marks: dict[str, int] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def increment(self, phase: str) -> None:
        if phase not in PHASES:
            raise ValueError(f"unknown phase {phase!r}")
        with self._lock:
            self.calls += 1
            self.phase_marks[phase] = self.phase_marks.get(phase, 0) + 1

    def reset(self) -> None:
        with self._lock:
            self.calls = 0
            self.phase_marks.clear()

    def snapshot(self) -> QueryCounter:
        with self._lock:
            return QueryCounter(self.calls, dict(self.phase_marks))

    def phase(self, name: str) -> int:
        return self.phase_marks.get(name, 0)

    def to_dict(self) -> dict:
        return {"calls": self.calls, "phase_marks": dict(sorted(self.phase_marks.items()))}


def reset_counter(counter: QueryCounter) -> None:
    counter.reset()


def read_counter(counter: QueryCounter) -> QueryCounter:
    return counter.snapshot()


class CountingClassifier:
    """Wrap any classifier so every prediction is charged to a phase.

    The counter is incremented before the underlying call so that failed
    remote queries are still accounted for.
    """

    def __init__(self, classifier: Classifier, counter: QueryCounter | None = None):
        self.classifier = classifier
        self.counter = counter if counter is not None else QueryCounter()

    @property
    def class_names(self) -> Sequence[str]:
        return self.classifier.class_names

    def predict(self, text: str, phase: str) -> Prediction:
        self.counter.increment(phase)
        return self.classifier.predict(text)


def predict(classifier: Classifier | CountingClassifier, text: str, phase: str | None = None) -> Prediction:
    if isinstance(classifier, CountingClassifier):
        if phase is None:
            raise ValueError("a phase is required when querying a counted classifier")
        return classifier.predict(text, phase)
    return classifier.predict(text)


# -- bag-of-words models ----------------------------------------------------------

_FEATURE = re.compile(r"[^\W\d_]+(?:['’\-][^\W\d_]+)*")


def bow_tokens(text: str) -> list[str]:
    return _FEATURE.findall(text.lower())


class BowClassifier:
    """Multinomial naive Bayes or one-vs-rest logistic regression over word counts.

    Words outside ``vocabulary`` are dropped before scoring, so they carry no
    evidence at all.  Instances are immutable after construction.
    """

    def __init__(self, variant: str, class_names: Sequence[str], vocabulary: dict[str, int],
                 weights: np.ndarray, bias: np.ndarray):
        if variant not in ("nb", "logreg"):
            raise ValueError(f"unknown variant {variant!r}")
        self.variant = variant
        self.class_names = tuple(class_names)
        self.vocabulary = dict(vocabulary)
        # nb: weights are log-likelihoods, bias log-priors; logreg: linear weights
        self.weights = np.asarray(weights, dtype=float)
        self.bias = np.asarray(bias, dtype=float)
        self.weights.setflags(write=False)
        self.bias.setflags(write=False)
        if self.weights.shape != (len(self.class_names), len(self.vocabulary)):
            raise ValueError("weight matrix shape does not match classes x vocabulary")

    def features(self, text: str) -> Counter:
        vocab = self.vocabulary
        return Counter(vocab[w] for w in bow_tokens(text) if w in vocab)

    def decision(self, text: str) -> np.ndarray:
        counts = self.features(text)
        scores = self.bias.copy()
        if counts:
            idx = np.fromiter(counts.keys(), dtype=np.intp, count=len(counts))
            val = np.fromiter(counts.values(), dtype=float, count=len(counts))
            scores = scores + self.weights[:, idx] @ val
        return scores

    def predict(self, text: str) -> Prediction:
        scores = self.decision(text)
        if self.variant == "nb":
            p = np.exp(scores - scores.max())
        else:
            p = 1.0 / (1.0 + np.exp(-scores))
            p = np.maximum(p, 1e-300)
        return Prediction.from_scores(p)

    def to_dict(self) -> dict:
        if self.variant == "nb":
            params = {"log_priors": self.bias.tolist(), "log_likelihoods": self.weights.tolist()}
        else:
            params = {"bias": self.bias.tolist(), "weights": self.weights.tolist()}
        return {
            "variant": self.variant,
            "class_names": list(self.class_names),
            "vocabulary": self.vocabulary,
            "parameters": params,
        }

    @classmethod
    def from_dict(cls, d: dict) -> BowClassifier:
        p = d["parameters"]
        if d["variant"] == "nb":
            weights, bias = p["log_likelihoods"], p["log_priors"]
        else:
            weights, bias = p["weights"], p["bias"]
        n_classes = len(d["class_names"])
        weights = np.asarray(weights, dtype=float).reshape(n_classes, len(d["vocabulary"]))
        return cls(d["variant"], d["class_names"], d["vocabulary"], weights, bias)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict()), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> BowClassifier:
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def train_bow(corpus: Sequence[tuple[str, str]], variant: str = "nb", *, class_names: Sequence[str] | None = None,
              alpha: float = 1.0, iterations: int = 300, learning_rate: float = 0.1,
              l2: float = 1e-3, seed: int = 0) -> BowClassifier:
    """Train a bag-of-words classifier on ``(label, text)`` pairs.

    Naive Bayes uses additive smoothing ``alpha`` (1 = add-one).  Logistic
    regression runs ``iterations`` full-batch gradient steps per one-vs-rest
    problem on raw counts, from a seeded small random init.
    """
    if not corpus:
        raise TrainingError("empty corpus")
    if class_names is None:
        class_names = list(dict.fromkeys(label for label, _ in corpus))
    class_index = {c: i for i, c in enumerate(class_names)}
    unknown = {label for label, _ in corpus} - class_index.keys()
    if unknown:
        raise TrainingError(f"labels not in class_names: {sorted(unknown)}")
    present = {label for label, _ in corpus}
    if len(present) < 2 or len(present) < len(class_names):
        raise TrainingError("need at least 2 classes, each with at least one example")

    docs = [bow_tokens(text) for _, text in corpus]
    vocabulary: dict[str, int] = {}
    for toks in docs:
        for w in toks:
            vocabulary.setdefault(w, len(vocabulary))
    vocabulary = {w: i for i, w in enumerate(sorted(vocabulary))}
    n_classes, n_vocab = len(class_names), len(vocabulary)
    y = np.array([class_index[label] for label, _ in corpus])
    X = np.zeros((len(docs), n_vocab))
    for r, toks in enumerate(docs):
        for w in toks:
            X[r, vocabulary[w]] += 1.0

    if variant == "nb":
        counts = np.zeros((n_classes, n_vocab))
        for k in range(n_classes):
            counts[k] = X[y == k].sum(axis=0)
        smoothed = counts + alpha
        log_lik = np.log(smoothed) - np.log(smoothed.sum(axis=1, keepdims=True))
        doc_counts = np.bincount(y, minlength=n_classes).astype(float)
        log_prior = np.log(doc_counts) - np.log(doc_counts.sum())
        return BowClassifier("nb", class_names, vocabulary, log_lik, log_prior)
    if variant != "logreg":
        raise TrainingError(f"unknown variant {variant!r}")

    rng = np.random.default_rng(seed)
    W = rng.normal(scale=0.01, size=(n_classes, n_vocab))
    b = np.zeros(n_classes)
    n = len(docs)
    for k in range(n_classes):
        t = (y == k).astype(float)
        w, bk = W[k].copy(), 0.0
        for _ in range(iterations):
            p = 1.0 / (1.0 + np.exp(-(X @ w + bk)))
            err = p - t
            w -= learning_rate * (X.T @ err / n + l2 * w)
            bk -= learning_rate * err.mean()
        W[k], b[k] = w, bk
    return BowClassifier("logreg", class_names, vocabulary, W, b)


# -- remote classifier -----------------------------------------------------------

class RemoteClassifier:
    """Client for the JSON-over-HTTP classifier protocol.

    Request: ``POST {"text": ...}``.  Response: ``{"labels": [...],
    "confidences": [...]}`` as parallel arrays.  Confidences are renormalized
    when their sum is within 1% of one; anything further off is rejected.
    """

    def __init__(self, endpoint_url: str, label_names: Sequence[str] | None = None, *,
                 timeout: float = 10.0, retries: int = 2, backoff: float = 0.1,
                 session: requests.Session | None = None):
        if not endpoint_url.startswith(("http://", "https://")):
            raise ValueError(f"not an http(s) URL: {endpoint_url!r}")
        self.endpoint_url = endpoint_url
        self.label_names = tuple(label_names) if label_names is not None else None
        self.timeout = timeout
        self.retries = retries
        self.backoff = backoff
        self.session = session or requests.Session()

    @property
    def class_names(self) -> tuple[str, ...]:
        if self.label_names is None:
            raise ClassifierError("label names unknown until set or fetched from a response")
        return self.label_names

    def _post(self, text: str) -> requests.Response:
        last = None
        for attempt in range(self.retries + 1):
            try:
                return self.session.post(self.endpoint_url, json={"text": text}, timeout=self.timeout)
            except requests.RequestException as exc:
                last = exc
                log.warning("remote classifier attempt %d failed: %s", attempt + 1, exc)
                if attempt < self.retries:
                    time.sleep(self.backoff * (2 ** attempt))
        raise RemoteNetworkError(f"could not reach {self.endpoint_url}: {last}") from last

    def predict(self, text: str) -> Prediction:
        resp = self._post(text)
        if resp.status_code != 200:
            raise RemoteStatusError(resp.status_code, resp.text)
        try:
            body = resp.json()
            labels = [str(x) for x in body["labels"]]
            conf = [float(x) for x in body["confidences"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise RemoteResponseError(f"malformed response: {resp.text[:200]!r}") from exc
        return self.parse_response(labels, conf)

    def parse_response(self, labels: list[str], conf: list[float]) -> Prediction:
        if len(labels) != len(conf) or not labels:
            raise RemoteResponseError("labels and confidences must be non-empty parallel arrays")
        if len(set(labels)) != len(labels):
            raise RemoteResponseError(f"duplicate labels in response: {labels}")
        if any(not math.isfinite(c) or c < 0 for c in conf):
            raise RemoteResponseError(f"invalid confidences: {conf}")
        if self.label_names is None:
            self.label_names = tuple(labels)
        if set(labels) != set(self.label_names):
            raise LabelMismatchError(f"response labels {labels} do not match {list(self.label_names)}")
        by_label = dict(zip(labels, conf))
        ordered = [by_label[name] for name in self.label_names]
        total = math.fsum(ordered)
        if abs(total - 1.0) > 0.01:
            raise RemoteResponseError(f"confidences sum to {total}, outside the 1% renormalization band")
        if abs(total - 1.0) > 1e-9:
            ordered = [c / total for c in ordered]
        return Prediction(tuple(ordered))


def remote_classifier(endpoint_url: str, label_names: Sequence[str] | None = None, **kwargs) -> RemoteClassifier:
    return RemoteClassifier(endpoint_url, label_names, **kwargs)


def load_classifier(path: str | Path) -> BowClassifier:
    return BowClassifier.load(path)
