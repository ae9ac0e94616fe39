"""Leave-one-out word importance, sentence ordering and POS-tag weight calibration."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .model import Classifier, CountingClassifier
from .text import Document, make_document

NORMALIZATIONS = ("frequency_softmax", "raw_softmax")


class ScoringError(ValueError):
    pass


@dataclass(frozen=True)
class WordScore:
    word_index: int
    contribution: float
    queries_spent: int = 1


@dataclass
class PosWeights:
    weights: dict[str, float]
    counts: dict[str, int]
    normalization: str = "frequency_softmax"
    meta: dict = field(default_factory=dict)

    def weight(self, tag) -> float:
        return self.weights.get(str(tag), 0.0)

    def auto_threshold(self) -> float:
        return 1.0 / len(self.counts)

    def to_dict(self) -> dict:
        return {
            "normalization": self.normalization,
            "counts": dict(sorted(self.counts.items())),
            "weights": dict(sorted(self.weights.items())),
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, d: dict) -> PosWeights:
        return cls(
            weights={k: float(v) for k, v in d["weights"].items()},
            counts={k: int(v) for k, v in d["counts"].items()},
            normalization=d.get("normalization", "frequency_softmax"),
            meta=d.get("meta", {}),
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> PosWeights:
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def softmax(scores: Mapping[str, float]) -> dict[str, float]:
    """Max-shifted softmax over a tag -> score mapping."""
    if not scores:
        raise ScoringError("softmax of an empty mapping")
    top = max(scores.values())
    exp = {k: math.exp(v - top) for k, v in scores.items()}
    total = math.fsum(exp.values())
    return {k: v / total for k, v in exp.items()}


def _counted(classifier: Classifier | CountingClassifier) -> CountingClassifier:
    if isinstance(classifier, CountingClassifier):
        return classifier
    return CountingClassifier(classifier)


def word_contribution(doc: Document, j: int, classifier: CountingClassifier, y: int, cache: float,
                      replacements: Mapping[int, str] | None = None, phase: str = "word_scoring") -> WordScore:
    """Confidence drop on label ``y`` when word ``j`` is removed.

    ``cache`` is the confidence of the full (possibly already perturbed) text,
    so exactly one query is spent here.
    """
    if not 0 <= j < doc.word_count:
        raise ScoringError(f"word index {j} out of range for {doc.word_count} words")
    reduced = doc.render(replacements, drop=j)
    pred = classifier.predict(reduced, phase)
    return WordScore(j, cache - pred.confidence(y), 1)


def sentence_scores(doc: Document, classifier: CountingClassifier, y: int, *, descending: bool = True,
                    phase: str = "sentence_scoring", max_queries: int | None = None) -> list[int]:
    """Sentence indices ordered by standalone confidence for ``y``.

    One query per sentence.  Ties keep document order.  When ``max_queries``
    runs out part-way, the sentences scored so far are returned.
    """
    if not doc.sentences:
        raise ScoringError("document has no sentences")
    conf = []
    for i, sentence in enumerate(doc.sentences):
        if max_queries is not None and classifier.counter.calls >= max_queries:
            break
        conf.append((classifier.predict(sentence, phase).confidence(y), i))
    sign = -1.0 if descending else 1.0
    return [i for _, i in sorted(conf, key=lambda ci: (sign * ci[0], ci[1]))]


def max_drop_word(doc: Document, classifier: CountingClassifier, y: int, cache: float,
                  phase: str = "calibration") -> WordScore | None:
    best = None
    for j in range(doc.word_count):
        score = word_contribution(doc, j, classifier, y, cache, phase=phase)
        if best is None or score.contribution > best.contribution:
            best = score
    return best


def calibrate_pos_weights(dataset: Iterable[tuple[str, str | int]], classifier: Classifier | CountingClassifier,
                          normalization: str = "frequency_softmax", *, label_names: Sequence[str] | None = None,
                          meta: Mapping | None = None) -> PosWeights:
    """Count which POS tag the most important word carries, document by document.

    ``dataset`` holds ``(label, text)`` pairs; labels are class names or
    indices.  Documents the classifier already gets wrong are skipped after
    their single full-text query.  Each counted document of N words costs
    N + 1 queries.
    """
    if normalization not in NORMALIZATIONS:
        raise ScoringError(f"unknown normalization {normalization!r}")
    clf = _counted(classifier)
    names = list(label_names if label_names is not None else clf.class_names)
    counts: Counter = Counter()
    seen = skipped = 0
    for label, text in dataset:
        seen += 1
        y = label if isinstance(label, int) else names.index(label)
        doc = make_document(text)
        full = clf.predict(text, "calibration")
        if full.label != y or doc.word_count == 0:
            skipped += 1
            continue
        best = max_drop_word(doc, clf, y, full.confidence(y))
        counts[str(doc.words[best.word_index].tag)] += 1
    if seen == 0:
        raise ScoringError("empty calibration dataset")
    if not counts:
        raise ScoringError("every calibration document was misclassified or wordless")

    total = sum(counts.values())
    if normalization == "frequency_softmax":
        weights = softmax({t: c / total for t, c in counts.items()})
    else:
        weights = softmax({t: float(c) for t, c in counts.items()})
    info = {"documents": seen, "counted": total, "skipped": skipped, "queries": clf.counter.phase("calibration")}
    info.update(meta or {})
    return PosWeights(weights=weights, counts=dict(counts), normalization=normalization, meta=info)

