"""Black-box attack strategies sharing one word-modification step.

All four strategies follow the same skeleton: one query for the original
prediction, a strategy-specific ordering of candidate words, then greedy
best-of-four modification of each candidate in turn until the label flips,
the word budget is spent or the query cap is reached.  They differ only in
how the candidate order is obtained and what it costs:

    fastwordbug           sentence ordering + POS-weight filter (no word queries)
    fastwordbug_rescored  as above, survivors re-ranked by leave-one-out drop
    deepwordbug           leave-one-out drop of every word, global order
    textbugger_bb         sentence ordering, then leave-one-out within each
                          sentence, scored lazily one sentence at a time
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable

from .model import Classifier, CountingClassifier, Prediction, QueryCounter
from .perturb import Perturbation, best_modification
from .scoring import PosWeights, sentence_scores, word_contribution
from .text import Document, make_document

STRATEGIES = ("fastwordbug", "fastwordbug_rescored", "deepwordbug", "textbugger_bb")
AUTO = "auto"


class AttackError(ValueError):
    pass


@dataclass(frozen=True)
class AttackConfig:
    epsilon: float = 0.1
    tag_threshold: float | str = AUTO
    seed: int = 0
    strategy: str = "fastwordbug"
    max_queries: int | None = None
    fallback_threshold_zero: bool = False
    sentence_order: str = "descending"

    def __post_init__(self):
        if not 0.0 < self.epsilon <= 1.0:
            raise AttackError(f"epsilon must be in (0, 1], got {self.epsilon}")
        if self.tag_threshold != AUTO and not 0.0 <= float(self.tag_threshold) <= 1.0:
            raise AttackError(f"tag_threshold must be in [0, 1] or 'auto', got {self.tag_threshold}")
        if self.strategy not in STRATEGIES:
            raise AttackError(f"unknown strategy {self.strategy!r}")
        if self.sentence_order not in ("descending", "ascending"):
            raise AttackError(f"unknown sentence order {self.sentence_order!r}")
        if self.max_queries is not None and self.max_queries < 0:
            raise AttackError("max_queries must be non-negative")

    def budget(self, word_count: int) -> int:
        # the epsilon guard keeps e.g. 0.29 * 100 from flooring to 28
        return math.floor(self.epsilon * word_count + 1e-9)


@dataclass
class AttackResult:
    success: bool
    adversarial_text: str
    original_text: str
    original_prediction: Prediction
    final_prediction: Prediction
    perturbations: list[Perturbation]
    word_count: int
    queries: QueryCounter
    strategy: str
    skipped: bool = False
    gold_label: int | None = None
    attacked_label: int | None = None

    @property
    def perturbed_fraction(self) -> float:
        return len(self.perturbations) / self.word_count if self.word_count else 0.0

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "success": self.success,
            "skipped": self.skipped,
            "original_text": self.original_text,
            "adversarial_text": self.adversarial_text,
            "gold_label": self.gold_label,
            "attacked_label": self.attacked_label,
            "original_prediction": self.original_prediction.to_dict(),
            "final_prediction": self.final_prediction.to_dict(),
            "perturbations": [p.to_dict() for p in self.perturbations],
            "word_count": self.word_count,
            "perturbed_fraction": self.perturbed_fraction,
            "queries": self.queries.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> AttackResult:
        q = d["queries"]
        return cls(
            success=d["success"],
            adversarial_text=d["adversarial_text"],
            original_text=d["original_text"],
            original_prediction=Prediction(tuple(d["original_prediction"]["confidences"])),
            final_prediction=Prediction(tuple(d["final_prediction"]["confidences"])),
            perturbations=[Perturbation.from_dict(p) for p in d["perturbations"]],
            word_count=d["word_count"],
            queries=QueryCounter(q["calls"], dict(q["phase_marks"])),
            strategy=d["strategy"],
            skipped=d.get("skipped", False),
            gold_label=d.get("gold_label"),
            attacked_label=d.get("attacked_label"),
        )


class _Run:
    """Mutable state of one attack on one document."""

    def __init__(self, doc: Document, classifier: Classifier, config: AttackConfig,
                 rng: random.Random | None, gold: int | None):
        if not doc.original_text.strip():
            raise AttackError("cannot attack an empty document")
        self.doc = doc
        self.config = config
        self.clf = CountingClassifier(classifier)
        self.rng = rng if rng is not None else random.Random(config.seed)
        self.gold = gold
        self.replacements: dict[int, str] = {}
        self.perturbations: list[Perturbation] = []
        self.original = self.clf.predict(doc.original_text, "initial")
        self.y = self.original.label
        self.current = self.original
        self.budget = config.budget(doc.word_count)

    @property
    def out_of_queries(self) -> bool:
        cap = self.config.max_queries
        return cap is not None and self.clf.counter.calls >= cap

    @property
    def confidence(self) -> float:
        return self.current.confidence(self.y)

    @property
    def flipped(self) -> bool:
        return self.current.label != self.y

    def should_skip(self) -> bool:
        return self.gold is not None and self.original.label != self.gold

    def sentence_order(self) -> list[int] | None:
        order = sentence_scores(self.doc, self.clf, self.y,
                                descending=self.config.sentence_order == "descending",
                                max_queries=self.config.max_queries)
        return order if len(order) == len(self.doc.sentences) else None

    def score(self, indices: Iterable[int]) -> list[tuple[float, int]] | None:
        scores = []
        for j in indices:
            if self.out_of_queries:
                return None
            s = word_contribution(self.doc, j, self.clf, self.y, self.confidence, self.replacements)
            scores.append((s.contribution, j))
        return scores

    def modify(self, candidates: Iterable[int]) -> bool:
        """Greedy modification pass; True when the attack should stop."""
        for j in candidates:
            if self.flipped:
                return True
            if len(self.perturbations) >= self.budget or self.out_of_queries:
                return True
            if j in self.replacements:
                continue
            mod = best_modification(self.doc, self.replacements, j, self.clf, self.y, self.rng, self.confidence)
            if mod is not None:
                self.replacements[j] = mod.perturbation.modified_word
                self.perturbations.append(mod.perturbation)
                self.current = mod.prediction
        return self.flipped or len(self.perturbations) >= self.budget or self.out_of_queries

    def result(self, strategy: str, skipped: bool = False) -> AttackResult:
        return AttackResult(
            success=self.flipped,
            adversarial_text=self.doc.render(self.replacements),
            original_text=self.doc.original_text,
            original_prediction=self.original,
            final_prediction=self.current,
            perturbations=list(self.perturbations),
            word_count=self.doc.word_count,
            queries=self.clf.counter.snapshot(),
            strategy=strategy,
            skipped=skipped,
            gold_label=self.gold,
            attacked_label=self.y,
        )


def _by_score(scores: list[tuple[float, int]]) -> list[int]:
    # descending contribution; ties keep the incoming order
    return [j for _, j in sorted(scores, key=lambda s: -s[0])]


def _filtered_words(run: _Run, order: list[int], pos_weights: PosWeights, threshold: float) -> list[int]:
    """Words in sentence order whose tag weight strictly exceeds ``threshold``.  No queries."""
    keep = []
    for s in order:
        for tok in run.doc.sentence_words(s):
            if pos_weights.weight(tok.tag) > threshold:
                keep.append(tok.word_index)
    return keep


def _fastwordbug(run: _Run, pos_weights: PosWeights, rescored: bool) -> None:
    order = run.sentence_order()
    if order is None:
        return
    cfg = run.config
    threshold = pos_weights.auto_threshold() if cfg.tag_threshold == AUTO else float(cfg.tag_threshold)
    words = _filtered_words(run, order, pos_weights, threshold)
    if not words and cfg.fallback_threshold_zero:
        words = _filtered_words(run, order, pos_weights, 0.0)
    if rescored:
        scores = run.score(words)
        if scores is None:
            return
        words = _by_score(scores)
    run.modify(words)


def _deepwordbug(run: _Run) -> None:
    scores = run.score(range(run.doc.word_count))
    if scores is None:
        return
    run.modify(_by_score(scores))


def _textbugger(run: _Run) -> None:
    order = run.sentence_order()
    if order is None:
        return
    for s in order:
        words = [t.word_index for t in run.doc.sentence_words(s)]
        if not words:
            continue
        scores = run.score(words)
        if scores is None:
            return
        if run.modify(_by_score(scores)):
            return


def _attack(doc: Document | str, classifier: Classifier, config: AttackConfig, strategy: str,
            pos_weights: PosWeights | None = None, *, gold_label: int | None = None,
            rng: random.Random | None = None) -> AttackResult:
    if isinstance(doc, str):
        doc = make_document(doc)
    run = _Run(doc, classifier, config, rng, gold_label)
    if run.should_skip():
        return run.result(strategy, skipped=True)
    if run.budget > 0:
        if strategy in ("fastwordbug", "fastwordbug_rescored"):
            if pos_weights is None:
                raise AttackError(f"{strategy} needs calibrated POS weights")
            _fastwordbug(run, pos_weights, rescored=strategy == "fastwordbug_rescored")
        elif strategy == "deepwordbug":
            _deepwordbug(run)
        elif strategy == "textbugger_bb":
            _textbugger(run)
        else:
            raise AttackError(f"unknown strategy {strategy!r}")
    return run.result(strategy)


def attack_fastwordbug(doc, classifier, pos_weights, config, **kw) -> AttackResult:
    return _attack(doc, classifier, config, "fastwordbug", pos_weights, **kw)


def attack_fastwordbug_rescored(doc, classifier, pos_weights, config, **kw) -> AttackResult:
    return _attack(doc, classifier, config, "fastwordbug_rescored", pos_weights, **kw)


def attack_deepwordbug(doc, classifier, config, **kw) -> AttackResult:
    return _attack(doc, classifier, config, "deepwordbug", **kw)


def attack_textbugger_bb(doc, classifier, config, **kw) -> AttackResult:
    return _attack(doc, classifier, config, "textbugger_bb", **kw)


def run_attack(doc, classifier, config: AttackConfig, pos_weights: PosWeights | None = None, **kw) -> AttackResult:
    """Dispatch on ``config.strategy``."""
    return _attack(doc, classifier, config, config.strategy, pos_weights, **kw)
