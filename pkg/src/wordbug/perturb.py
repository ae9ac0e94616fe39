"""Character-level word perturbations and best-of-four selection.

Random draws come from a ``random.Random`` supplied by the caller, in a fixed
order per operator (documented on each function) so runs replay exactly.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass, replace
from typing import Callable, Mapping

from .model import CountingClassifier, Prediction
from .text import Document

LETTERS = string.ascii_lowercase
KINDS = ("swap", "substitute", "delete", "insert")


class PerturbationError(ValueError):
    pass


@dataclass(frozen=True)
class Perturbation:
    kind: str
    position: int
    original_word: str
    modified_word: str
    replacement_char: str | None = None
    word_index: int | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "position": self.position,
            "replacement_char": self.replacement_char,
            "original_word": self.original_word,
            "modified_word": self.modified_word,
            "word_index": self.word_index,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Perturbation:
        return cls(d["kind"], d["position"], d["original_word"], d["modified_word"],
                   d.get("replacement_char"), d.get("word_index"))


def seeded_rng(seed: int) -> random.Random:
    return random.Random(seed)


def _match_case(letter: str, like: str) -> str:
    return letter.upper() if like.isupper() else letter


def swap(word: str, rng: random.Random, position: int | None = None) -> Perturbation:
    """Exchange two adjacent, different letters.

    Draw order: one ``randrange`` over the eligible pairs.  ``position`` forces
    the pair (position, position + 1).
    """
    if len(word) < 2:
        raise PerturbationError(f"swap needs at least 2 characters: {word!r}")
    pairs = [i for i in range(len(word) - 1)
             if word[i] != word[i + 1] and word[i].isalpha() and word[i + 1].isalpha()]
    if not pairs:
        raise PerturbationError(f"no swappable adjacent pair in {word!r}")
    if position is None:
        i = pairs[rng.randrange(len(pairs))]
    elif position in pairs:
        i = position
    else:
        raise PerturbationError(f"pair ({position}, {position + 1}) not swappable in {word!r}")
    new = word[:i] + word[i + 1] + word[i] + word[i + 2:]
    return Perturbation("swap", i, word, new)


def substitute(word: str, rng: random.Random) -> Perturbation:
    """Replace one letter with a different random letter.

    Draw order: position over the alphabetic characters, then the letter from
    a-z minus the original (lowercased).  Uppercase positions get uppercase
    replacements.
    """
    positions = [i for i, ch in enumerate(word) if ch.isalpha()]
    if not positions:
        raise PerturbationError(f"nothing to substitute in {word!r}")
    i = positions[rng.randrange(len(positions))]
    choices = [c for c in LETTERS if c != word[i].lower()]
    ch = _match_case(choices[rng.randrange(len(choices))], word[i])
    return Perturbation("substitute", i, word, word[:i] + ch + word[i + 1:], ch)


def delete(word: str, rng: random.Random, position: int | None = None) -> Perturbation:
    """Remove one character.  Draw order: a single position ``randrange``."""
    if len(word) < 2:
        raise PerturbationError(f"delete needs at least 2 characters: {word!r}")
    i = rng.randrange(len(word)) if position is None else position
    if not 0 <= i < len(word):
        raise PerturbationError(f"position {i} out of range for {word!r}")
    return Perturbation("delete", i, word, word[:i] + word[i + 1:])


def insert(word: str, rng: random.Random) -> Perturbation:
    """Insert a random letter.  Draw order: gap in 0..len, then letter a-z."""
    if not word:
        raise PerturbationError("cannot insert into an empty word")
    i = rng.randrange(len(word) + 1)
    ch = LETTERS[rng.randrange(len(LETTERS))]
    return Perturbation("insert", i, word, word[:i] + ch + word[i:], ch)


OPERATORS: dict[str, Callable[[str, random.Random], Perturbation]] = {
    "swap": swap,
    "substitute": substitute,
    "delete": delete,
    "insert": insert,
}


@dataclass(frozen=True)
class Modification:
    perturbation: Perturbation
    prediction: Prediction
    drop: float


def best_modification(doc: Document, replacements: Mapping[int, str], word_index: int,
                      classifier: CountingClassifier, y: int, rng: random.Random,
                      current_confidence: float) -> Modification | None:
    """Try every applicable operator on one word and keep the most damaging.

    ``doc`` plus ``replacements`` is the current adversarial text and
    ``current_confidence`` its confidence for ``y``.  Operators that cannot
    apply to the word are skipped without a query.  A candidate that flips
    the predicted label beats any that does not; otherwise the largest
    strictly positive drop wins, ties going to the earlier operator.
    """
    if not 0 <= word_index < doc.word_count:
        raise PerturbationError(f"word index {word_index} out of range")
    word = replacements.get(word_index, doc.words[word_index].text)
    best = None
    best_key = None
    for kind in KINDS:
        try:
            pert = OPERATORS[kind](word, rng)
        except PerturbationError:
            continue
        pert = replace(pert, word_index=word_index)
        text = doc.render({**replacements, word_index: pert.modified_word})
        pred = classifier.predict(text, "modification")
        drop = current_confidence - pred.confidence(y)
        key = (pred.label != y, drop)
        if drop > 0 and (best_key is None or key > best_key):
            best, best_key = Modification(pert, pred, drop), key
    return best
