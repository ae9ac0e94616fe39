"""Sentence splitting, tokenization and lexicon-based POS tagging.

Everything here is a pure function of its input.  Tokens keep character
offsets into the document text so that perturbed or word-dropped variants of a
document can be rendered without re-tokenizing.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Mapping


class PosTag(str, enum.Enum):
    """Penn Treebank word tags plus a catch-all for punctuation and symbols."""

    CC = "CC"
    CD = "CD"
    DT = "DT"
    EX = "EX"
    FW = "FW"
    IN = "IN"
    JJ = "JJ"
    JJR = "JJR"
    JJS = "JJS"
    LS = "LS"
    MD = "MD"
    NN = "NN"
    NNS = "NNS"
    NNP = "NNP"
    NNPS = "NNPS"
    PDT = "PDT"
    POS = "POS"
    PRP = "PRP"
    PRP_POSS = "PRP$"
    RB = "RB"
    RBR = "RBR"
    RBS = "RBS"
    RP = "RP"
    SYM = "SYM"
    TO = "TO"
    UH = "UH"
    VB = "VB"
    VBD = "VBD"
    VBG = "VBG"
    VBN = "VBN"
    VBP = "VBP"
    VBZ = "VBZ"
    WDT = "WDT"
    WP = "WP"
    WP_POSS = "WP$"
    WRB = "WRB"
    OTHER = "OTHER"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Token:
    text: str
    start: int
    end: int
    sentence_index: int
    is_word: bool
    word_index: int | None = None
    tag: PosTag | None = None


@dataclass(frozen=True)
class Document:
    original_text: str
    sentences: tuple[str, ...]
    sentence_spans: tuple[tuple[int, int], ...]
    tokens: tuple[Token, ...]
    label: str | None = None
    words: tuple[Token, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(t for t in self.tokens if t.is_word))

    @property
    def word_count(self) -> int:
        return len(self.words)

    def sentence_words(self, sentence_index: int) -> list[Token]:
        return [t for t in self.words if t.sentence_index == sentence_index]

    def render(self, replacements: Mapping[int, str] | None = None, drop: int | None = None) -> str:
        """Rebuild the text with words replaced and optionally one word removed.

        ``replacements`` maps word_index -> new surface form.  A dropped word
        takes one adjacent whitespace character with it (the following one if
        present, else the preceding one).
        """
        replacements = replacements or {}
        text = self.original_text
        edits = []
        for i, new in replacements.items():
            if i != drop:
                tok = self.words[i]
                edits.append((tok.start, tok.end, new))
        if drop is not None:
            tok = self.words[drop]
            start, end = tok.start, tok.end
            if end < len(text) and text[end].isspace():
                end += 1
            elif start > 0 and text[start - 1].isspace():
                start -= 1
            edits.append((start, end, ""))
        if not edits:
            return text
        edits.sort()
        out = []
        pos = 0
        for start, end, new in edits:
            out.append(text[pos:start])
            out.append(new)
            pos = end
        out.append(text[pos:])
        return "".join(out)


# -- sentence splitting ------------------------------------------------------

ABBREVIATIONS = frozenset({"mr.", "mrs.", "ms.", "dr.", "st.", "vs.", "e.g.", "i.e.", "etc.", "jr.", "sr.", "prof."})

_BOUNDARY = re.compile(r"[.!?]+['\")\]]*(?=\s+[A-Z]|\s*\Z)")


def sentence_spans(text: str) -> list[tuple[int, int]]:
    """Character spans of sentences; gaps between spans are whitespace only."""
    spans = []
    start = None
    for m in _BOUNDARY.finditer(text):
        end = m.end()
        chunk_start = end
        while chunk_start > 0 and not text[chunk_start - 1].isspace():
            chunk_start -= 1
        if text[chunk_start:end].lower().rstrip("'\")]") in ABBREVIATIONS and text[end:].strip():
            continue
        if start is None:
            start = len(text) - len(text.lstrip())
        if end > start:
            spans.append((start, end))
        start = end + (len(text[end:]) - len(text[end:].lstrip()))
    if start is None:
        start = len(text) - len(text.lstrip())
    tail_end = len(text.rstrip())
    if tail_end > start:
        spans.append((start, tail_end))
    return spans


def split_sentences(text: str) -> list[str]:
    """Split on terminal punctuation followed by an uppercase word or end of text.

    >>> split_sentences("Dr. Smith left. He ran.")
    ['Dr. Smith left.', 'He ran.']
    """
    return [text[a:b] for a, b in sentence_spans(text)]


# -- tokenization -------------------------------------------------------------

_WORD = re.compile(r"[^\W\d_]+(?:['’\-][^\W\d_]+)*")
_CHUNK = re.compile(r"\S+")


def is_word(s: str) -> bool:
    return _WORD.fullmatch(s) is not None


def tokenize(sentence: str, sentence_index: int = 0, word_offset: int = 0, char_offset: int = 0) -> list[Token]:
    """Whitespace split, then peel leading/trailing punctuation into their own tokens.

    Internal apostrophes and hyphens stay inside the word, so ``isn't`` and
    ``well-known`` are single tokens.  Offsets are relative to the sentence
    unless ``char_offset`` shifts them into document coordinates.
    """
    tokens = []
    n_words = word_offset

    def emit(text, start):
        nonlocal n_words
        word = is_word(text)
        tokens.append(Token(
            text=text,
            start=char_offset + start,
            end=char_offset + start + len(text),
            sentence_index=sentence_index,
            is_word=word,
            word_index=n_words if word else None,
        ))
        if word:
            n_words += 1

    for m in _CHUNK.finditer(sentence):
        chunk, base = m.group(), m.start()
        lo, hi = 0, len(chunk)
        while lo < hi and not chunk[lo].isalnum():
            lo += 1
        while hi > lo and not chunk[hi - 1].isalnum():
            hi -= 1
        if lo == hi:
            emit(chunk, base)
            continue
        if lo:
            emit(chunk[:lo], base)
        emit(chunk[lo:hi], base + lo)
        if hi < len(chunk):
            emit(chunk[hi:], base + hi)
    return tokens


# -- tagging ------------------------------------------------------------------

def load_lexicon(path: str | Path | None = None) -> dict[str, PosTag]:
    """Read ``word<TAB>TAG`` lines; the bundled lexicon when ``path`` is None."""
    if path is None:
        raw = resources.files("wordbug.data").joinpath("lexicon.tsv").read_text(encoding="utf-8")
    else:
        raw = Path(path).read_text(encoding="utf-8")
    lexicon = {}
    for lineno, line in enumerate(raw.splitlines(), 1):
        if not line.strip():
            continue
        try:
            word, tag = line.split("\t")
            lexicon[word] = PosTag(tag.strip())
        except ValueError as exc:
            raise ValueError(f"bad lexicon line {lineno}: {line!r}") from exc
    return lexicon


@lru_cache(maxsize=1)
def default_lexicon() -> dict[str, PosTag]:
    return load_lexicon()


_NUMERIC = re.compile(r"[+-]?\d[\d,.]*%?")

# longest suffix first; "-s" skips -ss/-us/-is endings which are rarely plurals
_SUFFIX_RULES = (
    ("ing", PosTag.VBG),
    ("est", PosTag.JJS),
    ("ly", PosTag.RB),
    ("ed", PosTag.VBD),
    ("er", PosTag.JJR),
)


def _tag_word(text: str, first_in_sentence: bool, lexicon: Mapping[str, PosTag]) -> PosTag:
    if text in lexicon:
        return lexicon[text]
    lower = text.lower()
    if lower in lexicon:
        return lexicon[lower]
    if text[:1].isupper() and not first_in_sentence:
        return PosTag.NNP
    if lower.endswith(("'s", "’s")) and len(lower) > 2:
        return _tag_word(text[:-2], first_in_sentence, lexicon)
    for suffix, tag in _SUFFIX_RULES:
        if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
            return tag
    if lower.endswith("s") and not lower.endswith(("ss", "us", "is")) and len(lower) > 2:
        return PosTag.NNS
    return PosTag.NN


def pos_tag(tokens: list[Token], lexicon: Mapping[str, PosTag] | None = None) -> list[Token]:
    """Tag tokens by lexicon lookup, then suffix rules, then defaults.

    Non-word tokens are CD when numeric and OTHER otherwise.  A capitalized
    word missing from the lexicon is NNP unless it opens its sentence.
    """
    lexicon = default_lexicon() if lexicon is None else lexicon
    out = []
    prev_sentence = None
    first = True
    for tok in tokens:
        if tok.sentence_index != prev_sentence:
            first = True
            prev_sentence = tok.sentence_index
        if tok.is_word:
            tag = _tag_word(tok.text, first, lexicon)
            first = False
        elif _NUMERIC.fullmatch(tok.text):
            tag = PosTag.CD
            first = False
        else:
            tag = lexicon.get(tok.text, PosTag.OTHER)
        out.append(replace(tok, tag=tag))
    return out


def make_document(text: str, label: str | None = None, lexicon: Mapping[str, PosTag] | None = None) -> Document:
    spans = sentence_spans(text)
    tokens: list[Token] = []
    n_words = 0
    for i, (a, b) in enumerate(spans):
        sent_tokens = tokenize(text[a:b], i, n_words, char_offset=a)
        n_words += sum(t.is_word for t in sent_tokens)
        tokens.extend(sent_tokens)
    return Document(
        original_text=text,
        sentences=tuple(text[a:b] for a, b in spans),
        sentence_spans=tuple(spans),
        tokens=tuple(pos_tag(tokens, lexicon)),
        label=label,
    )
