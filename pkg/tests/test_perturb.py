import random
import string

import pytest

from conftest import ConstantClassifier, KeywordClassifier
from wordbug.model import CountingClassifier
from wordbug.perturb import (KINDS, OPERATORS, Perturbation, PerturbationError, best_modification, delete,
                             insert, seeded_rng, substitute, swap)
from wordbug.text import make_document

N_FUZZ = 10_000


def fuzz_words(seed, n=N_FUZZ):
    rng = random.Random(seed)
    alphabet = string.ascii_lowercase * 3 + string.ascii_uppercase
    words = []
    for _ in range(n):
        w = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 12)))
        if len(w) > 2 and rng.random() < 0.1:
            k = rng.randrange(1, len(w) - 1)
            w = w[:k] + rng.choice("'-") + w[k:]
        words.append(w)
    return words


def test_table_examples():
    rng = seeded_rng(0)
    assert swap("during", rng, position=3).modified_word == "durnig"
    assert swap("which", rng, position=1).modified_word == "wihch"
    assert delete("not", rng, position=1).modified_word == "nt"
    assert delete("in", rng, position=1).modified_word == "i"
    # "in" -> "i" is also reachable through the unforced random draw
    assert any(delete("in", seeded_rng(s)).modified_word == "i" for s in range(20))
    assert any(swap("during", seeded_rng(s)).modified_word == "durnig" for s in range(50))


def test_swap_forced_choice_and_errors():
    assert swap("ab", seeded_rng(1)).modified_word == "ba"
    with pytest.raises(PerturbationError):
        swap("a", seeded_rng(1))
    with pytest.raises(PerturbationError):
        swap("aaa", seeded_rng(1))
    with pytest.raises(PerturbationError):
        swap("good", seeded_rng(1), position=1)


def test_delete_guard():
    with pytest.raises(PerturbationError):
        delete("a", seeded_rng(0))
    with pytest.raises(PerturbationError):
        delete("ab", seeded_rng(0), position=2)


def test_single_letter_substitute():
    p = substitute("a", seeded_rng(3))
    assert len(p.modified_word) == 1 and p.modified_word != "a"
    assert p.modified_word in string.ascii_lowercase


def test_empty_word_rejected():
    for kind in KINDS:
        with pytest.raises(PerturbationError):
            OPERATORS[kind]("", seeded_rng(0))


@pytest.mark.parametrize("seed", [0, 7, 2024])
def test_substitute_seeded_replay(seed):
    p = substitute("good", seeded_rng(seed))
    oracle = random.Random(seed)
    pos = oracle.randrange(4)
    letters = [c for c in string.ascii_lowercase if c != "good"[pos]]
    ch = letters[oracle.randrange(25)]
    assert (p.position, p.replacement_char) == (pos, ch)
    assert p.modified_word == "good"[:pos] + ch + "good"[pos + 1:]


@pytest.mark.parametrize("seed", [1, 8, 99])
def test_insert_seeded_replay(seed):
    p = insert("cat", seeded_rng(seed))
    oracle = random.Random(seed)
    gap = oracle.randrange(4)
    ch = string.ascii_lowercase[oracle.randrange(26)]
    assert p.modified_word == "cat"[:gap] + ch + "cat"[gap:]
    assert p.modified_word[:p.position] + p.modified_word[p.position + 1:] == "cat"


def test_substitute_keeps_case():
    p = substitute("T", seeded_rng(0))
    assert p.modified_word.isupper()


@pytest.mark.parametrize("kind", KINDS)
def test_operator_contracts_fuzz(kind):
    op = OPERATORS[kind]
    delta = {"swap": 0, "substitute": 0, "delete": -1, "insert": 1}[kind]
    applied = 0
    for i, word in enumerate(fuzz_words(KINDS.index(kind))):
        try:
            p = op(word, seeded_rng(i))
        except PerturbationError:
            assert kind in ("swap", "delete")
            continue
        applied += 1
        assert p.kind == kind and p.original_word == word
        assert p.modified_word != word
        assert len(p.modified_word) == len(word) + delta
        assert op(word, seeded_rng(i)) == p
        new = p.modified_word
        if kind == "swap":
            k = p.position
            assert new[k] == word[k + 1] and new[k + 1] == word[k]
            assert new[:k] == word[:k] and new[k + 2:] == word[k + 2:]
        elif kind == "substitute":
            diffs = [k for k in range(len(word)) if word[k] != new[k]]
            assert diffs == [p.position]
        elif kind == "delete":
            assert new == word[:p.position] + word[p.position + 1:]
        else:
            assert new[:p.position] + new[p.position + 1:] == word
    assert applied > N_FUZZ // 2


def test_perturbation_round_trip():
    p = Perturbation("insert", 2, "cat", "caxt", "x", 5)
    assert Perturbation.from_dict(p.to_dict()) == p


@pytest.mark.parametrize("variant", ["nb", "logreg"])
def test_perturbed_words_leave_the_vocabulary(variant, nb_model, logreg_model):
    clf = nb_model if variant == "nb" else logreg_model
    vocab = [w for w in sorted(clf.vocabulary) if w.isalpha() and len(w) >= 4]
    rng = seeded_rng(11)
    for kind in KINDS:
        outside = total = 0
        for w in vocab:
            try:
                p = OPERATORS[kind](w, rng)
            except PerturbationError:
                continue
            total += 1
            outside += p.modified_word not in clf.vocabulary
        assert outside / total > 0.95


def test_best_modification_keyword_tie_goes_to_swap():
    doc = make_document("good movie")
    clf = CountingClassifier(KeywordClassifier())
    mod = best_modification(doc, {}, 0, clf, 1, seeded_rng(0), 1.0)
    assert mod.perturbation.kind == "swap"
    assert mod.drop == pytest.approx(0.6)
    assert mod.prediction.label == 0
    assert clf.counter.phase_marks == {"modification": 4}


def test_best_modification_constant_classifier():
    clf = CountingClassifier(ConstantClassifier())
    assert best_modification(make_document("good movie"), {}, 1, clf, 0, seeded_rng(0), 0.7) is None
    assert clf.counter.calls == 4


def test_best_modification_skips_inapplicable_operators():
    clf = CountingClassifier(ConstantClassifier())
    best_modification(make_document("a movie"), {}, 0, clf, 0, seeded_rng(0), 0.7)
    assert clf.counter.calls == 2


def test_best_modification_uses_current_replacements():
    doc = make_document("good good")
    clf = KeywordClassifier()
    counted = CountingClassifier(clf)
    mod = best_modification(doc, {0: "godo"}, 1, counted, 1, seeded_rng(0), 1.0)
    assert mod is not None
    assert all(text.startswith("godo ") for text in clf.seen)


def test_best_modification_bad_index():
    with pytest.raises(PerturbationError):
        best_modification(make_document("x"), {}, 3, CountingClassifier(ConstantClassifier()), 0,
                          seeded_rng(0), 0.7)


def test_best_modification_never_raises_confidence(nb_model, sentiment_test):
    rng = seeded_rng(5)
    for _, text in sentiment_test.examples[:20]:
        doc = make_document(text)
        y = nb_model.predict(text).label
        conf = nb_model.predict(text).confidence(y)
        for j in range(0, doc.word_count, 7):
            mod = best_modification(doc, {}, j, CountingClassifier(nb_model), y, rng, conf)
            if mod is not None:
                assert mod.prediction.confidence(y) < conf
                assert nb_model.predict(doc.render({j: mod.perturbation.modified_word})) == mod.prediction
