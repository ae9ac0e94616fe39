import json

import pytest

from conftest import ConstantClassifier
from wordbug.attack import AttackConfig
from wordbug.evaluation import (BenchmarkReport, Dataset, DatasetError, adversarial_pairs, bundled_dataset,
                                emit_report, load_dataset, load_report, run_benchmark, summarize, to_markdown,
                                transferability)


def write(tmp_path, content, name="d.csv"):
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    return path


def test_load_simple(tmp_path):
    ds = load_dataset(write(tmp_path, "label,text\npos,Great film.\nneg,Dull.\n"))
    assert len(ds) == 2
    assert ds.label_names == ["pos", "neg"]
    assert ds.name == "d"


def test_load_quoted_fields(tmp_path):
    ds = load_dataset(write(tmp_path, 'label,text\npos,"Fine, really.\nSecond line ""quoted""."\n'))
    assert ds.examples == [("pos", 'Fine, really.\nSecond line "quoted".')]


@pytest.mark.parametrize("content", ["", "label,body\npos,x\n", "label,text\npos,  \n", "label,text\n"])
def test_load_errors(tmp_path, content):
    with pytest.raises(DatasetError):
        load_dataset(write(tmp_path, content))


@pytest.mark.parametrize("name, n_labels", [("sentiment_train", 2), ("sentiment_test", 2),
                                            ("topics_train", 4), ("topics_test", 4)])
def test_bundled_corpora(name, n_labels):
    ds = bundled_dataset(name)
    assert len(ds) >= 200 and len(ds.label_names) == n_labels


@pytest.fixture(scope="module")
def small_report(nb_model, logreg_model, sentiment_test):
    cfg = AttackConfig(epsilon=0.1, seed=3, fallback_threshold_zero=True)
    return run_benchmark(sentiment_test, {"nb": nb_model, "logreg": logreg_model},
                         ["none", "fastwordbug", "deepwordbug"], cfg, n_samples=12, n_repetitions=2,
                         n_calibration=20)


def test_identity_strategy(small_report):
    for clf in ("nb", "logreg"):
        e = small_report.entry("none", clf)
        assert e.accuracy_after == e.accuracy_before
        assert e.mean_queries_total == 1.0


def test_benchmark_shape_and_monotone_accuracy(small_report):
    assert small_report.n_calibration == 20
    for e in small_report.entries:
        assert e.n_documents == 24 and e.n_repetitions == 2
        assert e.accuracy_after <= e.accuracy_before
    assert len(small_report.calibration["nb"]) == 2


def test_benchmark_means_are_recomputable(small_report):
    for e in small_report.entries:
        again = summarize(e.strategy, e.classifier, e.records, e.n_repetitions)
        for field in ("accuracy_before", "accuracy_after", "mean_queries_total", "mean_perturbed_fraction",
                      "success_rate"):
            assert getattr(again, field) == pytest.approx(getattr(e, field), abs=1e-9)
        attacked = [r["result"] for r in e.records if not r["result"]["skipped"]]
        if attacked:
            calls = sum(r["queries"]["calls"] for r in attacked) / len(attacked)
            assert e.mean_queries_total == pytest.approx(calls, abs=1e-9)
            assert sum(e.mean_queries_by_phase.values()) == pytest.approx(calls, abs=1e-9)


def test_benchmark_samples_are_disjoint(nb_model, sentiment_test):
    cfg = AttackConfig(seed=0, fallback_threshold_zero=True)
    report = run_benchmark(sentiment_test, {"nb": nb_model}, ["fastwordbug"], cfg, 10, 3, n_calibration=15)
    for rep, cal in enumerate(report.calibration["nb"]):
        attacked = {r["index"] for r in report.entries[0].records if r["repetition"] == rep}
        assert len(attacked) == 10 and len(cal["meta"]["indices"]) == 15
        assert not attacked & set(cal["meta"]["indices"])


def test_benchmark_is_deterministic(nb_model, sentiment_test):
    cfg = AttackConfig(seed=5, fallback_threshold_zero=True)
    runs = [run_benchmark(sentiment_test, {"nb": nb_model}, ["fastwordbug", "textbugger_bb"], cfg, 8, 2,
                          n_calibration=10).to_json() for _ in range(2)]
    assert runs[0] == runs[1]


def test_benchmark_rejects_oversized_sample(nb_model):
    tiny = Dataset("tiny", [("pos", "great"), ("neg", "bad")], ["pos", "neg"])
    with pytest.raises(DatasetError):
        run_benchmark(tiny, {"nb": nb_model}, ["deepwordbug"], AttackConfig(), 3)


def test_transfer_diagonal_equals_accuracy_after(small_report, nb_model, logreg_model):
    models = {"nb": nb_model, "logreg": logreg_model}
    sources = {c: adversarial_pairs(small_report.entry("fastwordbug", c)) for c in models}
    matrix = transferability(sources, models)
    for c in models:
        assert matrix[c][c] == small_report.entry("fastwordbug", c).accuracy_after


def test_transfer_constant_target_gives_base_rate():
    pairs = [("neg", "a"), ("neg", "b"), ("pos", "c"), ("neg", "d")]
    matrix = transferability({"src": pairs}, {"const": ConstantClassifier((0.7, 0.3))})
    assert matrix == {"src": {"const": 0.75}}


def test_transfer_label_mismatch():
    with pytest.raises(DatasetError):
        transferability({"src": [("maybe", "x")]}, {"const": ConstantClassifier()})


def test_json_round_trip(tmp_path, small_report):
    emit_report(small_report, tmp_path / "r.json", "json")
    back = load_report(tmp_path / "r.json")
    assert back == small_report
    assert json.loads((tmp_path / "r.json").read_text())["epsilon"] == 0.1


def test_markdown_layout(tmp_path, small_report):
    emit_report(small_report, tmp_path / "r.md", "markdown")
    lines = (tmp_path / "r.md").read_text().splitlines()
    header = lines[2]
    assert "Accuracy (nb)" in header and "#Model Called (logreg)" in header and "Perturbed Word (nb)" in header
    rows = [line for line in lines[4:] if line.startswith("| ")]
    assert [r.split(" | ")[0][2:] for r in rows] == ["No Attack", "none", "fastwordbug", "deepwordbug"]


def test_markdown_empty_strategies():
    report = BenchmarkReport("d", 0, 0.1, 5, 0, 1, [])
    table = [line for line in to_markdown(report).splitlines() if line.startswith("|")]
    assert len(table) == 2


def test_emit_unknown_format(tmp_path, small_report):
    with pytest.raises(ValueError):
        emit_report(small_report, tmp_path / "r.txt", "yaml")
