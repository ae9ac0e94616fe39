import json
import subprocess
import sys

import pytest

from wordbug.cli import main



def run(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    from importlib import resources

    d = tmp_path_factory.mktemp("cli")
    data = resources.files("wordbug.data")
    for name in ("sentiment_train", "sentiment_test"):
        (d / f"{name}.csv").write_text(data.joinpath(f"{name}.csv").read_text(encoding="utf-8"), encoding="utf-8")
    assert main(["train", "--data", str(d / "sentiment_train.csv"), "--variant", "nb", "--out", str(d / "nb.json")]) == 0
    assert main(["train", "--data", str(d / "sentiment_train.csv"), "--variant", "logreg",
                 "--out", str(d / "lr.json")]) == 0
    assert main(["calibrate", "--data", str(d / "sentiment_test.csv"), "--model", f"file:{d / 'nb.json'}",
                 "--samples", "40", "--out", str(d / "w.json")]) == 0
    return d


def test_calibrate_output(workdir):
    w = json.loads((workdir / "w.json").read_text())
    assert set(w) == {"normalization", "counts", "weights", "meta"}
    assert w["normalization"] == "frequency_softmax"
    assert abs(sum(w["weights"].values()) - 1) < 1e-9


def test_attack_and_transfer(workdir):
    d = workdir
    args = ["attack", "--data", str(d / "sentiment_test.csv"), "--weights", str(d / "w.json"),
            "--samples", "15", "--seed", "2", "--fallback", "--epsilon", "0.1"]
    assert main(args + ["--model", f"file:{d / 'nb.json'}", "--out", str(d / "a_nb.json")]) == 0
    assert main(args + ["--model", f"file:{d / 'lr.json'}", "--strategy", "textbugger-bb",
                        "--out", str(d / "a_lr.json")]) == 0
    out = json.loads((d / "a_nb.json").read_text())
    assert out["summary"]["documents"] == 15 and len(out["records"]) == 15
    assert out["config"]["strategy"] == "fastwordbug"
    assert json.loads((d / "a_lr.json").read_text())["config"]["strategy"] == "textbugger_bb"
    models = f"file:{d / 'nb.json'},file:{d / 'lr.json'}"
    assert main(["transfer", "--results", f"{d / 'a_nb.json'},{d / 'a_lr.json'}", "--models", models,
                 "--out", str(d / "t.json")]) == 0
    matrix = json.loads((d / "t.json").read_text())
    nb_key = f"file:{d / 'nb.json'}"
    assert matrix[nb_key][nb_key] == out["summary"]["accuracy_after"]


def test_benchmark_with_markdown(workdir):
    d = workdir
    assert main(["benchmark", "--data", str(d / "sentiment_test.csv"), "--models", f"file:{d / 'nb.json'}",
                 "--strategies", "fastwordbug,deepwordbug", "--samples", "6", "--reps", "1",
                 "--calibration-samples", "10", "--fallback", "--out", str(d / "b.json"),
                 "--markdown", str(d / "b.md")]) == 0
    assert "| deepwordbug |" in (d / "b.md").read_text()
    assert json.loads((d / "b.json").read_text())["n_repetitions"] == 1


@pytest.mark.parametrize("argv, code", [
    (["frobnicate"], 1),
    (["attack", "--data", "x.csv"], 1),
    (["attack", "--data", "{test}", "--model", "bogus:spec", "--out", "{out}"], 1),
    (["attack", "--data", "{test}", "--model", "file:{nb}", "--strategy", "magic", "--out", "{out}"], 1),
    (["attack", "--data", "{test}", "--model", "file:{nb}", "--out", "{out}"], 1),
    (["attack", "--data", "{test}", "--model", "file:{nb}", "--epsilon", "2", "--strategy", "deepwordbug",
      "--out", "{out}"], 1),
    (["attack", "--data", "missing.csv", "--model", "file:{nb}", "--out", "{out}"], 2),
    (["attack", "--data", "{test}", "--model", "file:missing.json", "--out", "{out}"], 2),
    (["attack", "--data", "{test}", "--model", "http://127.0.0.1:9/", "--strategy", "deepwordbug",
      "--out", "{out}"], 3),
])
def test_exit_codes(workdir, argv, code):
    subs = {"test": workdir / "sentiment_test.csv", "nb": workdir / "nb.json", "out": workdir / "x.json"}
    argv = [a.format(**subs) for a in argv]
    assert run(argv) == code


def test_console_script_is_installed():
    out = subprocess.run([sys.executable, "-m", "wordbug.cli", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "serve-mock" in out.stdout
