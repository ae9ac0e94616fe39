"""Dataset loading, benchmark orchestration, transferability and reports."""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import random
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .attack import AttackConfig, AttackResult, run_attack
from .model import Classifier, CountingClassifier
from .scoring import PosWeights, calibrate_pos_weights
from .text import make_document

log = logging.getLogger(__name__)

NONE = "none"
WEIGHTED = ("fastwordbug", "fastwordbug_rescored")
PHASE_COLUMNS = ("initial", "sentence_scoring", "word_scoring", "modification")


class DatasetError(ValueError):
    pass


@dataclass
class Dataset:
    name: str
    examples: list[tuple[str, str]]
    label_names: list[str]

    def __len__(self) -> int:
        return len(self.examples)


def load_dataset(path: str | Path, name: str | None = None) -> Dataset:
    """Read a UTF-8 CSV with a ``label,text`` header (RFC 4180 quoting)."""
    path = Path(path)
    raw = path.read_text(encoding="utf-8")
    if not raw.strip():
        raise DatasetError(f"{path}: empty file")
    reader = csv.DictReader(io.StringIO(raw, newline=""))
    fields = reader.fieldnames or []
    missing = {"label", "text"} - set(fields)
    if missing:
        raise DatasetError(f"{path}: header lacks column(s) {sorted(missing)}")
    examples = []
    for lineno, row in enumerate(reader, 2):
        text = row["text"] or ""
        if not text.strip():
            raise DatasetError(f"{path}: row {lineno} has empty text")
        examples.append((row["label"], text))
    if not examples:
        raise DatasetError(f"{path}: no data rows")
    labels = list(dict.fromkeys(label for label, _ in examples))
    return Dataset(name or path.stem, examples, labels)


def bundled_dataset(name: str) -> Dataset:
    """One of sentiment_train, sentiment_test, topics_train, topics_test."""
    from importlib import resources

    with resources.as_file(resources.files("wordbug.data").joinpath(f"{name}.csv")) as p:
        return load_dataset(p, name)


# -- benchmark ----------------------------------------------------------------------

@dataclass
class BenchmarkEntry:
    strategy: str
    classifier: str
    accuracy_before: float
    accuracy_after: float
    mean_queries_total: float
    mean_queries_by_phase: dict[str, float]
    mean_perturbed_fraction: float
    mean_perturbed_fraction_all: float
    success_rate: float
    n_documents: int
    n_attacked: int
    n_repetitions: int
    mean_calibration_queries: float
    records: list[dict] = field(default_factory=list)


@dataclass
class BenchmarkReport:
    dataset: str
    seed: int
    epsilon: float
    n_samples: int
    n_calibration: int
    n_repetitions: int
    entries: list[BenchmarkEntry]
    calibration: dict[str, list[dict]] = field(default_factory=dict)

    def entry(self, strategy: str, classifier: str) -> BenchmarkEntry:
        for e in self.entries:
            if e.strategy == strategy and e.classifier == classifier:
                return e
        raise KeyError((strategy, classifier))

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> BenchmarkReport:
        entries = [BenchmarkEntry(**e) for e in d["entries"]]
        return cls(**{**d, "entries": entries})


def _mean(xs: Sequence[float]) -> float:
    return math.fsum(xs) / len(xs) if xs else 0.0


def _identity(text: str, classifier: Classifier, gold: int) -> AttackResult:
    clf = CountingClassifier(classifier)
    pred = clf.predict(text, "initial")
    return AttackResult(
        success=False, adversarial_text=text, original_text=text, original_prediction=pred,
        final_prediction=pred, perturbations=[], word_count=make_document(text).word_count,
        queries=clf.counter.snapshot(), strategy=NONE, skipped=pred.label != gold,
        gold_label=gold, attacked_label=pred.label,
    )


def summarize(strategy: str, classifier: str, records: list[dict], n_repetitions: int,
              calibration_queries: Sequence[int] = ()) -> BenchmarkEntry:
    """Aggregate per-document records; every field is a plain recomputation."""
    results = [AttackResult.from_dict(r["result"]) for r in records]
    n = len(results)
    before = [r.original_prediction.label == r.gold_label for r in results]
    after = [r.final_prediction.label == r.gold_label for r in results]
    attacked = [r for r in results if not r.skipped]
    succeeded = [r for r in attacked if r.success]
    by_phase = {p: _mean([r.queries.phase(p) for r in attacked]) for p in PHASE_COLUMNS}
    return BenchmarkEntry(
        strategy=strategy,
        classifier=classifier,
        accuracy_before=_mean(before),
        accuracy_after=_mean(after),
        mean_queries_total=_mean([r.queries.calls for r in attacked]),
        mean_queries_by_phase=by_phase,
        mean_perturbed_fraction=_mean([r.perturbed_fraction for r in succeeded]),
        mean_perturbed_fraction_all=_mean([r.perturbed_fraction for r in attacked]),
        success_rate=len(succeeded) / len(attacked) if attacked else 0.0,
        n_documents=n,
        n_attacked=len(attacked),
        n_repetitions=n_repetitions,
        mean_calibration_queries=_mean(list(calibration_queries)),
        records=records,
    )


def run_benchmark(dataset: Dataset, classifiers: Mapping[str, Classifier], strategies: Sequence[str],
                  config: AttackConfig, n_samples: int, n_repetitions: int = 1, *,
                  n_calibration: int = 200, weights: Mapping[str, PosWeights] | None = None,
                  normalization: str = "frequency_softmax") -> BenchmarkReport:
    """Run every strategy against every classifier on seeded document samples.

    Each repetition draws a calibration sample and a disjoint attack sample.
    When ``weights`` are supplied for a classifier they are reused and no
    calibration sample is drawn for it.
    """
    weights = dict(weights or {})
    needs_calibration = any(s in WEIGHTED for s in strategies) and any(c not in weights for c in classifiers)
    n_cal = n_calibration if needs_calibration else 0
    if n_samples + n_cal > len(dataset):
        raise DatasetError(f"need {n_samples} attack + {n_cal} calibration documents, dataset has {len(dataset)}")

    records: dict[tuple[str, str], list[dict]] = {(s, c): [] for s in strategies for c in classifiers}
    cal_queries: dict[str, list[int]] = {c: [] for c in classifiers}
    cal_log: dict[str, list[dict]] = {c: [] for c in classifiers}
    for rep in range(n_repetitions):
        rep_seed = config.seed + rep
        picked = random.Random(rep_seed).sample(range(len(dataset)), n_samples + n_cal)
        cal_idx, att_idx = picked[:n_cal], picked[n_cal:]
        for cname, clf in classifiers.items():
            names = list(clf.class_names)
            pw = weights.get(cname)
            if pw is None and n_cal:
                counted = CountingClassifier(clf)
                pw = calibrate_pos_weights([dataset.examples[i] for i in cal_idx], counted,
                                           normalization, meta={"dataset": dataset.name, "classifier": cname,
                                                                "repetition": rep, "indices": sorted(cal_idx)})
                cal_queries[cname].append(counted.counter.calls)
                cal_log[cname].append(pw.to_dict())
            for strategy in strategies:
                cfg = AttackConfig(**{**asdict(config), "strategy": strategy}) if strategy != NONE else None
                for i in att_idx:
                    label, text = dataset.examples[i]
                    if label not in names:
                        raise DatasetError(f"label {label!r} unknown to classifier {cname}")
                    gold = names.index(label)
                    if cfg is None:
                        result = _identity(text, clf, gold)
                    else:
                        rng = random.Random(rep_seed ^ i)
                        result = run_attack(text, clf, cfg, pw, gold_label=gold, rng=rng)
                    records[(strategy, cname)].append(
                        {"repetition": rep, "index": i, "gold": label, "result": result.to_dict()})
        log.info("repetition %d/%d done", rep + 1, n_repetitions)

    entries = [summarize(s, c, records[(s, c)], n_repetitions,
                         cal_queries[c] if s in WEIGHTED else ())
               for s in strategies for c in classifiers]
    return BenchmarkReport(dataset.name, config.seed, config.epsilon, n_samples, n_cal, n_repetitions,
                           entries, {c: v for c, v in cal_log.items() if v})


# -- transferability -------------------------------------------------------------------

def transferability(sources: Mapping[str, Sequence[tuple[str, str]]],
                    targets: Mapping[str, Classifier]) -> dict[str, dict[str, float]]:
    """Accuracy of each target on adversarial texts crafted against each source.

    ``sources`` maps a source model name to ``(gold_label, adversarial_text)``
    pairs.  Accuracy is plain top-1 over all pairs.
    """
    matrix: dict[str, dict[str, float]] = {}
    for sname, pairs in sources.items():
        row = {}
        for tname, clf in targets.items():
            names = list(clf.class_names)
            unknown = {g for g, _ in pairs} - set(names)
            if unknown:
                raise DatasetError(f"labels {sorted(unknown)} from {sname} unknown to {tname}")
            correct = [names[clf.predict(text).label] == gold for gold, text in pairs]
            row[tname] = _mean(correct)
        matrix[sname] = row
    return matrix


def adversarial_pairs(entry: BenchmarkEntry) -> list[tuple[str, str]]:
    return [(r["gold"], r["result"]["adversarial_text"]) for r in entry.records]


# -- reports ---------------------------------------------------------------------------

def _pct(x: float) -> str:
    return f"{100 * x:.1f}%"


def to_markdown(report: BenchmarkReport) -> str:
    classifiers = list(dict.fromkeys(e.classifier for e in report.entries))
    strategies = list(dict.fromkeys(e.strategy for e in report.entries))
    cols = ["Strategy"]
    for metric in ("Accuracy", "#Model Called", "Perturbed Word"):
        cols += [f"{metric} ({c})" for c in classifiers]
    lines = [
        f"Dataset: {report.dataset}; {report.n_samples} documents x {report.n_repetitions} repetitions; "
        f"word budget {_pct(report.epsilon)}.",
        "",
        "| " + " | ".join(cols) + " |",
        "|" + "|".join(["---"] + [":---:"] * (len(cols) - 1)) + "|",
    ]
    if strategies:
        first = [report.entry(strategies[0], c) for c in classifiers]
        row = ["No Attack"] + [_pct(e.accuracy_before) for e in first] + ["N/A"] * len(classifiers)
        row += [_pct(report.epsilon)] * len(classifiers)
        lines.append("| " + " | ".join(row) + " |")
    for s in strategies:
        es = [report.entry(s, c) for c in classifiers]
        row = [s] + [_pct(e.accuracy_after) for e in es] + [f"{e.mean_queries_total:.2f}" for e in es]
        row += [_pct(e.mean_perturbed_fraction) for e in es]
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def emit_report(report: BenchmarkReport, path: str | Path, format: str = "json") -> None:
    if format == "json":
        text = report.to_json()
    elif format in ("markdown", "markdown-table", "md"):
        text = to_markdown(report)
    else:
        raise ValueError(f"unknown report format {format!r}")
    Path(path).write_text(text, encoding="utf-8")


def load_report(path: str | Path) -> BenchmarkReport:
    return BenchmarkReport.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
