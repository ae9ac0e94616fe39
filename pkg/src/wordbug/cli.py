"""Command-line entry point: ``wordbug <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 remote-classifier error.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from dataclasses import asdict
from pathlib import Path

from .attack import AUTO, STRATEGIES, AttackConfig, run_attack
from .evaluation import (NONE, DatasetError, emit_report, load_dataset, run_benchmark,
                         transferability)
from .model import BowClassifier, ClassifierError, RemoteClassifier, RemoteClassifierError, train_bow
from .scoring import PosWeights, calibrate_pos_weights

log = logging.getLogger("wordbug")

EXIT_USAGE, EXIT_IO, EXIT_REMOTE = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def strategy_name(s: str) -> str:
    name = s.strip().replace("-", "_")
    if name not in STRATEGIES and name != NONE:
        raise UsageError(f"unknown strategy {s!r}")
    return name


def load_model(spec: str, labels=None):
    """``file:<path>`` for a saved classifier, ``http:<url>`` for a remote one."""
    if spec.startswith(("http://", "https://")):
        return RemoteClassifier(spec, labels)
    if spec.startswith("http:"):
        url = spec[len("http:"):]
        if url.startswith("//"):
            url = "http:" + url
        return RemoteClassifier(url, labels)
    if spec.startswith("file:"):
        return BowClassifier.load(spec[len("file:"):])
    raise UsageError(f"model spec must start with file: or http:, got {spec!r}")


def _threshold(s: str):
    if s.lower() == AUTO:
        return AUTO
    try:
        return float(s)
    except ValueError:
        raise UsageError(f"tag threshold must be 'auto' or a number, got {s!r}") from None


def _write_json(path: str, obj) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _labels(args, dataset):
    return args.labels.split(",") if getattr(args, "labels", None) else dataset.label_names


def _sample(examples, n, seed):
    if n is None or n >= len(examples):
        return list(range(len(examples)))
    return sorted(random.Random(seed).sample(range(len(examples)), n))


def cmd_train(args) -> int:
    ds = load_dataset(args.data)
    model = train_bow(ds.examples, args.variant, class_names=ds.label_names, seed=args.seed,
                      iterations=args.iterations, learning_rate=args.learning_rate)
    model.save(args.out)
    log.info("trained %s on %d examples, vocabulary %d", args.variant, len(ds), len(model.vocabulary))
    return 0


def cmd_calibrate(args) -> int:
    ds = load_dataset(args.data)
    model = load_model(args.model, _labels(args, ds))
    idx = _sample(ds.examples, args.samples, args.seed)
    weights = calibrate_pos_weights([ds.examples[i] for i in idx], model, args.normalization,
                                    meta={"dataset": ds.name, "classifier": args.model, "seed": args.seed})
    weights.save(args.out)
    return 0


def cmd_attack(args) -> int:
    ds = load_dataset(args.data)
    model = load_model(args.model, _labels(args, ds))
    strategy = strategy_name(args.strategy)
    if strategy == NONE:
        raise UsageError("attack needs a real strategy")
    config = AttackConfig(epsilon=args.epsilon, tag_threshold=_threshold(args.tag_threshold), seed=args.seed,
                          strategy=strategy, max_queries=args.max_queries,
                          fallback_threshold_zero=args.fallback)
    weights = None
    if strategy.startswith("fastwordbug"):
        if not args.weights:
            raise UsageError(f"{args.strategy} needs --weights")
        weights = PosWeights.load(args.weights)
    names = list(model.class_names)
    records = []
    for i in _sample(ds.examples, args.samples, args.seed):
        label, text = ds.examples[i]
        result = run_attack(text, model, config, weights, gold_label=names.index(label),
                            rng=random.Random(args.seed ^ i))
        records.append({"index": i, "gold": label, "result": result.to_dict()})
    attacked = [r["result"] for r in records if not r["result"]["skipped"]]
    summary = {
        "documents": len(records),
        "attacked": len(attacked),
        "successes": sum(r["success"] for r in attacked),
        "accuracy_after": sum(names[r["result"]["final_prediction"]["label"]] == r["gold"] for r in records)
        / max(len(records), 1),
        "mean_queries": sum(r["queries"]["calls"] for r in attacked) / max(len(attacked), 1),
    }
    _write_json(args.out, {"model": args.model, "dataset": ds.name, "label_names": names,
                           "config": asdict(config), "summary": summary, "records": records})
    log.info("attack summary: %s", summary)
    return 0


def cmd_benchmark(args) -> int:
    ds = load_dataset(args.data)
    specs = [s for s in args.models.split(",") if s]
    models = {spec: load_model(spec, _labels(args, ds)) for spec in specs}
    strategies = [strategy_name(s) for s in args.strategies.split(",") if s]
    config = AttackConfig(epsilon=args.epsilon, tag_threshold=_threshold(args.tag_threshold), seed=args.seed,
                          max_queries=args.max_queries, fallback_threshold_zero=args.fallback)
    weights = {specs[0]: PosWeights.load(args.weights)} if args.weights and len(specs) == 1 else None
    report = run_benchmark(ds, models, strategies, config, args.samples, args.reps,
                           n_calibration=args.calibration_samples, weights=weights,
                           normalization=args.normalization)
    emit_report(report, args.out, "json")
    if args.markdown:
        emit_report(report, args.markdown, "markdown")
    return 0


def cmd_transfer(args) -> int:
    sources = {}
    label_names = None
    for path in [p for p in args.results.split(",") if p]:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        sources[data["model"]] = [(r["gold"], r["result"]["adversarial_text"]) for r in data["records"]]
        label_names = label_names or data.get("label_names")
    targets = {spec: load_model(spec, args.labels.split(",") if args.labels else label_names)
               for spec in args.models.split(",") if spec}
    _write_json(args.out, transferability(sources, targets))
    return 0


def cmd_serve_mock(args) -> int:
    from .server import make_server

    server = make_server(BowClassifier.load(args.model), args.host, args.port)
    host, port = server.server_address[:2]
    print(f"serving {args.model} on http://{host}:{port}/", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wordbug", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def attack_opts(sp):
        sp.add_argument("--epsilon", type=float, default=0.1)
        sp.add_argument("--tag-threshold", default=AUTO)
        sp.add_argument("--max-queries", type=int)
        sp.add_argument("--fallback", action="store_true",
                        help="retry the POS filter at threshold 0 when it keeps no words")

    sp = sub.add_parser("train", help="train a bag-of-words classifier")
    sp.add_argument("--data", required=True)
    sp.add_argument("--variant", choices=["nb", "logreg"], default="nb")
    sp.add_argument("--out", required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--iterations", type=int, default=300)
    sp.add_argument("--learning-rate", type=float, default=0.1)
    sp.set_defaults(func=cmd_train)

    sp = sub.add_parser("calibrate", help="compute POS-tag weights")
    sp.add_argument("--data", required=True)
    sp.add_argument("--model", required=True)
    sp.add_argument("--normalization", choices=["frequency", "raw"], default="frequency")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--out", required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--labels")
    sp.set_defaults(func=cmd_calibrate)

    sp = sub.add_parser("attack", help="attack every document of a dataset")
    sp.add_argument("--data", required=True)
    sp.add_argument("--model", required=True)
    sp.add_argument("--weights")
    sp.add_argument("--strategy", default="fastwordbug")
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", required=True)
    sp.add_argument("--labels")
    attack_opts(sp)
    sp.set_defaults(func=cmd_attack)

    sp = sub.add_parser("benchmark", help="compare strategies across classifiers")
    sp.add_argument("--data", required=True)
    sp.add_argument("--models", required=True)
    sp.add_argument("--strategies", default="fastwordbug,deepwordbug,textbugger-bb")
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--calibration-samples", type=int, default=100)
    sp.add_argument("--reps", type=int, default=5)
    sp.add_argument("--normalization", choices=["frequency", "raw"], default="frequency")
    sp.add_argument("--weights")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", required=True)
    sp.add_argument("--markdown")
    sp.add_argument("--labels")
    attack_opts(sp)
    sp.set_defaults(func=cmd_benchmark)

    sp = sub.add_parser("transfer", help="cross-model accuracy on adversarial texts")
    sp.add_argument("--results", required=True)
    sp.add_argument("--models", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--labels")
    sp.set_defaults(func=cmd_transfer)

    sp = sub.add_parser("serve-mock", help="serve a saved classifier over HTTP")
    sp.add_argument("--model", required=True)
    sp.add_argument("--port", type=int, default=8000)
    sp.add_argument("--host", default="127.0.0.1")
    sp.set_defaults(func=cmd_serve_mock)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if hasattr(args, "normalization"):
        args.normalization = {"frequency": "frequency_softmax", "raw": "raw_softmax"}[args.normalization]
    try:
        return args.func(args)
    except RemoteClassifierError as exc:
        print(f"wordbug: remote classifier error: {exc}", file=sys.stderr)
        return EXIT_REMOTE
    except (DatasetError, json.JSONDecodeError, OSError, KeyError) as exc:
        print(f"wordbug: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, ClassifierError, ValueError) as exc:
        print(f"wordbug: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
