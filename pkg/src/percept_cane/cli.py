"""Command-line entry point.

Subcommands cover the runtime (scenario replay, sensor bench) and the lab
(model selection, detection metrics, OCR corpus/scoring/routing/bench).
Data output goes to --out ("-" for standard output) and is byte-stable for
a given argv and input files; wall-clock numbers only appear behind
--verbose or --timing and never on standard output.

Exit codes: 0 success, 1 bad input (usage, missing file, validation),
2 runtime failure (backend errors, unexpected exceptions).
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path

from . import __version__, detector_lab, ocr_lab, pipeline, sensor
from .perception import BackendError, build_ocr
from .resources import DATA_ENV_VAR, resolve_table
from .speech import SpeechBackendError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this tool reserves 2 for runtime
    # failures
    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _write(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _add_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default="-", help="output file, or - for stdout (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="percept-cane",
        description=(
            "Assistive-perception pipeline simulator and evaluation lab. "
            f"Set {DATA_ENV_VAR} to override the bundled data directory."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("run", help="replay a scenario through the device loop")
    p.add_argument("scenario", help="scenario JSON file")
    p.add_argument("--config", help="pipeline config JSON file")
    p.add_argument("--seed", type=int, help="override the sensor seed")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="report format")
    p.add_argument("--transcript", help="also write the transcript to this file")
    p.add_argument("--log", help="also write the device log to this file")
    p.add_argument(
        "--print-transcript",
        action="store_true",
        help="print the transcript before the report",
    )
    p.add_argument(
        "--verbose", action="store_true", help="wall-clock timing to stderr"
    )
    _add_out(p)

    p = sub.add_parser("sensor-bench", help="ranging timing table with mean line")
    p.add_argument(
        "--table", default=sensor.SENSOR_TIMINGS_FILE, help="timings CSV (default: bundled)"
    )
    _add_out(p)

    p = sub.add_parser("models-pareto", help="compute-versus-accuracy frontier of a model table")
    p.add_argument(
        "--table", default="fig8_models.csv", help="model table CSV (default: bundled fig8)"
    )
    p.add_argument(
        "--map-field",
        choices=("map50", "map5095"),
        default="map50",
        help="which mAP column to use",
    )
    _add_out(p)

    p = sub.add_parser("models-recommend", help="best model within a gflops budget")
    p.add_argument("--table", default="fig8_models.csv", help="model table CSV")
    p.add_argument("--map-field", choices=("map50", "map5095"), default="map50")
    p.add_argument("--budget", type=float, required=True, help="gflops budget")
    _add_out(p)

    p = sub.add_parser("models-eval", help="score predictions against ground truth")
    p.add_argument("--truths", required=True, help="truth records: image_id,label,x0,y0,x1,y1")
    p.add_argument(
        "--preds", required=True, help="prediction records: image_id,label,conf,x0,y0,x1,y1"
    )
    _add_out(p)

    p = sub.add_parser("ocr-gen", help="generate a benchmark corpus")
    p.add_argument("--kind", choices=("alphabets", "numbers"), required=True)
    p.add_argument("--n", type=int, required=True, help="sample count")
    p.add_argument("--seed", type=int, default=0)
    _add_out(p)

    p = sub.add_parser("ocr-score", help="score recognition output pairs")
    p.add_argument("pairs", help="CSV of truth,output rows")
    p.add_argument("--kind", choices=("alphabets", "numbers"), required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_out(p)

    p = sub.add_parser("ocr-route", help="pick an engine from benchmark profiles")
    p.add_argument("--kind", choices=("alphabets", "numbers"), required=True)
    p.add_argument("--compute", choices=("cpu", "gpu"), required=True)
    p.add_argument("--policy", choices=("accuracy", "speed"), required=True)
    p.add_argument("--profiles", help="engine profile CSV (default: bundled)")
    _add_out(p)

    p = sub.add_parser("ocr-bench", help="run a mock engine over a generated corpus")
    p.add_argument("--kind", choices=("alphabets", "numbers"), required=True)
    p.add_argument(
        "--engine",
        default="mock-tesseract",
        help="backend id: mock, mock-tesseract, mock-easyocr",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument(
        "--timing",
        action="store_true",
        help="include measured mean_speed_s (breaks byte-stable output)",
    )
    _add_out(p)

    return parser


def _cmd_run(args) -> int:
    cfg = pipeline.load_config(args.config) if args.config else pipeline.PipelineConfig()
    scenario = pipeline.load_scenario(args.scenario)
    t0 = time.perf_counter()
    result = pipeline.run(scenario, cfg, seed=args.seed)
    wall_s = time.perf_counter() - t0
    if args.format == "json":
        report_text = pipeline.run_report_to_json(result.report)
    else:
        report_text = pipeline.run_report_to_csv(result.report)
    body = result.transcript.render() + report_text if args.print_transcript else report_text
    _write(body, args.out)
    if args.transcript:
        Path(args.transcript).write_text(result.transcript.render())
    if args.log:
        Path(args.log).write_text("".join(line + "\n" for line in result.log))
    if args.verbose:
        sys.stderr.write(f"wall time: {wall_s * 1000:.1f} ms\n")
    return EXIT_OK


def _cmd_sensor_bench(args) -> int:
    samples = sensor.load_sensor_timings(resolve_table(args.table))
    _write(sensor.sensor_bench_csv(samples), args.out)
    return EXIT_OK


def _map_field(flag: str) -> str:
    return {"map50": "map_50", "map5095": "map_50_95"}[flag]


def _model_row(m: detector_lab.ModelSpec, map_field: str) -> str:
    return f"{m.display_name},{m.gflops!r},{m.map_value(map_field)!r}"


def _cmd_models_pareto(args) -> int:
    models = detector_lab.load_model_table(args.table)
    map_field = _map_field(args.map_field)
    _, excluded = detector_lab.split_by_map_field(models, map_field)
    front = detector_lab.pareto_frontier(models, map_field)
    _write("".join(_model_row(m, map_field) + "\n" for m in front), args.out)
    if excluded:
        names = ", ".join(m.display_name for m in excluded)
        sys.stderr.write(f"note: excluded rows without {args.map_field}: {names}\n")
    return EXIT_OK


def _cmd_models_recommend(args) -> int:
    models = detector_lab.load_model_table(args.table)
    map_field = _map_field(args.map_field)
    choice = detector_lab.recommend(models, args.budget, map_field)
    _write(_model_row(choice, map_field) + "\n", args.out)
    return EXIT_OK


def _cmd_models_eval(args) -> int:
    truths = detector_lab.load_truths(args.truths)
    preds = detector_lab.load_predictions(args.preds)
    map50 = detector_lab.map_at(preds, truths, 0.5)
    map5095 = detector_lab.map_range(preds, truths)
    _write(f"map50,{map50!r}\nmap5095,{map5095!r}\n", args.out)
    return EXIT_OK


def _cmd_ocr_gen(args) -> int:
    samples = ocr_lab.generate_samples(ocr_lab.SampleKind(args.kind), args.n, args.seed)
    lines = ["sample_id,kind,truth"]
    lines.extend(f"{s.sample_id},{s.kind.value},{s.truth}" for s in samples)
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _load_pairs(path: str) -> list[tuple[str, str]]:
    pairs: list[tuple[str, str]] = []
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row:
                continue
            if lineno == 1 and row[:2] == ["truth", "output"]:
                continue
            if len(row) != 2:
                raise ValueError(f"{path}:{lineno}: expected truth,output")
            pairs.append((row[0], row[1]))
    return pairs


def _cmd_ocr_score(args) -> int:
    report = ocr_lab.score(_load_pairs(args.pairs), ocr_lab.SampleKind(args.kind))
    text = (
        ocr_lab.report_to_json(report)
        if args.format == "json"
        else ocr_lab.report_to_csv(report)
    )
    _write(text, args.out)
    return EXIT_OK


def _cmd_ocr_route(args) -> int:
    profiles = ocr_lab.load_engine_profiles(args.profiles)
    engine = ocr_lab.route(args.kind, args.compute, args.policy, profiles)
    _write(engine + "\n", args.out)
    return EXIT_OK


def _cmd_ocr_bench(args) -> int:
    backend = build_ocr(args.engine, seed=args.seed)
    report = ocr_lab.run_benchmark(args.kind, args.n, backend, args.seed)
    text = (
        ocr_lab.report_to_json(report, include_speed=args.timing)
        if args.format == "json"
        else ocr_lab.report_to_csv(report, include_speed=args.timing)
    )
    _write(text, args.out)
    return EXIT_OK


_HANDLERS = {
    "run": _cmd_run,
    "sensor-bench": _cmd_sensor_bench,
    "models-pareto": _cmd_models_pareto,
    "models-recommend": _cmd_models_recommend,
    "models-eval": _cmd_models_eval,
    "ocr-gen": _cmd_ocr_gen,
    "ocr-score": _cmd_ocr_score,
    "ocr-route": _cmd_ocr_route,
    "ocr-bench": _cmd_ocr_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (BackendError, SpeechBackendError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RUNTIME
    except Exception as exc:  # pragma: no cover - safety net
        sys.stderr.write(f"unexpected error: {exc}\n")
        return EXIT_RUNTIME


if __name__ == "__main__":
    raise SystemExit(main())
