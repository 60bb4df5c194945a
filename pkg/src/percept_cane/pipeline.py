"""End-to-end device loop over a replayable scenario.

The world is a time-ordered list of events (distance changes, optionally
with a captured frame); the loop polls the simulated sensor every tick,
feeds the alert engine, and on each alert speaks the obstacle sentence,
then runs OCR, then object detection, speaking their results in that
order. Time is a virtual clock advanced by modeled latencies, so a run is
fully determined by (scenario, config, seed) and reports are
machine-independent. Wall-clock cost of the framework itself is measured
by callers, never stored in the report.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import NamedTuple, Sequence

from . import alerts, perception
from .alerts import AlertConfig, AlertState, format_distance_line
from .perception import (
    BoundingBox,
    DetectorBackend,
    Frame,
    OcrBackend,
    load_class_vocabulary,
    validate_frame,
)
from .resources import data_path
from .sensor import DistanceMeasurement, SensorConfig, sensor_bench_csv, simulate_measurement
from .speech import (
    NullSynth,
    Priority,
    SpeechBackend,
    SpeechConfig,
    SpeechQueue,
    Transcript,
    VirtualClock,
    speak_all,
)

SCENARIO_DEMO_FILE = "scenario_demo.json"
STAGE_NAMES = ("sensor", "alert", "ocr", "detect", "speech")


@dataclass(frozen=True)
class PerceptionConfig:
    """Backend choices and modeled per-call stage latencies."""

    detector: str = "mock"
    ocr: str = "mock-tesseract"
    miss_prob: float = 0.0
    ocr_latency_s: float = 0.2
    detect_latency_s: float = 0.1

    def __post_init__(self) -> None:
        if self.ocr_latency_s < 0 or self.detect_latency_s < 0:
            raise ValueError("stage latencies must be non-negative")


@dataclass(frozen=True)
class BudgetConfig:
    """End-to-end cycle budget; the upper bound is the pass/fail line."""

    lower_s: float = 3.0
    upper_s: float = 5.0

    def __post_init__(self) -> None:
        if not 0 <= self.lower_s <= self.upper_s:
            raise ValueError("require 0 <= lower_s <= upper_s")

    @property
    def range_s(self) -> tuple[float, float]:
        return (self.lower_s, self.upper_s)


@dataclass(frozen=True)
class PipelineConfig:
    sensor: SensorConfig = SensorConfig()
    alert: AlertConfig = AlertConfig()
    perception: PerceptionConfig = PerceptionConfig()
    speech: SpeechConfig = SpeechConfig()
    budget: BudgetConfig = BudgetConfig()


def _section(cls, data: dict, name: str):
    known = {f.name for f in fields(cls)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"config section {name!r}: unknown keys {sorted(unknown)}")
    return cls(**data)


def load_config(path: str | Path) -> PipelineConfig:
    """Read a pipeline config JSON; absent sections keep their defaults."""
    with open(path) as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise ValueError(f"{path}: config root must be an object")
    sections = {
        "sensor": SensorConfig,
        "alert": AlertConfig,
        "perception": PerceptionConfig,
        "speech": SpeechConfig,
        "budget": BudgetConfig,
    }
    unknown = set(raw) - set(sections)
    if unknown:
        raise ValueError(f"{path}: unknown config sections {sorted(unknown)}")
    kwargs = {}
    for name, cls in sections.items():
        if name in raw:
            kwargs[name] = _section(cls, raw[name], name)
    return PipelineConfig(**kwargs)


@dataclass(frozen=True)
class ScenarioEvent:
    t_s: float
    distance_cm: float
    frame: Frame | None = None


@dataclass(frozen=True)
class Scenario:
    name: str
    tick_s: float
    duration_s: float
    events: tuple[ScenarioEvent, ...]

    def __post_init__(self) -> None:
        if self.tick_s <= 0:
            raise ValueError("tick_s must be positive")
        if self.duration_s <= 0:
            raise ValueError("duration_s must be positive")
        times = [e.t_s for e in self.events]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("event times must be strictly increasing")


def _parse_box(values: Sequence[float], where: str) -> BoundingBox:
    if len(values) != 4:
        raise ValueError(f"{where}: box needs 4 numbers, got {len(values)}")
    return BoundingBox(*map(float, values))


def load_scenario(path: str | Path, vocabulary: Sequence[str] | None = None) -> Scenario:
    """Parse a scenario JSON file.

    Frame object labels are validated against the detector vocabulary
    (bundled COCO list when none is passed).
    """
    with open(path) as fh:
        raw = json.load(fh)
    required = {"name", "tick_s", "duration_s", "events"}
    if not isinstance(raw, dict) or not required <= set(raw):
        raise ValueError(f"{path}: scenario needs keys {sorted(required)}")
    unknown = set(raw) - required
    if unknown:
        raise ValueError(f"{path}: unknown scenario keys {sorted(unknown)}")

    events: list[ScenarioEvent] = []
    vocab_loaded = vocabulary
    for i, ev in enumerate(raw["events"]):
        unknown = set(ev) - {"t", "distance_cm", "frame"}
        if unknown:
            raise ValueError(f"{path}: event {i}: unknown keys {sorted(unknown)}")
        frame = None
        if ev.get("frame") is not None:
            f = ev["frame"]
            unknown = set(f) - {"frame_id", "texts", "objects"}
            if unknown:
                raise ValueError(f"{path}: event {i}: unknown frame keys {sorted(unknown)}")
            texts = tuple(
                (str(t["text"]), _parse_box(t["region"], f"{path}: event {i} text"))
                for t in f.get("texts", ())
            )
            objects = tuple(
                (str(o["label"]), _parse_box(o["box"], f"{path}: event {i} object"))
                for o in f.get("objects", ())
            )
            frame = Frame(
                frame_id=str(f.get("frame_id", f"frame-{i:03d}")),
                truth_objects=objects,
                truth_texts=texts,
                captured_at_s=float(ev["t"]),
            )
            if objects:
                if vocab_loaded is None:
                    vocab_loaded = load_class_vocabulary()
                validate_frame(frame, vocab_loaded)
        events.append(
            ScenarioEvent(t_s=float(ev["t"]), distance_cm=float(ev["distance_cm"]), frame=frame)
        )
    return Scenario(
        name=str(raw["name"]),
        tick_s=float(raw["tick_s"]),
        duration_s=float(raw["duration_s"]),
        events=tuple(events),
    )


def demo_scenario_path() -> Path:
    return data_path(SCENARIO_DEMO_FILE)


@dataclass(frozen=True)
class StageStats:
    count: int
    mean_s: float
    max_s: float

    @staticmethod
    def of(durations: Sequence[float]) -> "StageStats":
        if not durations:
            return StageStats(0, 0.0, 0.0)
        if any(d < 0 for d in durations):
            raise ValueError("stage durations must be non-negative")
        return StageStats(len(durations), math.fsum(durations) / len(durations), max(durations))


@dataclass(frozen=True)
class RunReport:
    stages: dict[str, StageStats]
    end_to_end: StageStats
    alerts_fired: int
    budget_pass: bool


class RunResult(NamedTuple):
    report: RunReport
    transcript: Transcript
    log: list[str]


def check_budget(report: RunReport, budget_s: tuple[float, float]) -> bool:
    """True iff the mean alert-cycle time is at or under the upper bound.

    The range's lower end is informational (the hardware reference point);
    running faster than it still passes. No alert cycles also passes.
    """
    lower, upper = budget_s
    if lower > upper:
        raise ValueError("budget lower bound exceeds upper bound")
    return report.end_to_end.mean_s <= upper


def format_sensor_bench(samples: Sequence[DistanceMeasurement]) -> str:
    """Bench report for ranging samples (see sensor.sensor_bench_csv)."""
    return sensor_bench_csv(samples)


def run(
    scenario: Scenario,
    cfg: PipelineConfig | None = None,
    seed: int | None = None,
    detector: DetectorBackend | None = None,
    ocr: OcrBackend | None = None,
    speech_backend: SpeechBackend | None = None,
) -> RunResult:
    """Replay a scenario through the full device loop.

    Every tick: range, log the reading, feed the alert engine. On an alert:
    speak the obstacle sentence, then OCR the active frame, then detect
    objects, speaking each result; the whole cycle is timed tick-start to
    speech-drained. The active frame is the most recent event's frame, so
    an event without one clears it; an alert with no frame degrades to a
    ranging-only announcement with a logged warning.
    """
    cfg = cfg or PipelineConfig()
    if seed is not None:
        cfg = replace(cfg, sensor=replace(cfg.sensor, seed=seed))
    rng = random.Random(cfg.sensor.seed)
    detector = detector or perception.build_detector(
        cfg.perception.detector, miss_prob=cfg.perception.miss_prob, seed=cfg.sensor.seed
    )
    ocr = ocr or perception.build_ocr(cfg.perception.ocr, seed=cfg.sensor.seed)
    speech_backend = speech_backend or NullSynth()
    alert_cfg = cfg.alert

    clock = VirtualClock()
    queue = SpeechQueue(capacity=cfg.speech.capacity)
    state = AlertState()
    transcript = Transcript()
    log: list[str] = []
    durations: dict[str, list[float]] = {name: [] for name in STAGE_NAMES}
    cycle_times: list[float] = []
    alerts_fired = 0

    # world state before any event applies: far away, no frame
    distance = 2.0 * cfg.sensor.max_range_cm
    frame: Frame | None = None
    pending = list(scenario.events)

    ticks = range(int(math.ceil(scenario.duration_s / scenario.tick_s)))
    for k in ticks:
        t = k * scenario.tick_s
        if t >= scenario.duration_s:
            break
        while pending and pending[0].t_s <= t:
            ev = pending.pop(0)
            distance = ev.distance_cm
            frame = ev.frame
        clock.advance_to(t)
        cycle_start = clock.now()

        m = simulate_measurement(distance, cfg.sensor, rng, timestamp_s=t)
        clock.advance(m.exec_time_s)
        durations["sensor"].append(m.exec_time_s)
        log.append(format_distance_line(m.distance_cm))
        log.append(f"time taken to execute {m.exec_time_s}")

        event = alerts.on_measurement(state, m, alert_cfg)
        durations["alert"].append(0.0)
        if event is None:
            if len(queue) > 0:
                # leftovers from a failed-speech retry on a previous cycle
                before = clock.now()
                speak_all(queue, speech_backend, clock, cfg.speech.base_per_char_s, transcript)
                durations["speech"].append(clock.now() - before)
            continue

        alerts_fired += 1
        log.append(f"obstacle alert at t={t:.3f} s: {event.message}")
        queue.submit(event.message, Priority.ALERT, clock.now(), cfg.speech.default_rate)

        if frame is None:
            log.append(f"warning: no frame at t={t:.3f} s; ranging-only alert")
        else:
            extractions = perception.extract_text(frame, ocr)
            clock.advance(cfg.perception.ocr_latency_s)
            durations["ocr"].append(cfg.perception.ocr_latency_s)
            for ex in extractions:
                queue.submit(
                    cfg.speech.ocr_template.format(text=ex.text),
                    Priority.PERCEPTION,
                    clock.now(),
                    cfg.speech.default_rate,
                )
            detections = perception.detect(frame, detector)
            clock.advance(cfg.perception.detect_latency_s)
            durations["detect"].append(cfg.perception.detect_latency_s)
            for det in detections:
                queue.submit(
                    cfg.speech.detection_template.format(label=det.label),
                    Priority.PERCEPTION,
                    clock.now(),
                    cfg.speech.default_rate,
                )

        before = clock.now()
        speak_all(queue, speech_backend, clock, cfg.speech.base_per_char_s, transcript)
        durations["speech"].append(clock.now() - before)
        cycle_times.append(clock.now() - cycle_start)

    stages = {name: StageStats.of(durations[name]) for name in STAGE_NAMES}
    end_to_end = StageStats.of(cycle_times)
    report = RunReport(
        stages=stages, end_to_end=end_to_end, alerts_fired=alerts_fired, budget_pass=False
    )
    report = replace(report, budget_pass=check_budget(report, cfg.budget.range_s))
    return RunResult(report=report, transcript=transcript, log=log)


def run_report_to_csv(report: RunReport) -> str:
    lines = ["stage,count,mean_s,max_s"]
    for name in STAGE_NAMES:
        s = report.stages[name]
        lines.append(f"{name},{s.count},{s.mean_s!r},{s.max_s!r}")
    e = report.end_to_end
    lines.append(f"end_to_end,{e.count},{e.mean_s!r},{e.max_s!r}")
    return "\n".join(lines) + "\n"


def run_report_to_json(report: RunReport) -> str:
    payload = {
        "stages": {
            name: {
                "count": report.stages[name].count,
                "mean_s": report.stages[name].mean_s,
                "max_s": report.stages[name].max_s,
            }
            for name in STAGE_NAMES
        },
        "end_to_end": {
            "count": report.end_to_end.count,
            "mean_s": report.end_to_end.mean_s,
            "max_s": report.end_to_end.max_s,
        },
        "alerts_fired": report.alerts_fired,
        "budget_pass": report.budget_pass,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
