"""Ultrasonic time-of-flight ranging simulator.

Distance and echo time convert through the standard time-of-flight relation
(distance = wave speed x round trip / 2). The execution-time model is affine
in distance plus the physical round trip plus optional Gaussian jitter:

    exec_time = overhead_base + overhead_per_cm * d + roundtrip(d) + jitter

The default overhead coefficients and jitter scale are frozen from a linear
fit to the bundled reference timing table (``data/fig6_sensor_timings.csv``).
Simulated distances are exact; only timing is modeled.
"""

from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .resources import data_path

# Datasheet-style response-time envelope quoted for this sensor class. The
# bundled measurements sit well below it; both are kept for reference and
# neither is enforced.
RESPONSE_TIME_BOUNDS_S = (0.050, 0.200)

SENSOR_TIMINGS_FILE = "fig6_sensor_timings.csv"


@dataclass(frozen=True)
class SensorConfig:
    """Static parameters of the simulated ranging sensor."""

    speed_of_sound_mps: float = 343.0
    min_range_cm: float = 40.0
    max_range_cm: float = 300.0
    overhead_base_s: float = 0.003
    overhead_per_cm_s: float = 6e-5
    jitter_std_s: float = 0.0015
    seed: int = 0

    def __post_init__(self) -> None:
        if self.speed_of_sound_mps <= 0:
            raise ValueError("speed_of_sound_mps must be positive")
        if not 0 < self.min_range_cm < self.max_range_cm:
            raise ValueError("require 0 < min_range_cm < max_range_cm")
        if self.overhead_base_s < 0 or self.overhead_per_cm_s < 0:
            raise ValueError("overheads must be non-negative")
        if self.jitter_std_s < 0:
            raise ValueError("jitter_std_s must be non-negative")


@dataclass(frozen=True)
class EchoSample:
    """Trigger-to-echo elapsed time of one ultrasonic pulse."""

    roundtrip_s: float

    def __post_init__(self) -> None:
        if self.roundtrip_s < 0:
            raise ValueError("roundtrip_s must be non-negative")


@dataclass(frozen=True)
class DistanceMeasurement:
    """One ranging result: distance, time it took to produce, range flag."""

    distance_cm: float
    exec_time_s: float
    in_range: bool
    timestamp_s: float = 0.0

    def __post_init__(self) -> None:
        if self.distance_cm < 0:
            raise ValueError("distance_cm must be non-negative")
        if self.exec_time_s <= 0:
            raise ValueError("exec_time_s must be positive")


def distance_from_echo(echo: EchoSample, cfg: SensorConfig) -> float:
    """Convert an echo round trip to a distance in centimeters (d = c*t/2)."""
    return cfg.speed_of_sound_mps * echo.roundtrip_s / 2.0 * 100.0


def echo_from_distance(distance_cm: float, cfg: SensorConfig) -> EchoSample:
    """Exact inverse of :func:`distance_from_echo`."""
    if distance_cm < 0:
        raise ValueError("distance_cm must be non-negative")
    return EchoSample(roundtrip_s=2.0 * (distance_cm / 100.0) / cfg.speed_of_sound_mps)


def simulate_measurement(
    true_distance_cm: float,
    cfg: SensorConfig,
    rng: random.Random,
    timestamp_s: float = 0.0,
) -> DistanceMeasurement:
    """Produce one measurement of a known true distance.

    The reported distance is the true distance (no ranging noise); execution
    time follows the affine-plus-physics latency model. Jitter is drawn from
    the passed-in RNG and clamped at zero so it only ever adds delay; the
    total is floored at a tiny positive value so ``exec_time_s > 0`` holds
    even for an all-zero configuration.

    Out-of-range distances still return a measurement, flagged with
    ``in_range=False``; policy belongs to the caller.
    """
    if true_distance_cm < 0:
        raise ValueError("true_distance_cm must be non-negative")
    roundtrip = echo_from_distance(true_distance_cm, cfg).roundtrip_s
    exec_time = (
        cfg.overhead_base_s
        + cfg.overhead_per_cm_s * true_distance_cm
        + roundtrip
    )
    if cfg.jitter_std_s > 0:
        exec_time += max(0.0, rng.gauss(0.0, cfg.jitter_std_s))
    exec_time = max(exec_time, 1e-12)
    return DistanceMeasurement(
        distance_cm=true_distance_cm,
        exec_time_s=exec_time,
        in_range=cfg.min_range_cm <= true_distance_cm <= cfg.max_range_cm,
        timestamp_s=timestamp_s,
    )


def mean_response_time(samples: Sequence[DistanceMeasurement]) -> float:
    """Arithmetic mean of the execution times, in seconds."""
    if not samples:
        raise ValueError("mean_response_time needs at least one sample")
    return math.fsum(m.exec_time_s for m in samples) / len(samples)


def load_sensor_timings(path: str | Path | None = None, cfg: SensorConfig | None = None) -> list[DistanceMeasurement]:
    """Load a ``distance_cm,exec_time_s`` CSV as measurements.

    Defaults to the bundled reference timing table. Range flags are derived
    from ``cfg`` (default configuration when omitted); timestamps are zero
    since the file carries none.
    """
    if path is None:
        path = data_path(SENSOR_TIMINGS_FILE)
    cfg = cfg or SensorConfig()
    out: list[DistanceMeasurement] = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"distance_cm", "exec_time_s"} <= set(reader.fieldnames):
            raise ValueError(f"{path}: expected columns distance_cm,exec_time_s")
        for i, row in enumerate(reader, start=2):
            try:
                d = float(row["distance_cm"])
                t = float(row["exec_time_s"])
            except (TypeError, ValueError) as exc:
                raise ValueError(f"{path}:{i}: bad row {row!r}") from exc
            out.append(
                DistanceMeasurement(
                    distance_cm=d,
                    exec_time_s=t,
                    in_range=cfg.min_range_cm <= d <= cfg.max_range_cm,
                )
            )
    if not out:
        raise ValueError(f"{path}: no data rows")
    return out


def sensor_bench_csv(samples: Iterable[DistanceMeasurement]) -> str:
    """Render measurements as a bench report CSV.

    One ``distance_cm,exec_time_s`` row per sample, then a trailing
    ``mean,<value>`` line. Floats use shortest round-trip formatting so the
    emitted file re-parses to identical values.
    """
    samples = list(samples)
    lines = ["distance_cm,exec_time_s"]
    lines.extend(f"{m.distance_cm!r},{m.exec_time_s!r}" for m in samples)
    lines.append(f"mean,{mean_response_time(samples)!r}")
    return "\n".join(lines) + "\n"
