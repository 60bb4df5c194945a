"""OCR benchmarking: corpus generation, scoring, routing between engines.

Error rate is sample-level: the fraction of samples whose recognized string
differs from the truth at all (not a character error rate). Confusion
tallies come from a unit-cost edit-distance alignment of each mismatching
pair; only substitution steps are counted. Routing picks an engine from
benchmark profiles by accuracy (per sample kind) or speed (per compute
device).
"""

from __future__ import annotations

import csv
import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Sequence

from .perception import (
    EASYOCR_CONFUSIONS,
    TESSERACT_CONFUSIONS,
    BackendError,
    OcrBackend,
)
from .resources import data_path

WORDLIST_FILE = "wordlist.txt"
ENGINE_PROFILES_FILE = "engine_profiles.csv"

# Confusion tables for the engines profiled in the bundled CSV; the file
# itself stays numeric-only.
_KNOWN_CONFUSIONS = {
    "tesseract": TESSERACT_CONFUSIONS,
    "easyocr": EASYOCR_CONFUSIONS,
}


class SampleKind(str, Enum):
    ALPHABETS = "alphabets"
    NUMBERS = "numbers"


class Compute(str, Enum):
    CPU = "cpu"
    GPU = "gpu"


class RoutePolicy(str, Enum):
    ACCURACY = "accuracy"
    SPEED = "speed"


@dataclass(frozen=True)
class OcrSample:
    sample_id: str
    kind: SampleKind
    truth: str

    def __post_init__(self) -> None:
        if self.kind is SampleKind.ALPHABETS:
            parts = self.truth.split(" ")
            ok = len(parts) == 2 and all(p.isalpha() and p == p.lower() for p in parts)
            if not ok:
                raise ValueError(f"{self.sample_id}: not two lowercase words: {self.truth!r}")
        else:
            ok = (
                len(self.truth) == 8
                and self.truth[5] == "."
                and self.truth[:5].isdigit()
                and self.truth[6:].isdigit()
            )
            if not ok:
                raise ValueError(f"{self.sample_id}: not NNNNN.NN: {self.truth!r}")


@dataclass(frozen=True)
class EngineProfile:
    engine_id: str
    error_rate_numbers: float
    error_rate_alphabets: float
    speed_cpu_s: float
    speed_gpu_s: float
    confusion_rules: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        for rate in (self.error_rate_numbers, self.error_rate_alphabets):
            if not 0.0 <= rate <= 100.0:
                raise ValueError(f"{self.engine_id}: error rate out of [0,100]")
        if self.speed_cpu_s <= 0 or self.speed_gpu_s <= 0:
            raise ValueError(f"{self.engine_id}: speeds must be positive")

    def error_rate(self, kind: SampleKind) -> float:
        if kind is SampleKind.NUMBERS:
            return self.error_rate_numbers
        return self.error_rate_alphabets

    def speed_s(self, compute: Compute) -> float:
        if compute is Compute.CPU:
            return self.speed_cpu_s
        return self.speed_gpu_s


@dataclass(frozen=True)
class OcrReport:
    kind: SampleKind
    total: int
    mismatches: int
    error_rate: float
    confusions: dict[tuple[str, str], int] = field(default_factory=dict)
    mean_speed_s: float = 0.0

    def __post_init__(self) -> None:
        if self.total <= 0:
            raise ValueError("total must be positive")
        if not 0 <= self.mismatches <= self.total:
            raise ValueError("mismatches out of range")


def load_wordlist(path: str | Path | None = None) -> list[str]:
    if path is None:
        path = data_path(WORDLIST_FILE)
    words = Path(path).read_text().split()
    if not words:
        raise ValueError(f"{path}: empty wordlist")
    for w in words:
        if not (w.isalpha() and w == w.lower()):
            raise ValueError(f"{path}: bad wordlist entry {w!r}")
    return words


def generate_samples(
    kind: SampleKind,
    n: int,
    seed: int,
    words: Sequence[str] | None = None,
) -> list[OcrSample]:
    """Deterministic benchmark corpus for one sample kind.

    Numbers follow the fixed NNNNN.NN shape; alphabets are two words drawn
    from the bundled wordlist.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    kind = SampleKind(kind)
    if kind is SampleKind.ALPHABETS and words is None:
        words = load_wordlist()
    rng = random.Random(seed)
    samples: list[OcrSample] = []
    for i in range(n):
        if kind is SampleKind.NUMBERS:
            truth = f"{rng.randrange(100000):05d}.{rng.randrange(100):02d}"
        else:
            truth = f"{rng.choice(words)} {rng.choice(words)}"
        samples.append(OcrSample(f"{kind.value}-{i:05d}", kind, truth))
    return samples


def align_confusions(truth: str, output: str) -> Counter[tuple[str, str]]:
    """Substitutions in a minimum-edit-distance alignment of one pair.

    Unit costs; the backtrace prefers the diagonal (match/substitute) over
    deletion over insertion at equal cost, so equal-length substitution-only
    corruptions are recovered position for position.
    """
    n, m = len(truth), len(output)
    dp = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        dp[i][0] = i
    for j in range(m + 1):
        dp[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            cost = 0 if truth[i - 1] == output[j - 1] else 1
            dp[i][j] = min(dp[i - 1][j - 1] + cost, dp[i - 1][j] + 1, dp[i][j - 1] + 1)
    confusions: Counter[tuple[str, str]] = Counter()
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0:
            cost = 0 if truth[i - 1] == output[j - 1] else 1
            if dp[i][j] == dp[i - 1][j - 1] + cost:
                if cost:
                    confusions[(truth[i - 1], output[j - 1])] += 1
                i -= 1
                j -= 1
                continue
        if i > 0 and dp[i][j] == dp[i - 1][j] + 1:
            i -= 1
            continue
        j -= 1
    return confusions


def score(pairs: Sequence[tuple[str, str]], kind: SampleKind) -> OcrReport:
    """Score (truth, output) pairs into a report.

    Permutation-invariant: mismatch counting and confusion tallies are both
    order-free sums.
    """
    if not pairs:
        raise ValueError("score needs at least one pair")
    kind = SampleKind(kind)
    mismatches = 0
    confusions: Counter[tuple[str, str]] = Counter()
    for truth, output in pairs:
        if output != truth:
            mismatches += 1
            confusions.update(align_confusions(truth, output))
    return OcrReport(
        kind=kind,
        total=len(pairs),
        mismatches=mismatches,
        error_rate=100.0 * mismatches / len(pairs),
        confusions=dict(confusions),
    )


def route(
    kind: SampleKind | str,
    compute: Compute | str,
    policy: RoutePolicy | str,
    profiles: Sequence[EngineProfile],
) -> str:
    """Pick an engine id from benchmark profiles.

    Accuracy policy minimizes the error rate for the sample kind; speed
    policy minimizes seconds/image on the compute device. Ties break by
    engine id.
    """
    if not profiles:
        raise ValueError("no engine profiles")
    kind = SampleKind(kind)
    compute = Compute(compute)
    policy = RoutePolicy(policy)
    if policy is RoutePolicy.ACCURACY:
        best = min(profiles, key=lambda p: (p.error_rate(kind), p.engine_id))
    else:
        best = min(profiles, key=lambda p: (p.speed_s(compute), p.engine_id))
    return best.engine_id


def run_benchmark(
    kind: SampleKind | str,
    n: int,
    backend: OcrBackend,
    seed: int,
    words: Sequence[str] | None = None,
    clock: Callable[[], float] = time.perf_counter,
) -> OcrReport:
    """Generate a corpus, run it through a backend, and score the output."""
    kind = SampleKind(kind)
    samples = generate_samples(kind, n, seed, words=words)
    pairs: list[tuple[str, str]] = []
    elapsed = 0.0
    for sample in samples:
        t0 = clock()
        try:
            output = backend.transcribe(sample.truth, key=sample.sample_id)
        except BackendError as exc:
            raise BackendError(exc.backend_id, f"{sample.sample_id}: {exc.cause}") from exc
        except Exception as exc:
            raise BackendError(
                getattr(backend, "backend_id", "?"), f"{sample.sample_id}: {exc}"
            ) from exc
        elapsed += clock() - t0
        pairs.append((sample.truth, output))
    report = score(pairs, kind)
    return OcrReport(
        kind=report.kind,
        total=report.total,
        mismatches=report.mismatches,
        error_rate=report.error_rate,
        confusions=report.confusions,
        mean_speed_s=elapsed / n,
    )


def load_engine_profiles(path: str | Path | None = None) -> list[EngineProfile]:
    if path is None:
        path = data_path(ENGINE_PROFILES_FILE)
    out: list[EngineProfile] = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            engine = row["engine"].strip()
            out.append(
                EngineProfile(
                    engine_id=engine,
                    error_rate_numbers=float(row["err_numbers"]),
                    error_rate_alphabets=float(row["err_alphabets"]),
                    speed_cpu_s=float(row["speed_cpu_s"]),
                    speed_gpu_s=float(row["speed_gpu_s"]),
                    confusion_rules=_KNOWN_CONFUSIONS.get(engine, ()),
                )
            )
    if not out:
        raise ValueError(f"{path}: no engine rows")
    return out


def _confusion_items(report: OcrReport) -> list[tuple[str, str, int]]:
    return sorted((f, t, c) for (f, t), c in report.confusions.items())


def report_to_json(report: OcrReport, include_speed: bool = True) -> str:
    payload = {
        "kind": report.kind.value,
        "total": report.total,
        "mismatches": report.mismatches,
        "error_rate": report.error_rate,
        "confusions": [
            {"from": f, "to": t, "count": c} for f, t, c in _confusion_items(report)
        ],
        "mean_speed_s": report.mean_speed_s if include_speed else 0.0,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def report_to_csv(report: OcrReport, include_speed: bool = True) -> str:
    confusions = ";".join(f"{f}>{t}:{c}" for f, t, c in _confusion_items(report))
    lines = [
        "kind,total,mismatches,error_rate,confusions,mean_speed_s",
        ",".join(
            [
                report.kind.value,
                str(report.total),
                str(report.mismatches),
                repr(report.error_rate),
                confusions,
                repr(report.mean_speed_s if include_speed else 0.0),
            ]
        ),
    ]
    return "\n".join(lines) + "\n"
