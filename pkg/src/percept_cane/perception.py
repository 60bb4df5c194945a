"""Frame model, backend interfaces, and deterministic mock backends.

Frames are symbolic: lists of ground-truth objects and texts instead of
pixels, so downstream metrics are exactly checkable. Mock backends derive
every random decision (confidence values, dropped detections, character
substitutions) from a sha256 hash of the seed and the item's identity, never
from shared RNG state, so outputs are independent of call order and safe for
concurrent read-only use.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol, Sequence

from .resources import data_path

COCO_LABELS_FILE = "coco_labels.txt"
COCO_CLASS_COUNT = 80

# Character confusions observed per engine; applied by the matching mock.
TESSERACT_CONFUSIONS = (("t", "r"),)
EASYOCR_CONFUSIONS = (("l", "i"), ("h", "n"), ("f", "t"), ("d", "a"), (".", "_"))

# Substitution rates calibrated so the mocks land near the benchmark error
# rates in data/engine_profiles.csv: easyocr substitutes the one '.' in a
# number sample (1.9% of samples), tesseract substitutes 't' in word pairs
# (bundled wordlist averages 0.604 't's per two-word sample, so 0.0116 per
# occurrence gives ~0.70% of samples).
TESSERACT_SUB_RATE = 0.0116
EASYOCR_SUB_RATE = 0.019


class BackendError(RuntimeError):
    """A perception backend failed; carries the backend id and cause."""

    def __init__(self, backend_id: str, cause: str):
        super().__init__(f"backend {backend_id!r} failed: {cause}")
        self.backend_id = backend_id
        self.cause = cause


@dataclass(frozen=True)
class BoundingBox:
    """Axis-aligned box in normalized image coordinates."""

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.x_min <= self.x_max <= 1.0):
            raise ValueError(f"require 0 <= x_min <= x_max <= 1, got {self}")
        if not (0.0 <= self.y_min <= self.y_max <= 1.0):
            raise ValueError(f"require 0 <= y_min <= y_max <= 1, got {self}")

    def area(self) -> float:
        return (self.x_max - self.x_min) * (self.y_max - self.y_min)


@dataclass(frozen=True)
class Frame:
    """One captured scene as symbolic ground truth."""

    frame_id: str
    truth_objects: tuple[tuple[str, BoundingBox], ...] = ()
    truth_texts: tuple[tuple[str, BoundingBox], ...] = ()
    captured_at_s: float = 0.0


@dataclass(frozen=True)
class Detection:
    label: str
    confidence: float
    box: BoundingBox

    def __post_init__(self) -> None:
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence out of [0,1]: {self.confidence}")


@dataclass(frozen=True)
class OcrExtraction:
    text: str
    confidence: float
    region: BoundingBox

    def __post_init__(self) -> None:
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence out of [0,1]: {self.confidence}")


class DetectorBackend(Protocol):
    backend_id: str

    def detect(self, frame: Frame) -> list[Detection]: ...


class OcrBackend(Protocol):
    backend_id: str

    def extract(self, frame: Frame) -> list[OcrExtraction]: ...

    def transcribe(self, text: str, key: str) -> str: ...


def _unit(seed: int, *parts: object) -> float:
    """Stable hash of (seed, parts) to [0, 1).

    sha256 rather than hash(): the builtin is salted per process, which
    would break cross-run determinism.
    """
    token = ":".join([str(seed), *map(str, parts)])
    digest = hashlib.sha256(token.encode()).digest()
    return int.from_bytes(digest[:8], "big") / 2**64


def _confidence(seed: int, frame_id: str, label: str) -> float:
    # [0.5, 1.0) keeps mock detections above typical score cutoffs while
    # still giving distinct, reproducible rankings
    return 0.5 + _unit(seed, "conf", frame_id, label) / 2.0


@dataclass(frozen=True)
class MockDetector:
    """Returns ground truth back, with seeded confidences and misses."""

    backend_id: str = "mock"
    miss_prob: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.miss_prob <= 1.0:
            raise ValueError("miss_prob must be in [0,1]")

    def detect(self, frame: Frame) -> list[Detection]:
        out: list[Detection] = []
        for i, (label, box) in enumerate(frame.truth_objects):
            if self.miss_prob > 0 and _unit(self.seed, "drop", frame.frame_id, i, label) < self.miss_prob:
                continue
            out.append(Detection(label, _confidence(self.seed, frame.frame_id, label), box))
        return out


@dataclass(frozen=True)
class MockOcr:
    """Applies an engine's character-confusion table to ground-truth text.

    Substitutions preserve length. Suffix insert/delete rates model the
    end-of-string misreads some engines show; both default off.
    """

    backend_id: str = "mock"
    confusion_rules: tuple[tuple[str, str], ...] = ()
    substitution_rate: float = 0.0
    suffix_insert_rate: float = 0.0
    suffix_insert_char: str = "."
    suffix_delete_rate: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        for rate in (self.substitution_rate, self.suffix_insert_rate, self.suffix_delete_rate):
            if not 0.0 <= rate <= 1.0:
                raise ValueError("rates must be in [0,1]")
        for rule in self.confusion_rules:
            if len(rule) != 2 or len(rule[0]) != 1 or len(rule[1]) != 1:
                raise ValueError(f"confusion rule must map one char to one char: {rule!r}")

    def transcribe(self, text: str, key: str) -> str:
        table = dict(self.confusion_rules)
        chars = list(text)
        for i, ch in enumerate(chars):
            if ch in table and _unit(self.seed, "sub", key, i, ch) < self.substitution_rate:
                chars[i] = table[ch]
        out = "".join(chars)
        if self.suffix_insert_rate > 0 and _unit(self.seed, "ins", key) < self.suffix_insert_rate:
            out += self.suffix_insert_char
        if out and self.suffix_delete_rate > 0 and _unit(self.seed, "del", key) < self.suffix_delete_rate:
            out = out[:-1]
        return out

    def extract(self, frame: Frame) -> list[OcrExtraction]:
        out = []
        for j, (text, region) in enumerate(frame.truth_texts):
            key = f"{frame.frame_id}/{j}"
            out.append(
                OcrExtraction(
                    text=self.transcribe(text, key),
                    confidence=_confidence(self.seed, frame.frame_id, f"text/{j}"),
                    region=region,
                )
            )
        return out


def detect(frame: Frame, backend: DetectorBackend) -> list[Detection]:
    try:
        return backend.detect(frame)
    except BackendError:
        raise
    except Exception as exc:
        raise BackendError(getattr(backend, "backend_id", "?"), str(exc)) from exc


def extract_text(frame: Frame, backend: OcrBackend) -> list[OcrExtraction]:
    try:
        return backend.extract(frame)
    except BackendError:
        raise
    except Exception as exc:
        raise BackendError(getattr(backend, "backend_id", "?"), str(exc)) from exc


def load_class_vocabulary(path: str | Path | None = None) -> list[str]:
    """Load the detector vocabulary: exactly 80 unique non-empty labels."""
    if path is None:
        path = data_path(COCO_LABELS_FILE)
    labels: list[str] = []
    seen: set[str] = set()
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            label = raw.strip()
            if not label:
                raise ValueError(f"{path}:{lineno}: empty label line")
            if label in seen:
                raise ValueError(f"{path}:{lineno}: duplicate label {label!r}")
            seen.add(label)
            labels.append(label)
    if len(labels) != COCO_CLASS_COUNT:
        raise ValueError(
            f"{path}: expected {COCO_CLASS_COUNT} labels, found {len(labels)}"
        )
    return labels


def validate_frame(frame: Frame, vocabulary: Sequence[str]) -> None:
    """Check frame labels against the loaded vocabulary."""
    allowed = set(vocabulary)
    for label, _ in frame.truth_objects:
        if label not in allowed:
            raise ValueError(
                f"frame {frame.frame_id!r}: label {label!r} not in vocabulary"
            )


def build_detector(backend_id: str, miss_prob: float = 0.0, seed: int = 0) -> DetectorBackend:
    if backend_id == "mock":
        return MockDetector(backend_id="mock", miss_prob=miss_prob, seed=seed)
    raise ValueError(f"unknown detector backend {backend_id!r}")


def build_ocr(backend_id: str, seed: int = 0) -> OcrBackend:
    if backend_id == "mock":
        return MockOcr(backend_id="mock", seed=seed)
    if backend_id == "mock-tesseract":
        return MockOcr(
            backend_id="mock-tesseract",
            confusion_rules=TESSERACT_CONFUSIONS,
            substitution_rate=TESSERACT_SUB_RATE,
            seed=seed,
        )
    if backend_id == "mock-easyocr":
        return MockOcr(
            backend_id="mock-easyocr",
            confusion_rules=EASYOCR_CONFUSIONS,
            substitution_rate=EASYOCR_SUB_RATE,
            seed=seed,
        )
    raise ValueError(f"unknown ocr backend {backend_id!r}")
