"""Detection-quality metrics and accuracy-versus-compute model selection.

Metrics side: IoU, per-class average precision with greedy confidence-order
matching and all-point interpolation, mAP at one threshold and averaged over
the 0.50-0.95 threshold ladder. Precision/recall accumulation uses exact
rational arithmetic internally so results are independent of summation order
and reproducible to the last bit; floats appear only at the API boundary.

Selection side: model tables (compute cost vs accuracy), weak Pareto
dominance on (minimize gflops, maximize mAP), and budgeted recommendation.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .perception import BoundingBox
from .resources import resolve_table

MAP_RANGE_THRESHOLDS = tuple(i / 100 for i in range(50, 100, 5))

TRUTH_FIELDS = ("image_id", "label", "x_min", "y_min", "x_max", "y_max")
PRED_FIELDS = ("image_id", "label", "confidence", "x_min", "y_min", "x_max", "y_max")


def iou(a: BoundingBox, b: BoundingBox) -> float:
    """Intersection over union of two boxes; 0 when the union has no area."""
    ix = min(a.x_max, b.x_max) - max(a.x_min, b.x_min)
    iy = min(a.y_max, b.y_max) - max(a.y_min, b.y_min)
    if ix <= 0 or iy <= 0:
        inter = 0.0
    else:
        inter = ix * iy
    union = a.area() + b.area() - inter
    if union <= 0:
        return 0.0
    return inter / union


@dataclass(frozen=True)
class TruthBox:
    image_id: str
    label: str
    box: BoundingBox


@dataclass(frozen=True)
class PredictionBox:
    image_id: str
    label: str
    confidence: float
    box: BoundingBox

    def __post_init__(self) -> None:
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence out of [0,1]: {self.confidence}")


def _greedy_match(
    preds: Sequence[PredictionBox],
    truths: Sequence[TruthBox],
    label: str,
    iou_threshold: float,
) -> tuple[list[bool], int]:
    """Match predictions of one label to truths, greedily by confidence.

    Returns (tp_flags in match order, truth count). Ordering is canonical:
    descending confidence, then image id, then input position, so equal
    inputs give equal outputs regardless of how the caller assembled them.
    Each prediction takes the highest-IoU unmatched truth of its image at or
    above the threshold (lowest truth input position on IoU ties); further
    hits on a matched truth are false positives.
    """
    truth_by_image: dict[str, list[tuple[int, BoundingBox]]] = {}
    n_truth = 0
    for t in truths:
        if t.label == label:
            truth_by_image.setdefault(t.image_id, []).append((n_truth, t.box))
            n_truth += 1

    order = sorted(
        ((i, p) for i, p in enumerate(preds) if p.label == label),
        key=lambda ip: (-ip[1].confidence, ip[1].image_id, ip[0]),
    )
    matched: set[int] = set()
    tp_flags: list[bool] = []
    for _, p in order:
        best_idx = -1
        best_iou = 0.0
        for t_idx, t_box in truth_by_image.get(p.image_id, ()):
            if t_idx in matched:
                continue
            v = iou(p.box, t_box)
            if v >= iou_threshold and v > best_iou:
                best_idx, best_iou = t_idx, v
        if best_idx >= 0:
            matched.add(best_idx)
            tp_flags.append(True)
        else:
            tp_flags.append(False)
    return tp_flags, n_truth


def _ap_fraction(
    preds: Sequence[PredictionBox],
    truths: Sequence[TruthBox],
    label: str,
    iou_threshold: float,
) -> Fraction:
    """Exact AP under all-point interpolation."""
    if not 0.0 < iou_threshold < 1.0:
        raise ValueError("iou_threshold must be in (0,1)")
    tp_flags, n_truth = _greedy_match(preds, truths, label, iou_threshold)
    if n_truth == 0:
        raise ValueError(f"no ground-truth instances of label {label!r}; AP undefined")
    # precision at each rank
    precisions: list[Fraction] = []
    tp = 0
    for k, flag in enumerate(tp_flags, start=1):
        if flag:
            tp += 1
        precisions.append(Fraction(tp, k))
    # all-point interpolation: at each recall step, the best precision at
    # that rank or later
    ap = Fraction(0)
    running_max = Fraction(0)
    for flag, prec in zip(reversed(tp_flags), reversed(precisions)):
        if prec > running_max:
            running_max = prec
        if flag:
            ap += running_max
    return ap / n_truth


def average_precision(
    preds: Sequence[PredictionBox],
    truths: Sequence[TruthBox],
    label: str,
    iou_threshold: float,
) -> float:
    """AP in [0,1] for one label at one IoU threshold."""
    return float(_ap_fraction(preds, truths, label, iou_threshold))


def map_at(
    preds: Sequence[PredictionBox],
    truths: Sequence[TruthBox],
    iou_threshold: float,
) -> float:
    """Mean AP over the labels present in the truth set, as a percentage."""
    labels = sorted({t.label for t in truths})
    if not labels:
        raise ValueError("empty truth set; mAP undefined")
    total = sum(
        (_ap_fraction(preds, truths, label, iou_threshold) for label in labels),
        start=Fraction(0),
    )
    return float(total / len(labels) * 100)


def map_range(preds: Sequence[PredictionBox], truths: Sequence[TruthBox]) -> float:
    """Mean of map_at over the ten thresholds 0.50, 0.55, ..., 0.95."""
    values = [map_at(preds, truths, t) for t in MAP_RANGE_THRESHOLDS]
    return sum(values) / len(values)


def load_truths(path: str | Path) -> list[TruthBox]:
    """Read line-delimited truth records (6 comma-separated fields)."""
    out: list[TruthBox] = []
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row:
                continue
            if lineno == 1 and row[0] == "image_id":
                continue
            if len(row) != len(TRUTH_FIELDS):
                raise ValueError(f"{path}:{lineno}: expected {len(TRUTH_FIELDS)} fields, got {len(row)}")
            x0, y0, x1, y1 = map(float, row[2:])
            out.append(TruthBox(row[0], row[1], BoundingBox(x0, y0, x1, y1)))
    return out


def load_predictions(path: str | Path) -> list[PredictionBox]:
    """Read line-delimited prediction records (7 fields, confidence third)."""
    out: list[PredictionBox] = []
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row:
                continue
            if lineno == 1 and row[0] == "image_id":
                continue
            if len(row) != len(PRED_FIELDS):
                raise ValueError(f"{path}:{lineno}: expected {len(PRED_FIELDS)} fields, got {len(row)}")
            x0, y0, x1, y1 = map(float, row[3:])
            out.append(PredictionBox(row[0], row[1], float(row[2]), BoundingBox(x0, y0, x1, y1)))
    return out


@dataclass(frozen=True)
class ModelSpec:
    """One row of a model comparison table."""

    name: str
    framework: str
    gflops: float
    mparams: float
    map_50: float | None = None
    map_50_95: float | None = None
    input_size: int | None = None
    size_mb: float | None = None

    def __post_init__(self) -> None:
        if self.gflops <= 0:
            raise ValueError(f"{self.name}: gflops must be positive")
        if self.mparams <= 0:
            raise ValueError(f"{self.name}: mparams must be positive")
        for value in (self.map_50, self.map_50_95):
            if value is not None and not 0.0 <= value <= 100.0:
                raise ValueError(f"{self.name}: mAP out of [0,100]: {value}")

    @property
    def display_name(self) -> str:
        """Name qualified by input size when the table carries one."""
        if self.input_size is None:
            return self.name
        return f"{self.name}@{self.input_size}"

    def map_value(self, map_field: str) -> float | None:
        if map_field == "map_50":
            return self.map_50
        if map_field == "map_50_95":
            return self.map_50_95
        raise ValueError(f"unknown mAP field {map_field!r}")


@dataclass(frozen=True)
class PlatformLatency:
    """Measured per-model inference latency on one hardware platform."""

    equipment: str
    computing_backend: str
    system: str
    input_size: int
    framework: str
    latency_ms: dict[str, float]

    def __post_init__(self) -> None:
        for model, ms in self.latency_ms.items():
            if ms <= 0:
                raise ValueError(f"{self.equipment}/{model}: latency must be positive")

    def __hash__(self) -> int:  # dict field blocks the generated hash
        return hash((self.equipment, self.computing_backend, self.system))


def _opt_float(text: str) -> float | None:
    text = text.strip()
    if text in ("", "-"):
        return None
    return float(text)


def load_model_table(path: str | Path) -> list[ModelSpec]:
    """Load a model comparison CSV, dispatching on its header.

    Two layouts are understood: `name,framework,gflops,mparams,map`
    (single-mAP tables; the value lands in map_50) and
    `id,name,input_size,gflops,mparams,size_mb,map50,map5095` with `-` for
    absent values.
    """
    path = resolve_table(path)
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise ValueError(f"{path}: empty table")
        header = [h.strip() for h in header]
        rows = [row for row in reader if row]

    if header == ["name", "framework", "gflops", "mparams", "map"]:
        return [
            ModelSpec(
                name=r[0],
                framework=r[1],
                gflops=float(r[2]),
                mparams=float(r[3]),
                map_50=float(r[4]),
            )
            for r in rows
        ]
    if header == ["id", "name", "input_size", "gflops", "mparams", "size_mb", "map50", "map5095"]:
        return [
            ModelSpec(
                name=r[1],
                framework="",
                gflops=float(r[3]),
                mparams=float(r[4]),
                map_50=_opt_float(r[6]),
                map_50_95=_opt_float(r[7]),
                input_size=int(r[2]),
                size_mb=float(r[5]),
            )
            for r in rows
        ]
    raise ValueError(f"{path}: unrecognized model table header {header}")


def load_platform_latency(path: str | Path) -> list[PlatformLatency]:
    path = resolve_table(path)
    out: list[PlatformLatency] = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            latencies = {
                key.removeprefix("latency_").removesuffix("_ms").replace("_", "-"): float(value)
                for key, value in row.items()
                if key.startswith("latency_")
            }
            out.append(
                PlatformLatency(
                    equipment=row["equipment"],
                    computing_backend=row["computing_backend"],
                    system=row["system"],
                    input_size=int(row["input_size"]),
                    framework=row["framework"],
                    latency_ms=latencies,
                )
            )
    if not out:
        raise ValueError(f"{path}: no data rows")
    return out


def split_by_map_field(
    models: Iterable[ModelSpec], map_field: str = "map_50"
) -> tuple[list[ModelSpec], list[ModelSpec]]:
    """Partition models into (eligible, excluded) on presence of the field."""
    eligible: list[ModelSpec] = []
    excluded: list[ModelSpec] = []
    for m in models:
        (eligible if m.map_value(map_field) is not None else excluded).append(m)
    return eligible, excluded


def _dominates(a: ModelSpec, b: ModelSpec, map_field: str) -> bool:
    """Weak dominance: a is no worse on both axes and better on one."""
    a_map = a.map_value(map_field)
    b_map = b.map_value(map_field)
    assert a_map is not None and b_map is not None
    return (
        a.gflops <= b.gflops
        and a_map >= b_map
        and (a.gflops < b.gflops or a_map > b_map)
    )


def pareto_frontier(
    models: Sequence[ModelSpec], map_field: str = "map_50"
) -> list[ModelSpec]:
    """Models not weakly dominated under (min gflops, max mAP).

    Rows missing the selected mAP field are excluded (use
    :func:`split_by_map_field` to report them). Result is sorted by
    ascending gflops, then name.
    """
    eligible, _ = split_by_map_field(models, map_field)
    if not eligible:
        raise ValueError(f"no models carry {map_field}; frontier undefined")
    front = [
        m
        for m in eligible
        if not any(_dominates(other, m, map_field) for other in eligible if other is not m)
    ]
    front.sort(key=lambda m: (m.gflops, m.name, m.input_size or 0))
    return front


def recommend(
    models: Sequence[ModelSpec], gflops_budget: float, map_field: str = "map_50"
) -> ModelSpec:
    """Highest-mAP model within the compute budget.

    Ties break toward lower gflops, then lexicographic name. When nothing
    fits, the error names the cheapest eligible model so the caller can see
    how far off the budget is.
    """
    eligible, _ = split_by_map_field(models, map_field)
    if not eligible:
        raise ValueError(f"no models carry {map_field}")
    in_budget = [m for m in eligible if m.gflops <= gflops_budget]
    if not in_budget:
        cheapest = min(eligible, key=lambda m: (m.gflops, m.name))
        raise ValueError(
            f"no model fits {gflops_budget} gflops; cheapest is "
            f"{cheapest.display_name} at {cheapest.gflops} gflops"
        )
    return min(in_budget, key=lambda m: (-(m.map_value(map_field) or 0.0), m.gflops, m.name))
