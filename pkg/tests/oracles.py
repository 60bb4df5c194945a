"""Independent reference implementations used to pin the library's results.

Everything here recomputes a library answer by a different method: grid
counting instead of closed-form geometry, assignment enumeration instead of
incremental greedy bookkeeping, a literal O(n^2) interpolation formula
instead of a running maximum, pairwise dominance scans instead of whatever
the frontier code does. Slow is fine; different is the point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np

from percept_cane.detector_lab import ModelSpec, PredictionBox, TruthBox, iou
from percept_cane.perception import BoundingBox


def grid_iou(a: BoundingBox, b: BoundingBox, n: int = 512) -> float:
    """IoU by counting n-by-n cell centers inside each region.

    Boxes and their intersection are axis-aligned, so the 2-D counts
    factor into products of 1-D center counts.
    """
    centers = (np.arange(n) + 0.5) / n

    def count_1d(lo: float, hi: float) -> int:
        if hi <= lo:
            return 0
        return int(np.count_nonzero((centers >= lo) & (centers <= hi)))

    area_a = count_1d(a.x_min, a.x_max) * count_1d(a.y_min, a.y_max)
    area_b = count_1d(b.x_min, b.x_max) * count_1d(b.y_min, b.y_max)
    inter = count_1d(max(a.x_min, b.x_min), min(a.x_max, b.x_max)) * count_1d(
        max(a.y_min, b.y_min), min(a.y_max, b.y_max)
    )
    union = area_a + area_b - inter
    if union == 0:
        return 0.0
    return inter / union


def _sorted_preds(preds: list[PredictionBox], label: str) -> list[PredictionBox]:
    indexed = [(i, p) for i, p in enumerate(preds) if p.label == label]
    indexed.sort(key=lambda ip: (-ip[1].confidence, ip[1].image_id, ip[0]))
    return [p for _, p in indexed]


def brute_force_ap(
    preds: list[PredictionBox],
    truths: list[TruthBox],
    label: str,
    iou_threshold: float,
) -> Fraction:
    """AP by enumerating injective assignments and filtering.

    Enumerates every way of assigning each prediction (in confidence order)
    to a distinct truth or to nothing, keeps the assignments consistent
    with take-the-best-available-candidate processing, checks exactly one
    survives, and evaluates the interpolated AP formula literally on its
    true-positive flags.
    """
    label_truths = [t for t in truths if t.label == label]
    if not label_truths:
        raise ValueError(f"no truths of label {label!r}")
    order = _sorted_preds(preds, label)
    n_truth = len(label_truths)

    # geometry is assignment-independent, so compute it once up front
    overlap = [
        [
            iou(pred.box, t.box) if t.image_id == pred.image_id else None
            for t in label_truths
        ]
        for pred in order
    ]

    choices = [range(-1, n_truth) for _ in order]  # -1 = unmatched
    consistent: list[tuple[int, ...]] = []
    for assignment in product(*choices):
        used = [a for a in assignment if a >= 0]
        if len(used) != len(set(used)):
            continue
        available = set(range(n_truth))
        ok = True
        for p_idx, choice in enumerate(assignment):
            candidates = []
            for t_idx in sorted(available):
                v = overlap[p_idx][t_idx]
                if v is None:
                    continue
                if v >= iou_threshold:
                    candidates.append((v, t_idx))
            if not candidates:
                if choice != -1:
                    ok = False
                    break
            else:
                best = max(candidates, key=lambda c: (c[0], -c[1]))[1]
                if choice != best:
                    ok = False
                    break
                available.discard(best)
        if ok:
            consistent.append(assignment)
    assert len(consistent) == 1, f"expected a unique consistent assignment, got {len(consistent)}"
    tp_flags = [a >= 0 for a in consistent[0]]

    def precision_at(j: int) -> Fraction:
        return Fraction(sum(tp_flags[:j]), j)

    total = Fraction(0)
    for k, flag in enumerate(tp_flags, start=1):
        if flag:
            total += max(precision_at(j) for j in range(k, len(tp_flags) + 1))
    return total / n_truth


def brute_force_frontier(models: list[ModelSpec], map_field: str) -> set[str]:
    """Frontier membership by literal pairwise dominance checks."""
    eligible = [m for m in models if m.map_value(map_field) is not None]
    front = set()
    for m in eligible:
        dominated = False
        for other in eligible:
            if other is m:
                continue
            om, mm = other.map_value(map_field), m.map_value(map_field)
            if other.gflops <= m.gflops and om >= mm and (other.gflops < m.gflops or om > mm):
                dominated = True
                break
        if not dominated:
            front.add(m.display_name)
    return front
