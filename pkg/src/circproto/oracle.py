"""
Brute-force 1-NN checks of a prototype configuration.

Every query point is compared against every prototype of every circle. Ties
go to the lower circle index (prototypes are stacked innermost first and the
first minimum wins).

A sample only counts as correctly classified when its own class is nearer
than any other class by more than the rounding tolerance; an exact tie is a
failure of strict separation even if the tie-break happens to favour it.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from circproto.errors import ContractViolation
from circproto.findpugs import PrototypeSolution
from circproto.geometry import RingLayout, midpoint_array, prototype_array
from circproto.separation import TOL

_CHUNK = 4096


@dataclass(frozen=True)
class ClassificationReport:
    per_circle_samples: int
    misclassified: list[tuple[int, int]]
    worst_margin: float
    total_samples: int
    margin_tol: float = 0.0

    @property
    def perfect(self) -> bool:
        return all(k == 0 for _, k in self.misclassified) and self.worst_margin > self.margin_tol

    def to_dict(self) -> dict:
        return {
            "per_circle_samples": self.per_circle_samples,
            "misclassified": [[t, k] for t, k in self.misclassified],
            "worst_margin": self.worst_margin,
            "total_samples": self.total_samples,
            "perfect": self.perfect,
        }


@dataclass(frozen=True, eq=False)
class RasterGrid:
    """Per-pixel 1-NN labels; ``labels[row, col]`` with row 0 at the top (+y)."""

    width: int
    height: int
    extent: float
    labels: np.ndarray

    def pixel_centers(self) -> tuple[np.ndarray, np.ndarray]:
        return pixel_centers(self.width, self.height, self.extent)


def stack_prototypes(layouts: list[RingLayout]) -> tuple[np.ndarray, np.ndarray]:
    pts = np.concatenate([prototype_array(lay) for lay in layouts])
    labels = np.concatenate([np.full(lay.count, lay.t) for lay in layouts])
    return pts, labels


def _nearest(points, protos, proto_labels, own=None):
    # returns predicted labels and, if own labels are given, the margins
    d2 = ((points[:, None, :] - protos[None, :, :]) ** 2).sum(axis=-1)
    pred = proto_labels[np.argmin(d2, axis=1)]
    if own is None:
        return pred, None
    same = proto_labels[None, :] == own[:, None]
    own_d = np.sqrt(np.where(same, d2, np.inf).min(axis=1))
    other_d = np.sqrt(np.where(same, np.inf, d2).min(axis=1))
    return pred, other_d - own_d


def _map_chunks(fn, n_items, threads):
    spans = [(lo, min(lo + _CHUNK, n_items)) for lo in range(0, n_items, _CHUNK)]
    if threads <= 1 or len(spans) < 2:
        return [fn(lo, hi) for lo, hi in spans]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda s: fn(*s), spans))


def circle_samples(layout: RingLayout, samples: int, include_midpoints: bool = True) -> np.ndarray:
    angles = 2.0 * np.pi * np.arange(samples) / samples
    pts = np.column_stack((layout.radius * np.cos(angles), layout.radius * np.sin(angles)))
    if include_midpoints:
        pts = np.concatenate([pts, midpoint_array(layout)])
    return pts


def classify_rings(
    layouts: list[RingLayout],
    samples_per_circle: int,
    include_midpoints: bool = True,
    threads: int = 1,
) -> ClassificationReport:
    """Sample each ring and classify every sample against all prototypes.

    Rings need not start at circle 0, which allows checking one adjacent pair
    in isolation.
    """
    if not layouts:
        raise ContractViolation("no rings to verify")
    if samples_per_circle < 8:
        raise ContractViolation(f"samples_per_circle must be >= 8, got {samples_per_circle}")
    protos, proto_labels = stack_prototypes(layouts)
    chunks = [circle_samples(lay, samples_per_circle, include_midpoints) for lay in layouts]
    points = np.concatenate(chunks)
    own = np.concatenate([np.full(len(ch), lay.t) for ch, lay in zip(chunks, layouts)])

    def work(lo, hi):
        return _nearest(points[lo:hi], protos, proto_labels, own[lo:hi])

    parts = _map_chunks(work, len(points), threads)
    pred = np.concatenate([p for p, _ in parts])
    margin = np.concatenate([m for _, m in parts])
    tol = TOL * max(max(lay.radius for lay in layouts), layouts[0].c)
    wrong = (pred != own) | (margin <= tol)
    misclassified = [(lay.t, int(wrong[own == lay.t].sum())) for lay in layouts]
    return ClassificationReport(
        per_circle_samples=samples_per_circle,
        misclassified=misclassified,
        worst_margin=float(margin.min()),
        total_samples=len(points),
        margin_tol=tol,
    )


def verify_separation(
    solution: PrototypeSolution, samples_per_circle: int = 10_000, threads: int = 1
) -> ClassificationReport:
    """Check that every sampled point on every circle is classified into its own circle.

    Samples are uniform in angle, plus the exact arc-midpoints of each
    circle's prototypes.
    """
    return classify_rings(solution.layouts(), samples_per_circle, True, threads)


def default_extent(solution: PrototypeSolution) -> float:
    return (len(solution) - 1) * solution.c + solution.c / 2


def pixel_centers(width: int, height: int, extent: float) -> tuple[np.ndarray, np.ndarray]:
    xs = -extent + (np.arange(width) + 0.5) * (2 * extent / width)
    ys = extent - (np.arange(height) + 0.5) * (2 * extent / height)
    return np.meshgrid(xs, ys)


def rasterize_regions(
    solution: PrototypeSolution,
    width: int,
    height: int,
    extent: float | None = None,
    threads: int = 1,
) -> RasterGrid:
    if width < 1 or height < 1:
        raise ContractViolation(f"raster dimensions must be positive, got {width}x{height}")
    if extent is None:
        extent = default_extent(solution)
    if not (math.isfinite(extent) and extent > 0):
        raise ContractViolation(f"extent must be positive, got {extent!r}")
    protos, proto_labels = stack_prototypes(solution.layouts())
    gx, gy = pixel_centers(width, height, extent)
    points = np.column_stack((gx.ravel(), gy.ravel()))

    def work(lo, hi):
        return _nearest(points[lo:hi], protos, proto_labels)[0]

    labels = np.concatenate(_map_chunks(work, len(points), threads))
    return RasterGrid(width, height, float(extent), labels.reshape(height, width).astype(np.int32))


def containment_violations(grid: RasterGrid, solution: PrototypeSolution) -> int:
    """Pixels lying within half a pixel of circle ``t`` but not labelled ``t``."""
    gx, gy = grid.pixel_centers()
    r = np.hypot(gx, gy)
    half = 0.5 * max(2 * grid.extent / grid.width, 2 * grid.extent / grid.height)
    bad = 0
    for t in range(len(solution)):
        near = np.abs(r - t * solution.c) <= half
        bad += int((grid.labels[near] != t).sum())
    return bad
