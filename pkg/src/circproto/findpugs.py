"""
Greedy per-circle prototype search (FindPUGS).

Circles are processed from the inside out. Circle ``t`` starts its search at
one more prototype than circle ``t - 1`` and increments the count until some
rotation on a fixed grid separates the pair ``(t - 1, t)``.

The published pseudocode evaluates the pair at radii ``t*c`` and
``(t+1)*c`` while pairing them with the counts of circles ``t - 1`` and
``t``. Taken literally, the first step puts a single prototype on a circle
of positive radius, which no outer count can separate. The search therefore
evaluates the pair at radii ``(t-1)*c`` and ``t*c`` by default; pass
``literal_indexing=True`` to get the printed radii.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from circproto.errors import ContractViolation
from circproto.geometry import RingLayout, chord_to_midpoint
from circproto.separation import passes, rotation_grid

# elements per (i, j, theta) block
_BLOCK = 1 << 21


class SearchExhaustedError(RuntimeError):
    """No feasible rotation was found within the per-circle count cap."""


@dataclass(frozen=True)
class PrototypeSolution:
    """Per-circle prototype counts and rotations, innermost circle first.

    ``rotations[k]`` is the rotation of circle ``k`` relative to circle
    ``k - 1``; ``rotations[0]`` is 0.
    """

    counts: tuple[int, ...]
    rotations: tuple[float, ...]
    c: float = 1.0
    strict: bool = True
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(k) for k in self.counts))
        object.__setattr__(self, "rotations", tuple(float(r) for r in self.rotations))
        if not self.counts:
            raise ContractViolation("solution has no circles")
        if len(self.counts) != len(self.rotations):
            raise ContractViolation(
                f"counts and rotations differ in length ({len(self.counts)} vs {len(self.rotations)})"
            )
        if self.counts[0] != 1:
            raise ContractViolation(f"circle 0 must carry exactly one prototype, got {self.counts[0]}")
        if any(k < 1 for k in self.counts):
            raise ContractViolation(f"prototype counts must be positive: {self.counts}")
        if not (math.isfinite(self.c) and self.c > 0):
            raise ContractViolation(f"radius step must be positive, got {self.c!r}")

    def __len__(self):
        return len(self.counts)

    def absolute_rotations(self) -> list[float]:
        return [float(x) for x in np.cumsum(self.rotations)]

    def layouts(self) -> list[RingLayout]:
        return [
            RingLayout(t, self.c, k, rot)
            for t, (k, rot) in enumerate(zip(self.counts, self.absolute_rotations()))
        ]

    def to_dict(self) -> dict:
        return {
            "counts": list(self.counts),
            "rotations": list(self.rotations),
            "c": self.c,
            "strict": self.strict,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PrototypeSolution":
        try:
            counts = data["counts"]
            rotations = data.get("rotations", [0.0] * len(counts))
            return cls(tuple(counts), tuple(rotations), float(data.get("c", 1.0)), bool(data.get("strict", True)))
        except (KeyError, TypeError) as exc:
            raise ContractViolation(f"malformed solution: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "PrototypeSolution":
        return cls.from_dict(json.loads(text))


def _min_dist(t, c, m, n, thetas, phase):
    # phase selects the pseudocode procedure: d1 uses -pi/n, d2 uses +pi/m
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    i = np.arange(m)[:, None, None]
    j = np.arange(n)[None, :, None]
    base = 2 * i * np.pi / m - 2 * j * np.pi / n + phase
    a = t * t * c * c + (t + 1) ** 2 * c * c
    b = 2 * t * (t + 1) * c * c
    out = np.empty(thetas.shape)
    step = max(1, _BLOCK // (m * n))
    for lo in range(0, thetas.size, step):
        th = thetas[lo : lo + step]
        cos_max = np.cos(base - th[None, None, :]).max(axis=(0, 1))
        # sqrt is monotone, so the minimum distance comes from the largest cosine
        out[lo : lo + step] = np.sqrt(np.maximum(a - b * cos_max, 0.0))
    return out


def d1(t: int, c: float, m: int, n: int, theta):
    """Minimum distance from circle ``t``'s prototypes to circle ``t+1``'s arc-midpoints."""
    res = _min_dist(t, c, m, n, theta, -np.pi / n)
    return float(res[0]) if np.ndim(theta) == 0 else res


def d2(t: int, c: float, m: int, n: int, theta):
    """Minimum distance from circle ``t``'s arc-midpoints to circle ``t+1``'s prototypes."""
    res = _min_dist(t, c, m, n, theta, np.pi / m)
    return float(res[0]) if np.ndim(theta) == 0 else res


def feasible_mask(inner: int, c: float, m: int, n: int, thetas, strict: bool = True, threads: int = 1):
    """Which rotations pass the distance test for circles ``inner`` and ``inner + 1``."""
    thetas = np.asarray(thetas, dtype=float)
    da = chord_to_midpoint(inner, c, m)
    db = chord_to_midpoint(inner + 1, c, n)
    scale = (inner + 1) * c

    def work(chunk):
        ok1 = passes(d1(inner, c, m, n, chunk) - db, strict, scale)
        ok2 = passes(d2(inner, c, m, n, chunk) - da, strict, scale)
        return ok1 & ok2

    if threads <= 1 or thetas.size < 2 * threads:
        return work(thetas)
    chunks = np.array_split(thetas, threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return np.concatenate(list(pool.map(work, chunks)))


def find_pugs(
    T: int,
    c: float = 1.0,
    strict: bool = True,
    *,
    threads: int = 1,
    literal_indexing: bool = False,
    search_cap: int = 64,
) -> PrototypeSolution:
    """Greedy minimal counts for circles ``0..T-1``.

    Raises:
        SearchExhaustedError: if some circle needs more than ``m + search_cap``
            prototypes, ``m`` being the previous circle's count.
    """
    if int(T) != T or T < 1:
        raise ContractViolation(f"number of circles must be >= 1, got {T!r}")
    if not (math.isfinite(c) and c > 0):
        raise ContractViolation(f"radius step must be positive, got {c!r}")
    counts = [1]
    rotations = [0.0]
    for t in range(1, T):
        inner = t if literal_indexing else t - 1
        m = counts[-1]
        n = m + 1
        while True:
            if n > m + search_cap:
                raise SearchExhaustedError(
                    f"circle {t}: no feasible rotation for n in {m + 1}..{m + search_cap} (m={m})"
                )
            thetas = rotation_grid(m, n)
            ok = feasible_mask(inner, c, m, n, thetas, strict, threads)
            if ok.any():
                counts.append(n)
                rotations.append(float(thetas[int(np.argmax(ok))]))
                break
            n += 1
    return PrototypeSolution(tuple(counts), tuple(rotations), float(c), strict)
