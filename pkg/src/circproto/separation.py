"""
Perfect-separation predicates for two adjacent circles.

Two routes decide the same question. :func:`separable_reduced` evaluates the
c-free trigonometric inequality pair, :func:`separable_euclidean` compares
actual distances between placed prototypes and arc-midpoints.

Comparisons carry a small tolerance so that configurations sitting exactly
on the boundary (e.g. three prototypes around the origin, where
``cos(pi/3)`` rounds up) are judged by their exact-arithmetic value instead
of by rounding noise. Strict mode needs ``slack > TOL``; relaxed mode
accepts ``slack >= -TOL``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from circproto.errors import ContractViolation
from circproto.geometry import RingLayout, intra_ring_gap, min_cross_distance

TOL = 1e-12


@dataclass(frozen=True)
class SeparationVerdict:
    separable: bool
    slack1: float
    slack2: float
    strict: bool


def passes(slack, strict: bool, scale: float = 1.0):
    """Tolerance-aware ``slack > 0`` (strict) or ``slack >= 0`` (relaxed).

    Works on scalars and arrays. ``scale`` sets the units of the tolerance.
    """
    tol = TOL * scale
    if strict:
        return slack > tol
    return slack >= -tol


def _max_cos(m: int, n: int, thetas: np.ndarray, phase_m: float, phase_n: float) -> np.ndarray:
    # cos(2*pi*i/m + phase_m - 2*pi*j/n - phase_n - theta) maximized over all (i, j)
    i = np.arange(1, m + 1)[:, None, None]
    j = np.arange(1, n + 1)[None, :, None]
    ang = 2.0 * np.pi * i / m + phase_m - 2.0 * np.pi * j / n - phase_n - thetas[None, None, :]
    return np.cos(ang).max(axis=(0, 1))


def reduced_slacks(t: int, m: int, n: int, thetas) -> tuple[np.ndarray, np.ndarray]:
    """Margins of both reduced inequalities for every rotation in ``thetas``.

    ``t`` is the index of the inner circle (``m`` prototypes); the outer
    circle ``t + 1`` carries ``n`` prototypes rotated by ``theta``. For
    ``t == 0`` the second inequality is vacuous and its slack is ``inf``.
    """
    if t < 0:
        raise ContractViolation(f"circle index must be >= 0, got {t}")
    if m < 1 or n < 1:
        raise ContractViolation(f"prototype counts must be >= 1, got m={m}, n={n}")
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    cos1 = _max_cos(m, n, thetas, 0.0, math.pi / n)
    slack1 = -(2 * t + 1) / (2 * (t + 1)) - (t * cos1 - (t + 1) * math.cos(math.pi / n))
    if t == 0:
        slack2 = np.full_like(slack1, math.inf)
    else:
        cos2 = _max_cos(m, n, thetas, math.pi / m, 0.0)
        slack2 = (2 * t + 1) / (2 * t) - ((t + 1) * cos2 - t * math.cos(math.pi / m))
    return slack1, slack2


def separable_reduced(t: int, m: int, n: int, theta: float, strict: bool = True) -> SeparationVerdict:
    s1, s2 = reduced_slacks(t, m, n, [theta])
    s1, s2 = float(s1[0]), float(s2[0])
    ok = bool(passes(s1, strict) and passes(s2, strict))
    return SeparationVerdict(ok, s1, s2, strict)


def separable_euclidean(inner: RingLayout, outer: RingLayout, strict: bool = True) -> SeparationVerdict:
    """Compare cross-ring distances against same-ring prototype spacing.

    The slacks are ``d1* - d_b`` and ``d2* - d_a`` in length units.
    """
    d1 = min_cross_distance(inner, outer, "proto-to-midpoint")
    d2 = min_cross_distance(inner, outer, "midpoint-to-proto")
    s1 = d1 - intra_ring_gap(outer)
    s2 = d2 - intra_ring_gap(inner)
    scale = outer.radius
    ok = bool(passes(s1, strict, scale) and passes(s2, strict, scale))
    return SeparationVerdict(ok, s1, s2, strict)


def rotation_grid(m: int, n: int, grid_steps: int | None = None) -> np.ndarray:
    """Candidate rotations.

    Without ``grid_steps`` this is the greedy search grid
    ``i*pi/(16*m*n)`` for ``i = 0..4*m*n``. Otherwise ``grid_steps`` uniform
    points over ``[0, 2*pi/n)``.
    """
    if grid_steps is None:
        return np.arange(4 * m * n + 1) * np.pi / (16 * m * n)
    if grid_steps < 1:
        raise ContractViolation(f"grid_steps must be >= 1, got {grid_steps}")
    return np.arange(grid_steps) * (2.0 * np.pi / n) / grid_steps


def find_feasible_rotation(
    t: int, m: int, n: int, grid_steps: int | None = None, strict: bool = True
) -> float | None:
    """Smallest grid rotation satisfying both reduced inequalities, or None."""
    thetas = rotation_grid(m, n, grid_steps)
    s1, s2 = reduced_slacks(t, m, n, thetas)
    ok = passes(s1, strict) & passes(s2, strict)
    if not ok.any():
        return None
    return float(thetas[int(np.argmax(ok))])
