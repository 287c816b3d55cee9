"""
Prototype and arc-midpoint placement on concentric circles.

Circle ``t`` has radius ``t * c``. A ring carries ``count`` evenly spaced
prototypes, the first one sitting at angle ``rotation``. Circle 0 is a
degenerate ring whose points all coincide at the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from circproto.errors import ContractViolation

TWO_PI = 2.0 * math.pi

CrossMode = Literal["proto-to-midpoint", "midpoint-to-proto"]


class Point2D(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class RingLayout:
    """Prototype layout of one class circle.

    Attributes:
        t: circle index; the radius is ``t * c``.
        c: radius step between consecutive circles.
        count: number of prototypes on the circle.
        rotation: angle of prototype 0, normalized to [0, 2*pi).
    """

    t: int
    c: float
    count: int
    rotation: float = 0.0

    def __post_init__(self):
        if int(self.t) != self.t or self.t < 0:
            raise ContractViolation(f"circle index must be a non-negative integer, got {self.t!r}")
        if int(self.count) != self.count or self.count < 1:
            raise ContractViolation(f"prototype count must be a positive integer, got {self.count!r}")
        if not (math.isfinite(self.c) and self.c > 0):
            raise ContractViolation(f"radius step must be positive and finite, got {self.c!r}")
        if not math.isfinite(self.rotation):
            raise ContractViolation(f"rotation must be finite, got {self.rotation!r}")
        object.__setattr__(self, "t", int(self.t))
        object.__setattr__(self, "count", int(self.count))
        object.__setattr__(self, "c", float(self.c))
        rot = math.fmod(float(self.rotation), TWO_PI)
        if rot < 0.0:
            rot += TWO_PI
        if rot >= TWO_PI:
            rot = 0.0
        object.__setattr__(self, "rotation", rot)

    @property
    def radius(self) -> float:
        return self.t * self.c

    def prototype_angles(self) -> np.ndarray:
        k = np.arange(self.count)
        return 2.0 * np.pi * k / self.count + self.rotation

    def midpoint_angles(self) -> np.ndarray:
        k = np.arange(self.count)
        return 2.0 * np.pi * k / self.count + np.pi / self.count + self.rotation


def _to_xy(radius: float, angles: np.ndarray) -> np.ndarray:
    return np.column_stack((radius * np.cos(angles), radius * np.sin(angles)))


def prototype_array(layout: RingLayout) -> np.ndarray:
    """Prototype coordinates as a ``(count, 2)`` array."""
    return _to_xy(layout.radius, layout.prototype_angles())


def midpoint_array(layout: RingLayout) -> np.ndarray:
    """Arc-midpoint coordinates as a ``(count, 2)`` array."""
    return _to_xy(layout.radius, layout.midpoint_angles())


def prototype_positions(layout: RingLayout) -> list[Point2D]:
    return [Point2D(float(x), float(y)) for x, y in prototype_array(layout)]


def arc_midpoint_positions(layout: RingLayout) -> list[Point2D]:
    return [Point2D(float(x), float(y)) for x, y in midpoint_array(layout)]


def chord_to_midpoint(t: int, c: float, count: int) -> float:
    """Distance from a prototype to the neighbouring arc-midpoint of its circle."""
    r2 = (t * c) ** 2
    return math.sqrt(max(2.0 * r2 - 2.0 * r2 * math.cos(math.pi / count), 0.0))


def intra_ring_gap(layout: RingLayout) -> float:
    return chord_to_midpoint(layout.t, layout.c, layout.count)


def _check_adjacent(inner: RingLayout, outer: RingLayout) -> None:
    if outer.t != inner.t + 1:
        raise ContractViolation(
            f"rings must be adjacent (outer.t == inner.t + 1), got {inner.t} and {outer.t}"
        )
    if inner.c != outer.c:
        raise ContractViolation(f"rings must share the radius step, got {inner.c} and {outer.c}")


def min_cross_distance(inner: RingLayout, outer: RingLayout, mode: CrossMode) -> float:
    """Smallest distance between one ring's prototypes and the other's arc-midpoints.

    ``"proto-to-midpoint"`` pairs inner prototypes with outer arc-midpoints,
    ``"midpoint-to-proto"`` pairs inner arc-midpoints with outer prototypes.
    All ``inner.count * outer.count`` pairs are compared.
    """
    _check_adjacent(inner, outer)
    if mode == "proto-to-midpoint":
        a, b = prototype_array(inner), midpoint_array(outer)
    elif mode == "midpoint-to-proto":
        a, b = midpoint_array(inner), prototype_array(outer)
    else:
        raise ContractViolation(f"unknown mode {mode!r}")
    diff = a[:, None, :] - b[None, :, :]
    return float(np.sqrt((diff**2).sum(axis=-1)).min())
