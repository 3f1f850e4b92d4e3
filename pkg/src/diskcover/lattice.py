"""Periodic center sets: lattice bases, reduction, enumeration.

A configuration is a lattice spanned by two basis vectors plus a set of
translate offsets and a common disk radius.  Offsets are stored wrapped
into the half-open fundamental parallelogram {s*u + t*v : s, t in [0,1)},
so equality of configurations modulo the lattice is equality of fields.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .geometry import Point

DET_TOL = 1e-12
SEPARATION_TOL = 1e-9


class ConfigFormatError(ValueError):
    """Raised when a serialized configuration cannot be parsed."""


@dataclass(frozen=True)
class Basis:
    u: tuple[float, float]
    v: tuple[float, float]

    def __post_init__(self) -> None:
        u = (float(self.u[0]), float(self.u[1]))
        v = (float(self.v[0]), float(self.v[1]))
        if not all(math.isfinite(t) for t in (*u, *v)):
            raise ValueError("basis vectors must be finite")
        det = u[0] * v[1] - u[1] * v[0]
        if det < 0.0:
            # -v spans the same lattice; keep orientation positive
            v = (-v[0], -v[1])
            det = -det
        if det <= DET_TOL:
            raise ValueError("degenerate lattice")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def det(self) -> float:
        return self.u[0] * self.v[1] - self.u[1] * self.v[0]

    def lengths(self) -> tuple[float, float]:
        return (math.hypot(*self.u), math.hypot(*self.v))


def reduce_basis(basis: Basis) -> Basis:
    """Lagrange-Gauss reduction of a planar basis.

    The reduced basis spans the same lattice and the same determinant,
    with |u| <= |v| and |dot(u, v)| <= |u|^2 / 2.
    """
    u = np.array(basis.u, dtype=float)
    v = np.array(basis.v, dtype=float)
    for _ in range(256):
        if v @ v < u @ u:
            u, v = v, u
        mu = round((u @ v) / (u @ u))
        if mu == 0:
            break
        v = v - mu * u
    if u @ u > v @ v:
        u, v = v, u
    return Basis((u[0], u[1]), (v[0], v[1]))


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle; degenerate (point or segment) allowed."""

    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self) -> None:
        if not all(
            math.isfinite(t) for t in (self.xmin, self.ymin, self.xmax, self.ymax)
        ):
            raise ValueError("rect bounds must be finite")
        if self.xmin > self.xmax or self.ymin > self.ymax:
            raise ValueError("rect has negative extent")

    def distance_to(self, x: float, y: float) -> float:
        dx = max(self.xmin - x, 0.0, x - self.xmax)
        dy = max(self.ymin - y, 0.0, y - self.ymax)
        return math.hypot(dx, dy)


@dataclass(frozen=True)
class PeriodicConfig:
    basis: Basis
    offsets: tuple[Point, ...]
    radius: float

    def __post_init__(self) -> None:
        if not isinstance(self.basis, Basis):
            u, v = self.basis
            object.__setattr__(self, "basis", Basis(tuple(u), tuple(v)))
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"radius must be positive, got {self.radius}")
        offs = tuple(
            p if isinstance(p, Point) else Point(p[0], p[1]) for p in self.offsets
        )
        if not offs:
            raise ValueError("at least one offset required")
        offs = tuple(self._wrap(p) for p in offs)
        object.__setattr__(self, "offsets", offs)
        reduced = reduce_basis(self.basis)
        for i in range(len(offs)):
            for j in range(i + 1, len(offs)):
                if _periodic_distance(offs[i], offs[j], reduced) <= SEPARATION_TOL:
                    raise ValueError("offsets coincide modulo the lattice")

    def _wrap(self, p: Point) -> Point:
        ux, uy = self.basis.u
        vx, vy = self.basis.v
        det = self.basis.det
        s = (p.x * vy - p.y * vx) / det
        t = (p.y * ux - p.x * uy) / det
        s -= math.floor(s)
        t -= math.floor(t)
        if s >= 1.0:
            s = 0.0
        if t >= 1.0:
            t = 0.0
        return Point(s * ux + t * vx, s * uy + t * vy)

    @property
    def det(self) -> float:
        return self.basis.det

    def scaled(self, factor: float) -> "PeriodicConfig":
        if not (math.isfinite(factor) and factor > 0.0):
            raise ValueError(f"scale factor must be positive, got {factor}")
        ux, uy = self.basis.u
        vx, vy = self.basis.v
        return PeriodicConfig(
            Basis((factor * ux, factor * uy), (factor * vx, factor * vy)),
            tuple(Point(factor * p.x, factor * p.y) for p in self.offsets),
            factor * self.radius,
        )

    def to_dict(self) -> dict:
        return {
            "u": [self.basis.u[0], self.basis.u[1]],
            "v": [self.basis.v[0], self.basis.v[1]],
            "offsets": [[p.x, p.y] for p in self.offsets],
            "radius": self.radius,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "PeriodicConfig":
        if not isinstance(data, dict):
            raise ConfigFormatError("config must be a JSON object")
        missing = {"u", "v", "offsets", "radius"} - set(data)
        if missing:
            raise ConfigFormatError(f"config missing fields: {sorted(missing)}")

        def pair(name: str) -> tuple[float, float]:
            val = data[name]
            if not (isinstance(val, (list, tuple)) and len(val) == 2):
                raise ConfigFormatError(f"field {name!r} must be a pair of numbers")
            try:
                return (float(val[0]), float(val[1]))
            except (TypeError, ValueError) as exc:
                raise ConfigFormatError(f"field {name!r} must be numeric") from exc

        offsets = data["offsets"]
        if not isinstance(offsets, (list, tuple)) or not offsets:
            raise ConfigFormatError("field 'offsets' must be a non-empty list of pairs")
        pts = []
        for entry in offsets:
            if not (isinstance(entry, (list, tuple)) and len(entry) == 2):
                raise ConfigFormatError("each offset must be a pair of numbers")
            try:
                pts.append(Point(float(entry[0]), float(entry[1])))
            except (TypeError, ValueError) as exc:
                raise ConfigFormatError("each offset must be numeric") from exc
        try:
            radius = float(data["radius"])
        except (TypeError, ValueError) as exc:
            raise ConfigFormatError("field 'radius' must be numeric") from exc
        try:
            return cls(Basis(pair("u"), pair("v")), tuple(pts), radius)
        except ConfigFormatError:
            raise
        except ValueError as exc:
            raise ConfigFormatError(str(exc)) from exc

    @classmethod
    def from_json(cls, text: str) -> "PeriodicConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigFormatError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)


def _periodic_distance(p: Point, q: Point, reduced: Basis) -> float:
    ux, uy = reduced.u
    vx, vy = reduced.v
    dx, dy = p.x - q.x, p.y - q.y
    best = math.inf
    for i in range(-2, 3):
        for j in range(-2, 3):
            best = min(best, math.hypot(dx + i * ux + j * vx, dy + i * uy + j * vy))
    return best


def _translates_array(
    config: PeriodicConfig, rect: Rect, margin: float
) -> np.ndarray:
    """All centers within `margin` of `rect`, as an (N, 2) array.

    Integer ranges follow from mapping the expanded rect's corners through
    the inverse of the reduced basis; padding by one absorbs rounding.
    """
    reduced = reduce_basis(config.basis)
    u = np.array(reduced.u)
    v = np.array(reduced.v)
    minv = np.linalg.inv(np.column_stack([u, v]))
    corners = np.array(
        [
            [rect.xmin - margin, rect.ymin - margin],
            [rect.xmax + margin, rect.ymin - margin],
            [rect.xmax + margin, rect.ymax + margin],
            [rect.xmin - margin, rect.ymax + margin],
        ]
    )
    offsets = np.array([[p.x, p.y] for p in config.offsets])
    shifted = corners[None, :, :] - offsets[:, None, :]
    coords = shifted.reshape(-1, 2) @ minv.T
    lo = np.floor(coords.min(axis=0)).astype(int) - 1
    hi = np.ceil(coords.max(axis=0)).astype(int) + 1
    ii, jj = np.meshgrid(
        np.arange(lo[0], hi[0] + 1), np.arange(lo[1], hi[1] + 1), indexing="ij"
    )
    lattice_pts = ii.reshape(-1, 1) * u + jj.reshape(-1, 1) * v
    pts = (lattice_pts[None, :, :] + offsets[:, None, :]).reshape(-1, 2)
    dx = np.maximum(np.maximum(rect.xmin - pts[:, 0], 0.0), pts[:, 0] - rect.xmax)
    dy = np.maximum(np.maximum(rect.ymin - pts[:, 1], 0.0), pts[:, 1] - rect.ymax)
    scale = max(1.0, margin, *reduced.lengths())
    keep = dx * dx + dy * dy <= (margin + 1e-12 * scale) ** 2
    return pts[keep]


def enumerate_centers(
    config: PeriodicConfig, rect: Rect, margin: float
) -> list[Point]:
    """Centers within `margin` of `rect`, sorted by x then y."""
    if not (math.isfinite(margin) and margin >= 0.0):
        raise ValueError(f"margin must be non-negative, got {margin}")
    pts = _translates_array(config, rect, margin)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    return [Point(float(x), float(y)) for x, y in pts[order]]
