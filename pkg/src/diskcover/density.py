"""Covering densities and the classical reference values.

Density of a periodic configuration is total disk area per unit of
fundamental-domain area: n * pi * r^2 / det.  The classical constants
are computed from their defining expressions, never hard-coded: the
one-cover optimum is pi over the area of the regular hexagon inscribed
in the unit circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lattice import PeriodicConfig
from .voronoi import VoronoiCell

HEXAGON_AREA = 3.0 * math.sqrt(3.0) / 2.0


def kershner_theta() -> float:
    """Minimum density of a one-fold covering by congruent disks."""
    return math.pi / HEXAGON_AREA


def config_density(config: PeriodicConfig) -> float:
    n = len(config.offsets)
    return n * math.pi * config.radius**2 / config.basis.det


def cell_density(cell: VoronoiCell, radius: float) -> float:
    """Disk area over cell area, the per-cell share of the density."""
    if not (math.isfinite(radius) and radius > 0.0):
        raise ValueError(f"radius must be positive, got {radius}")
    return math.pi * radius**2 / cell.polygon.area


def toth_lower_bound(k: int) -> float:
    """Lower bound (pi/3) / sin(pi / (3k)) for k-fold covering density."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return (math.pi / 3.0) / math.sin(math.pi / (3.0 * k))


_BLUNDON_MULTIPLIERS = {1: 1.0, 2: 2.0, 3: 2.841, 4: 3.608}
_DANZER_TWOFOLD = (2.094, 2.347)


def known_values() -> dict[str, float]:
    """Reference densities: the one-cover optimum, the exact two-cover
    optimum for congruent-cell configurations, Blundon's lattice optima,
    and Danzer's two-fold enclosure."""
    theta = kershner_theta()
    return {
        "theta": theta,
        "2theta": 2.0 * theta,
        "blundon_2": _BLUNDON_MULTIPLIERS[2] * theta,
        "blundon_3": _BLUNDON_MULTIPLIERS[3] * theta,
        "blundon_4": _BLUNDON_MULTIPLIERS[4] * theta,
        "danzer_low": _DANZER_TWOFOLD[0],
        "danzer_high": _DANZER_TWOFOLD[1],
    }


_ALIASES = {"θ": "theta", "2θ": "2theta"}


def known_value(name: str) -> float:
    """Look up a reference density; Greek-letter spellings accepted."""
    table = known_values()
    key = _ALIASES.get(name, name)
    if key not in table:
        raise ValueError(f"unknown reference value {name!r}")
    return table[key]


@dataclass(frozen=True)
class DensityReport:
    k: int
    density: float
    normalized: float
    toth_bound: float
    meets_toth: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "density": self.density,
            "normalized": self.normalized,
            "toth_bound": self.toth_bound,
            "meets_toth": self.meets_toth,
        }


def density_report(config: PeriodicConfig, k: int) -> DensityReport:
    """Config density alongside the order-k lower bound.

    `normalized` is density in units of the one-cover optimum.  The
    comparison against the bound allows 1e-9 of slack so densities that
    sit exactly on it report as meeting it.
    """
    dens = config_density(config)
    bound = toth_lower_bound(k)
    return DensityReport(
        k=k,
        density=dens,
        normalized=dens / kershner_theta(),
        toth_bound=bound,
        meets_toth=dens >= bound - 1e-9,
    )
