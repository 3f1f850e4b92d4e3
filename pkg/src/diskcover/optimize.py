"""Density minimization over covering configurations.

The disk radius never enters the search directly: for fixed centers the
cheapest certified k-cover scales the disks to the certified upper bound
of the order-k covering radius, giving the objective n * pi * R^2 / det.
Both searches are multi-start simplex refinements of a coarse grid, with
a small seeded random polish at the end; with a fixed seed the whole run
is deterministic.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .coverage import CoverageCertificate, covering_radius, verify_k_coverage
from .density import config_density
from .geometry import Point
from .lattice import Basis, PeriodicConfig
from .patterns import pattern_b
from .voronoi import all_cells_congruent

MAX_FOLD = 6
_C_MAX = 3.5


@dataclass
class OptimizationResult:
    best_config: PeriodicConfig
    density: float
    certificate: CoverageCertificate
    evaluations: int
    history: list[tuple[tuple[float, ...], float]]
    converged: bool
    param_names: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "density": self.density,
            "config": self.best_config.to_dict(),
            "certificate": self.certificate.to_dict(),
            "evaluations": self.evaluations,
            "converged": self.converged,
            "param_names": list(self.param_names),
        }

    def history_csv(self) -> str:
        buf = io.StringIO()
        buf.write("eval_index," + ",".join(self.param_names) + ",density\n")
        for i, (params, dens) in enumerate(self.history):
            cols = ",".join(repr(p) for p in params)
            buf.write(f"{i},{cols},{dens!r}\n")
        return buf.getvalue()


def optimal_scaled_density(
    config: PeriodicConfig, k: int, tol: float = 1e-6
) -> float:
    """Density after shrinking the disks to the certified k-cover radius."""
    enclosure = covering_radius(config, k, tol)
    n = len(config.offsets)
    return n * math.pi * enclosure.high**2 / config.basis.det


def golden_section(
    f, a: float, b: float, tol: float = 1e-10, maximize: bool = False
) -> tuple[float, float]:
    """Golden-section search on [a, b] for a unimodal objective."""
    if not b > a:
        raise ValueError("empty interval")
    sign = -1.0 if maximize else 1.0
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = sign * f(c), sign * f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = sign * f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = sign * f(d)
    x = (a + b) / 2.0
    return x, f(x)


class _Search:
    """Shared bookkeeping: evaluation budget, history, memoized best."""

    def __init__(self, objective, budget: int):
        self.objective = objective
        self.budget = budget
        self.history: list[tuple[tuple[float, ...], float]] = []
        self.best_params: tuple[float, ...] | None = None
        self.best_value = math.inf

    @property
    def evaluations(self) -> int:
        return len(self.history)

    @property
    def remaining(self) -> int:
        return self.budget - self.evaluations

    def __call__(self, params) -> float:
        params = tuple(float(p) for p in params)
        value = self.objective(params)
        self.history.append((params, value))
        if value < self.best_value:
            self.best_value = value
            self.best_params = params
        return value

    def refine(self, start, max_evals: int) -> None:
        cap = min(max_evals, self.remaining)
        if cap < 8:
            return
        minimize(
            lambda p: self(p),
            np.asarray(start, dtype=float),
            method="Nelder-Mead",
            options={
                "xatol": 1e-7,
                "fatol": 1e-10,
                "maxfev": cap,
                "maxiter": 10 * cap,
            },
        )

    def polish(self, rng: np.random.Generator, sigma, rounds: int) -> None:
        sigma = np.asarray(sigma, dtype=float)
        for _ in range(rounds):
            if self.remaining < 1 or self.best_params is None:
                return
            cand = np.asarray(self.best_params) + rng.normal(0.0, 1.0, len(sigma)) * sigma
            self(cand)


def _check_fold_and_budget(k: int, budget: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= MAX_FOLD:
        raise ValueError(f"k must be an integer in [1, {MAX_FOLD}], got {k!r}")
    if budget < 1000:
        raise ValueError(f"budget must be at least 1000, got {budget}")


def optimize_single_lattice(
    k: int, budget: int = 20000, tol: float = 1e-4, seed: int = 0
) -> OptimizationResult:
    """Minimize scaled density over single-offset lattices.

    Lattice shapes are parametrized by the reduced basis (1, 0), (b, c)
    with 0 <= b <= 1/2 and c >= sqrt(1 - b^2); every planar lattice is a
    scaled copy of one of these, and the objective is scale-invariant.
    """
    _check_fold_and_budget(k, budget)
    rng = np.random.default_rng(seed)

    def clip(params):
        b = min(max(params[0], 0.0), 0.5)
        c_lo = math.sqrt(max(1.0 - b * b, 0.0))
        c = min(max(params[1], c_lo), _C_MAX)
        return b, c

    def objective(params):
        b, c = clip(params)
        config = PeriodicConfig(
            Basis((1.0, 0.0), (b, c)), (Point(0.0, 0.0),), 1.0
        )
        return optimal_scaled_density(config, k, tol)

    search = _Search(objective, budget)
    for b in np.linspace(0.0, 0.5, 21):
        c_lo = math.sqrt(max(1.0 - b * b, 0.0))
        for c in np.linspace(c_lo, _C_MAX, 24):
            if search.remaining <= 0:
                break
            search((b, c))
    starts = sorted(search.history, key=lambda item: item[1])[:5]
    for params, _ in starts:
        search.refine(params, 700)
    search.polish(rng, sigma=(2e-3, 2e-3), rounds=60)

    b, c = clip(search.best_params)
    return _finish(search, ("b", "c"), k, tol, _lattice_config(b, c, k, tol))


def _lattice_config(b: float, c: float, k: int, tol: float) -> PeriodicConfig:
    bare = PeriodicConfig(Basis((1.0, 0.0), (b, c)), (Point(0.0, 0.0),), 1.0)
    radius = covering_radius(bare, k, tol).high
    return PeriodicConfig(bare.basis, bare.offsets, radius)


def optimize_pattern_b(
    budget: int = 20000, tol: float = 1e-4, seed: int = 0
) -> OptimizationResult:
    """Minimize scaled two-cover density over the pattern_b family.

    Only parameter triples whose Voronoi cells are all congruent compete.
    The objective is invariant under rescaling (x, y, d), so the winning
    ray is reported at its feasibility boundary y = sqrt(1 - x^2) + 1,
    which pins the scale.
    """
    _check_fold_and_budget(2, budget)
    rng = np.random.default_rng(seed)

    def clip(params):
        x = min(max(params[0], 0.1), 1.0)
        y_hi = math.sqrt(max(1.0 - x * x, 0.0)) + 1.0
        y = min(max(params[1], 0.15), y_hi)
        d = min(max(params[2], 0.05 * y), 1.95 * y)
        return x, y, d

    def objective(params):
        x, y, d = clip(params)
        config = pattern_b(x, y, d)
        congruent, _ = all_cells_congruent(config)
        if not congruent:
            return math.inf
        enclosure = covering_radius(config, 2, tol)
        return 2.0 * math.pi * enclosure.high**2 / config.basis.det

    search = _Search(objective, budget)
    for x in np.linspace(0.3, 1.0, 8):
        y_hi = math.sqrt(max(1.0 - x * x, 0.0)) + 1.0
        for yfrac in (0.5, 0.8, 1.0):
            y = y_hi * yfrac
            for dfrac in (0.4, 0.7, 1.0):
                if search.remaining <= 0:
                    break
                search((x, y, y * dfrac))
    starts = sorted(search.history, key=lambda item: item[1])[:4]
    for params, _ in starts:
        search.refine(params, 900)
    search.polish(rng, sigma=(2e-3, 2e-3, 2e-3), rounds=60)

    # pin the scale-degenerate ray at its feasibility boundary
    x, y, d = clip(search.best_params)
    lam = 2.0 * y / (x * x + y * y)
    search((lam * x, lam * y, lam * d))
    x, y, d = clip((lam * x, lam * y, lam * d))
    bare = pattern_b(x, y, d)
    radius = covering_radius(bare, 2, tol).high
    final = PeriodicConfig(bare.basis, bare.offsets, radius)
    return _finish(search, ("x", "y", "d"), 2, tol, final)


def _finish(
    search: _Search,
    param_names: tuple[str, ...],
    k: int,
    tol: float,
    config: PeriodicConfig,
) -> OptimizationResult:
    certificate = verify_k_coverage(config, k, tol)
    return OptimizationResult(
        best_config=config,
        density=config_density(config),
        certificate=certificate,
        evaluations=search.evaluations,
        history=search.history,
        converged=search.evaluations < search.budget,
        param_names=param_names,
    )
