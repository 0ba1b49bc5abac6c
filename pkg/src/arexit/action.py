"""Path-cost functionals and the structural predicates that shrink the
search space for the minimizer.

A path is a finite trajectory y_0 .. y_N that starts inside the interval,
stays strictly inside through step N-1, and lands on or beyond the
boundary at step N. Its quadratic cost is half the summed squared
innovation the noise must supply; the L1 cost is the weighted summed
absolute innovation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, PathError
from .model import MapSpec, eval_map, map_derivative


@dataclass(frozen=True)
class Path:
    """Exit trajectory y_0 .. y_N within half-width h.

    Interior points (n = 1 .. N-1) satisfy |y_n| < h; the final point
    satisfies |y_N| >= h.
    """

    points: tuple[float, ...]
    half_width: float

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(float(p) for p in self.points))
        self.validate()

    def validate(self):
        h = self.half_width
        pts = self.points
        if not h > 0:
            raise PathError(f"half_width must be positive, got {h}")
        if len(pts) < 2:
            raise PathError("a path needs at least one step (N >= 1)")
        if not abs(pts[0]) < h:
            raise PathError(f"start y_0={pts[0]} must lie strictly inside (-{h}, {h})")
        for n, y in enumerate(pts[1:-1], start=1):
            if not abs(y) < h:
                raise PathError(
                    f"interior point y_{n}={y} violates |y| < {h}"
                )
        if not abs(pts[-1]) >= h:
            raise PathError(f"final point y_N={pts[-1]} must satisfy |y_N| >= {h}")

    @property
    def n_steps(self) -> int:
        return len(self.points) - 1

    @property
    def as_array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=np.float64)

    def mirrored(self) -> "Path":
        return Path(tuple(-p for p in self.points), self.half_width)


@dataclass(frozen=True)
class PathCost:
    """Cost value together with the per-step innovations y_n - f(y_{n-1})."""

    value: float
    increments: tuple[float, ...]


def _increments(path: Path, m: MapSpec) -> np.ndarray:
    y = path.as_array
    return y[1:] - eval_map(m, y[:-1])


def quad_cost(path: Path, m: MapSpec) -> PathCost:
    """Half the summed squared innovations along the path."""
    path.validate()
    s = _increments(path, m)
    return PathCost(value=0.5 * float(np.dot(s, s)), increments=tuple(s))


def l1_cost(path: Path, m: MapSpec, lam: float) -> PathCost:
    """lam times the summed absolute innovations along the path."""
    if not lam > 0:
        raise ConfigError(f"l1 weight must be positive, got {lam}")
    path.validate()
    s = _increments(path, m)
    return PathCost(value=lam * float(np.sum(np.abs(s))), increments=tuple(s))


def stationarity_residual(path: Path, m: MapSpec) -> list[float | None]:
    """First-order optimality residuals at the interior points.

    r_n = (y_n - f(y_{n-1})) - f'(y_n) * (y_{n+1} - f(y_n)) for
    n = 1 .. N-1; all vanish at an interior optimum. Points sitting on a
    kink of the map (within 1e-12) yield None, since the one-sided
    derivatives disagree there.
    """
    y = path.points
    out: list[float | None] = []
    for n in range(1, len(y) - 1):
        d = map_derivative(m, y[n])
        if d is None:
            out.append(None)
            continue
        r = (y[n] - eval_map(m, y[n - 1])) - d * (y[n + 1] - eval_map(m, y[n]))
        out.append(float(r))
    return out


@dataclass(frozen=True)
class LemmaFlags:
    """Structural facts about a map on [-1, 1] that license search-space
    reductions: sign-constant argmin paths (increasing + fixed origin),
    exit-side symmetry (odd), and monotone argmin paths (strict
    contraction on top of the first flag)."""

    increasing_fixed0: bool
    odd: bool
    strictly_contractive: bool


_PRED_GRID_POINTS = 2001
_PRED_TOL = 1e-12


def lemma_predicates(m: MapSpec, grid_points: int = _PRED_GRID_POINTS) -> LemmaFlags:
    """Decide the structural flags by dense-grid evaluation on [-1, 1].

    Grid evaluation works uniformly for every family including tabulated
    maps; `analytic_lemma_flags` gives the closed-form answer for the
    parametric families as a cross-check.
    """
    x = np.linspace(-1.0, 1.0, grid_points)
    x = 0.5 * (x - x[::-1])  # exactly antisymmetric grid
    fx = np.asarray(eval_map(m, x))
    f0 = eval_map(m, 0.0)
    increasing = bool(np.all(np.diff(fx) >= -_PRED_TOL)) and abs(f0) <= _PRED_TOL
    odd = bool(np.max(np.abs(fx + fx[::-1])) <= _PRED_TOL)
    off_origin = x != 0.0
    contractive = bool(np.all(np.abs(fx[off_origin]) < np.abs(x[off_origin])))
    return LemmaFlags(increasing, odd, contractive)


def analytic_lemma_flags(m: MapSpec) -> LemmaFlags | None:
    """Closed-form flags for the parametric families; None when the answer
    is not a simple parameter condition (ricker, tabulated)."""
    fam = m.family
    if fam == "linear":
        return LemmaFlags(m.a >= 0, True, abs(m.a) < 1)
    if fam == "dead_zone":
        contractive = abs(m.a) < 1 or (abs(m.a) == 1 and m.b > 0)
        return LemmaFlags(m.a >= 0, True, contractive)
    if fam == "saturated":
        return LemmaFlags(True, False, True)
    if fam == "half_line":
        return LemmaFlags(False, False, True)
    if fam == "two_slope":
        return LemmaFlags(False, m.a == m.b, True)
    if fam == "abs_value":
        return LemmaFlags(m.a == 0, m.a == 0, True)
    if fam == "quadratic":
        return LemmaFlags(m.a == 0, m.a == 0, m.a < 1)
    return None
