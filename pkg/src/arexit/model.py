"""Map families, innovation distributions, and the driven recursion.

The process under study is X_{n+1} = f(X_n) + eps * xi_{n+1} on the
interval (-h, h), where f is one of a small set of contractive (or at
least origin-fixing) map families and xi is an i.i.d. innovation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import FAMILY_CODES, eval_family
from .errors import ConfigError

MAP_FAMILIES = (
    "linear",
    "dead_zone",
    "saturated",
    "half_line",
    "two_slope",
    "abs_value",
    "quadratic",
    "ricker",
    "tabulated",
)

NOISE_FAMILIES = ("gaussian", "laplace", "cauchy", "poisson_diff")

_KINK_TOL = 1e-12


@dataclass(frozen=True)
class MapSpec:
    """One autoregression function, tagged by family.

    Families and their parameters:

    - ``linear``:     f(x) = a*x,                          |a| < 1
    - ``dead_zone``:  f(x) = a*(x -+ b) outside [-b, b], 0 inside;
                      |a| <= 1, 0 <= b < 1, a = 1 only with b > 0
    - ``saturated``:  f(x) = a*clip(x, -c, c),             0 < a < 1, 0 < c <= 1
    - ``half_line``:  f(x) = 0 for x < 0, -a*x for x >= 0, 0 < a < 1
    - ``two_slope``:  f(x) = -b*x for x < 0, -a*x for x >= 0, a, b in (0, 1)
    - ``abs_value``:  f(x) = a*|x|,                        |a| < 1
    - ``quadratic``:  f(x) = a*x^2,                        a >= 0
    - ``ricker``:     f(x) = (x + r)*exp(-x) - r,          r > 0
    - ``tabulated``:  piecewise-linear interpolation of ``knots``,
                      clamped to the end values outside their range
    """

    family: str
    a: float | None = None
    b: float | None = None
    c: float | None = None
    r: float | None = None
    knots: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        fam = self.family
        if fam not in MAP_FAMILIES:
            raise ConfigError(f"unknown map family {fam!r}")
        if fam in ("linear", "abs_value"):
            self._need("a")
            if not abs(self.a) < 1:
                raise ConfigError(f"{fam} requires |a| < 1, got a={self.a}")
        elif fam == "dead_zone":
            self._need("a", "b")
            if not abs(self.a) <= 1:
                raise ConfigError(f"dead_zone requires |a| <= 1, got a={self.a}")
            if not 0 <= self.b < 1:
                raise ConfigError(f"dead_zone requires 0 <= b < 1, got b={self.b}")
            if self.a == 1 and self.b == 0:
                raise ConfigError("dead_zone with a = 1 requires b > 0")
        elif fam == "saturated":
            self._need("a", "c")
            if not 0 < self.a < 1:
                raise ConfigError(f"saturated requires 0 < a < 1, got a={self.a}")
            if not 0 < self.c <= 1:
                raise ConfigError(f"saturated requires 0 < c <= 1, got c={self.c}")
        elif fam == "half_line":
            self._need("a")
            if not 0 < self.a < 1:
                raise ConfigError(f"half_line requires 0 < a < 1, got a={self.a}")
        elif fam == "two_slope":
            self._need("a", "b")
            if not (0 < self.a < 1 and 0 < self.b < 1):
                raise ConfigError(
                    f"two_slope requires a, b in (0, 1), got a={self.a}, b={self.b}"
                )
        elif fam == "quadratic":
            self._need("a")
            if not self.a >= 0:
                raise ConfigError(f"quadratic requires a >= 0, got a={self.a}")
        elif fam == "ricker":
            self._need("r")
            if not self.r > 0:
                raise ConfigError(f"ricker requires r > 0, got r={self.r}")
        elif fam == "tabulated":
            if not self.knots or len(self.knots) < 2:
                raise ConfigError("tabulated requires at least two knots")
            knots = tuple((float(x), float(y)) for x, y in self.knots)
            xs = [x for x, _ in knots]
            if any(x1 <= x0 for x0, x1 in zip(xs, xs[1:])):
                raise ConfigError("tabulated knots must be strictly increasing in x")
            object.__setattr__(self, "knots", knots)

    def _need(self, *names):
        for name in names:
            if getattr(self, name) is None:
                raise ConfigError(f"{self.family} map requires parameter {name!r}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def linear(cls, a: float) -> "MapSpec":
        return cls("linear", a=a)

    @classmethod
    def dead_zone(cls, a: float, b: float) -> "MapSpec":
        return cls("dead_zone", a=a, b=b)

    @classmethod
    def saturated(cls, a: float, c: float) -> "MapSpec":
        return cls("saturated", a=a, c=c)

    @classmethod
    def half_line(cls, a: float) -> "MapSpec":
        return cls("half_line", a=a)

    @classmethod
    def two_slope(cls, a: float, b: float) -> "MapSpec":
        return cls("two_slope", a=a, b=b)

    @classmethod
    def abs_value(cls, a: float) -> "MapSpec":
        return cls("abs_value", a=a)

    @classmethod
    def quadratic(cls, a: float) -> "MapSpec":
        return cls("quadratic", a=a)

    @classmethod
    def ricker(cls, r: float) -> "MapSpec":
        return cls("ricker", r=r)

    @classmethod
    def tabulated(cls, knots) -> "MapSpec":
        return cls("tabulated", knots=tuple(tuple(k) for k in knots))

    # -- declared structure ------------------------------------------------

    @property
    def params(self) -> dict:
        out = {}
        for name in ("a", "b", "c", "r"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        if self.knots is not None:
            out["knots"] = [list(k) for k in self.knots]
        return out

    @property
    def is_contractive(self) -> bool:
        """Declared contraction: |f(x)| < |x| off the origin on [-1, 1]."""
        if self.family in ("saturated", "half_line", "two_slope", "abs_value"):
            return True
        if self.family == "linear":
            return abs(self.a) < 1
        if self.family == "dead_zone":
            return abs(self.a) < 1
        return False

    @property
    def is_odd(self) -> bool:
        if self.family in ("linear", "dead_zone"):
            return True
        if self.family == "two_slope":
            return self.a == self.b
        if self.family == "abs_value":
            return self.a == 0
        return False

    @property
    def is_even(self) -> bool:
        return self.family in ("abs_value", "quadratic")

    @property
    def fixed_point_at_origin(self) -> bool:
        """Computed, not assumed: only tabulated maps can miss the origin."""
        return abs(_eval_scalar(self, 0.0)) <= _KINK_TOL

    def kinks(self) -> tuple[float, ...]:
        """Abscissae where the map is not differentiable."""
        fam = self.family
        if fam == "dead_zone":
            return (-self.b, self.b) if self.b > 0 else ()
        if fam == "saturated":
            return (-self.c, self.c)
        if fam == "half_line":
            return (0.0,)
        if fam == "two_slope":
            return () if self.a == self.b else (0.0,)
        if fam == "abs_value":
            return () if self.a == 0 else (0.0,)
        if fam == "tabulated":
            return tuple(x for x, _ in self.knots)
        return ()


def _eval_scalar(m: MapSpec, x: float) -> float:
    fam = m.family
    if fam == "linear":
        return m.a * x
    if fam == "dead_zone":
        if x <= -m.b:
            return m.a * (x + m.b)
        if x >= m.b:
            return m.a * (x - m.b)
        return 0.0
    if fam == "saturated":
        return m.a * min(max(x, -m.c), m.c)
    if fam == "half_line":
        return 0.0 if x < 0 else -m.a * x
    if fam == "two_slope":
        return -m.b * x if x < 0 else -m.a * x
    if fam == "abs_value":
        return m.a * abs(x)
    if fam == "quadratic":
        return m.a * x * x
    if fam == "ricker":
        return (x + m.r) * math.exp(-x) - m.r
    xs, ys = zip(*m.knots)
    return float(np.interp(x, xs, ys))


def eval_map(m: MapSpec, x):
    """Evaluate the map at a scalar or array argument."""
    if np.ndim(x) == 0 and not isinstance(x, np.ndarray):
        return _eval_scalar(m, float(x))
    if m.family == "tabulated":
        xs, ys = zip(*m.knots)
        return np.interp(x, np.asarray(xs), np.asarray(ys))
    code = FAMILY_CODES[m.family]
    p0, p1 = _kernel_params(m)
    return eval_family(code, p0, p1, x)


def _kernel_params(m: MapSpec) -> tuple[float, float]:
    fam = m.family
    if fam in ("linear", "abs_value", "quadratic", "half_line"):
        return m.a, 0.0
    if fam == "dead_zone":
        return m.a, m.b
    if fam == "saturated":
        return m.a, m.c
    if fam == "two_slope":
        return m.a, m.b
    if fam == "ricker":
        return m.r, 0.0
    raise ConfigError(f"{fam} has no scalar kernel parameters")


def map_derivative(m: MapSpec, x: float) -> float | None:
    """Derivative at x, or None within 1e-12 of a kink."""
    for k in m.kinks():
        if abs(x - k) <= _KINK_TOL:
            return None
    fam = m.family
    if fam == "linear":
        return m.a
    if fam == "dead_zone":
        return 0.0 if abs(x) < m.b else m.a
    if fam == "saturated":
        return m.a if abs(x) < m.c else 0.0
    if fam == "half_line":
        return 0.0 if x < 0 else -m.a
    if fam == "two_slope":
        return -m.b if x < 0 else -m.a
    if fam == "abs_value":
        return -m.a if x < 0 else m.a
    if fam == "quadratic":
        return 2.0 * m.a * x
    if fam == "ricker":
        return (1.0 - x - m.r) * math.exp(-x)
    xs = [k for k, _ in m.knots]
    ys = [v for _, v in m.knots]
    if x < xs[0] or x > xs[-1]:
        return 0.0
    i = int(np.searchsorted(xs, x)) - 1
    i = min(max(i, 0), len(xs) - 2)
    return (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])


def linear_pieces(m: MapSpec) -> list[tuple[float, float, float, float]] | None:
    """(lo, hi, slope, intercept) segments for piecewise-linear families.

    Returns None for families that are not piecewise linear. Ends extend
    to +-inf so the pieces tile the whole line.
    """
    inf = math.inf
    fam = m.family
    if fam == "linear":
        return [(-inf, inf, m.a, 0.0)]
    if fam == "dead_zone":
        if m.b == 0:
            return [(-inf, inf, m.a, 0.0)]
        return [
            (-inf, -m.b, m.a, m.a * m.b),
            (-m.b, m.b, 0.0, 0.0),
            (m.b, inf, m.a, -m.a * m.b),
        ]
    if fam == "saturated":
        return [
            (-inf, -m.c, 0.0, -m.a * m.c),
            (-m.c, m.c, m.a, 0.0),
            (m.c, inf, 0.0, m.a * m.c),
        ]
    if fam == "half_line":
        return [(-inf, 0.0, 0.0, 0.0), (0.0, inf, -m.a, 0.0)]
    if fam == "two_slope":
        return [(-inf, 0.0, -m.b, 0.0), (0.0, inf, -m.a, 0.0)]
    if fam == "abs_value":
        return [(-inf, 0.0, -m.a, 0.0), (0.0, inf, m.a, 0.0)]
    if fam == "tabulated":
        xs = [k for k, _ in m.knots]
        ys = [v for _, v in m.knots]
        pieces = [(-inf, xs[0], 0.0, ys[0])]
        for i in range(len(xs) - 1):
            slope = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
            pieces.append((xs[i], xs[i + 1], slope, ys[i] - slope * xs[i]))
        pieces.append((xs[-1], inf, 0.0, ys[-1]))
        return pieces
    return None


@dataclass(frozen=True)
class NoiseSpec:
    """Innovation distribution with its large-deviation bookkeeping.

    Each family carries the speed q(eps) and the kind of scaled exit-time
    statistic it calls for: ``log`` families compare q(eps)*log E[tau]
    against an action value, the ``linear`` (Cauchy) family compares
    eps*E[tau] against a constant.
    """

    family: str
    b: float | None = None
    lam: float | None = None

    def __post_init__(self):
        if self.family not in NOISE_FAMILIES:
            raise ConfigError(f"unknown noise family {self.family!r}")
        if self.family == "laplace":
            if self.b is None or not self.b > 0:
                raise ConfigError("laplace noise requires scale b > 0")
        if self.family == "poisson_diff":
            if self.lam is None or not self.lam > 0:
                raise ConfigError("poisson_diff noise requires lambda > 0")

    @classmethod
    def gaussian(cls) -> "NoiseSpec":
        return cls("gaussian")

    @classmethod
    def laplace(cls, b: float) -> "NoiseSpec":
        return cls("laplace", b=b)

    @classmethod
    def cauchy(cls) -> "NoiseSpec":
        return cls("cauchy")

    @classmethod
    def poisson_diff(cls, lam: float) -> "NoiseSpec":
        return cls("poisson_diff", lam=lam)

    @property
    def params(self) -> dict:
        out = {}
        if self.b is not None:
            out["b"] = self.b
        if self.lam is not None:
            out["lambda"] = self.lam
        return out

    @property
    def scaled_kind(self) -> str:
        return "linear" if self.family == "cauchy" else "log"

    def speed(self, eps: float) -> float:
        """The normalization q(eps) in q(eps)*log P."""
        if self.family == "gaussian":
            return eps * eps
        if self.family == "laplace":
            return eps
        if self.family == "poisson_diff":
            la = abs(math.log(eps))
            if la < 1e-12:
                raise ConfigError("poisson_diff speed eps/|log eps| undefined at eps = 1")
            return eps / la
        raise ConfigError("cauchy noise has no log-scale speed; use eps*E[tau]")

    def rate(self, z: float) -> float:
        """Single-step cost of a displacement z in the path functional."""
        if self.family == "gaussian":
            return 0.5 * z * z
        if self.family == "laplace":
            return abs(z) / self.b
        if self.family == "poisson_diff":
            return self.lam * abs(z)
        raise ConfigError("cauchy noise has no rate function at this scaling")

    def scaled_statistic(self, eps: float, mean_tau: float) -> float:
        if self.family == "cauchy":
            return eps * mean_tau
        return self.speed(eps) * math.log(mean_tau)


@dataclass(frozen=True)
class ProcessConfig:
    """The full process: map, noise, noise amplitude, interval, start."""

    map: MapSpec
    noise: NoiseSpec
    epsilon: float
    half_width: float = 1.0
    start: float = 0.0

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ConfigError(f"epsilon must be positive, got {self.epsilon}")
        if not self.half_width > 0:
            raise ConfigError(f"half_width must be positive, got {self.half_width}")
        if not abs(self.start) < self.half_width:
            raise ConfigError(
                f"start must satisfy |x0| < half_width, got x0={self.start}, "
                f"h={self.half_width}"
            )


def step(cfg: ProcessConfig, x: float, xi: float) -> float:
    """One transition X -> f(X) + eps*xi."""
    return eval_map(cfg.map, x) + cfg.epsilon * xi


def draw_noise(noise: NoiseSpec, rng: np.random.Generator, size=None):
    """Draw innovations; with size=None returns a python float."""
    if noise.family == "gaussian":
        out = rng.standard_normal(size)
    elif noise.family == "laplace":
        out = rng.laplace(0.0, noise.b, size)
    elif noise.family == "cauchy":
        out = rng.standard_cauchy(size)
    else:
        p1 = rng.poisson(noise.lam, size)
        p2 = rng.poisson(noise.lam, size)
        out = (p1 - p2).astype(np.float64) if size is not None else float(p1 - p2)
    if size is None:
        return float(out)
    return np.asarray(out, dtype=np.float64)


def sample_noise(noise: NoiseSpec, rng: np.random.Generator) -> float:
    """One i.i.d. innovation draw."""
    return draw_noise(noise, rng, None)


# -- JSON-facing configuration ---------------------------------------------


def map_to_dict(m: MapSpec) -> dict:
    return {"family": m.family, **m.params}


def map_from_dict(d: dict) -> MapSpec:
    d = dict(d)
    try:
        family = d.pop("family")
    except KeyError:
        raise ConfigError("map object requires a 'family' key") from None
    knots = d.pop("knots", None)
    kwargs = {}
    for name in ("a", "b", "c", "r"):
        if name in d:
            kwargs[name] = float(d.pop(name))
    if d:
        raise ConfigError(f"unknown map keys: {sorted(d)}")
    if knots is not None:
        kwargs["knots"] = tuple(tuple(map(float, k)) for k in knots)
    return MapSpec(family, **kwargs)


def noise_to_dict(n: NoiseSpec) -> dict:
    return {"family": n.family, **n.params}


def noise_from_dict(d: dict) -> NoiseSpec:
    d = dict(d)
    try:
        family = d.pop("family")
    except KeyError:
        raise ConfigError("noise object requires a 'family' key") from None
    b = d.pop("b", None)
    lam = d.pop("lambda", d.pop("lam", None))
    if d:
        raise ConfigError(f"unknown noise keys: {sorted(d)}")
    return NoiseSpec(
        family,
        b=float(b) if b is not None else None,
        lam=float(lam) if lam is not None else None,
    )


def config_to_dict(cfg: ProcessConfig) -> dict:
    return {
        "map": map_to_dict(cfg.map),
        "noise": noise_to_dict(cfg.noise),
        "epsilon": cfg.epsilon,
        "half_width": cfg.half_width,
        "start": cfg.start,
    }


def config_from_dict(d: dict) -> ProcessConfig:
    for key in ("map", "noise", "epsilon"):
        if key not in d:
            raise ConfigError(f"process config requires {key!r}")
    return ProcessConfig(
        map=map_from_dict(d["map"]),
        noise=noise_from_dict(d["noise"]),
        epsilon=float(d["epsilon"]),
        half_width=float(d.get("half_width", 1.0)),
        start=float(d.get("start", 0.0)),
    )
