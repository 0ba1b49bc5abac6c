"""Exact bound formulas for the map families that admit them.

Each function returns the right-hand side of the asymptotic exit-time
bound limsup q(eps) * log E[tau] <= value (the Cauchy constant instead
bounds eps * E[tau]). They double as ground truth for the numerical
minimizer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError
from .model import MapSpec, NoiseSpec

QUADRATIC_N2_CAVEAT = (
    "N=2 only: value is the two-step upper bound; the numerical infimum may be lower"
)


def linear_bound(a: float, h: float) -> float:
    """h^2 * (1 - a^2) / 2 for f(x) = a*x exiting (-h, h)."""
    if not abs(a) < 1:
        raise ConfigError(f"linear bound requires |a| < 1, got a={a}")
    if not h > 0:
        raise ConfigError(f"half-width must be positive, got {h}")
    return h * h * (1.0 - a * a) / 2.0


def absval_bound(a: float) -> float:
    """f(x) = a*|x| exits at the same cost as the linear map, either sign of a."""
    if not abs(a) < 1:
        raise ConfigError(f"abs_value bound requires |a| < 1, got a={a}")
    return linear_bound(a, 1.0)


def _geom_sum(q: float, n: int) -> float:
    """sum_{k=0}^{n-1} q^k, exact at q = 1."""
    total = 0.0
    term = 1.0
    for _ in range(n):
        total += term
        term *= q
    return total


def deadzone_quotient(a: float, b: float, N: int) -> float:
    """The N-step quotient (1 + a*b*S1)^2 / S2 with S1 = sum a^k over
    k < N-1 and S2 = sum a^{2k} over k < N.

    Written through the geometric sums it is regular on the whole domain,
    reducing to (1 + (N-1)*b)^2 / N at a = 1 and to 1 at a = 0.
    """
    _deadzone_domain(a, b)
    if N < 1:
        raise ConfigError(f"N must be a positive integer, got {N}")
    s1 = _geom_sum(a, N - 1)
    s2 = _geom_sum(a * a, N)
    return (1.0 + a * b * s1) ** 2 / s2


def deadzone_bound(a: float, b: float, M: int) -> tuple[float, int]:
    """Half the minimal quotient over N = 1..M and the smallest attaining N."""
    _deadzone_domain(a, b)
    if M < 1:
        raise ConfigError(f"M must be a positive integer, got {M}")
    vals = [deadzone_quotient(a, b, n) for n in range(1, M + 1)]
    best = min(vals)
    tol = best * 1e-12
    n_star = next(n for n, v in enumerate(vals, start=1) if v <= best + tol)
    return 0.5 * best, n_star


def _deadzone_domain(a: float, b: float):
    if not abs(a) <= 1:
        raise ConfigError(f"dead_zone bound requires |a| <= 1, got a={a}")
    if not 0 <= b < 1:
        raise ConfigError(f"dead_zone bound requires 0 <= b < 1, got b={b}")
    if a == 1 and b == 0:
        raise ConfigError("dead_zone bound with a = 1 requires b > 0")


def saturated_bound(a: float, c: float) -> float:
    """Two-branch bound for f(x) = a*clip(x, -c, c); the branches agree at c = a.

    Below c = a the exit pays one unsupported jump from the plateau plus the
    linear climb to c; above it the linear-map cost applies unchanged.
    """
    if not 0 < a < 1:
        raise ConfigError(f"saturated bound requires 0 < a < 1, got a={a}")
    if not 0 < c <= 1:
        raise ConfigError(f"saturated bound requires 0 < c <= 1, got c={c}")
    if c <= a:
        return 0.5 * ((1.0 - a * c) ** 2 + (1.0 - a * a) * c * c)
    return 0.5 * (1.0 - a * a)


def halfline_bound(a: float) -> float:
    """1 / (2*(1 + a^2)) for the map that is flat left of 0 and -a*x right of it.

    The boundary value a = 1 is accepted for cross-checks even though the
    map spec itself keeps a strictly below 1.
    """
    if not 0 < a <= 1:
        raise ConfigError(f"half_line bound requires 0 < a <= 1, got a={a}")
    return 0.5 / (1.0 + a * a)


def twoslope_bound(a: float, b: float) -> float:
    """min of (1-(ab)^2)/(2(1+a^2)) and (1-(ab)^2)/(2(1+b^2)).

    Exposed as the minimum of both fractions (rather than the max-parameter
    shortcut) so the expression is traceable term by term.
    """
    if not (0 < a < 1 and 0 < b < 1):
        raise ConfigError(f"two_slope bound requires a, b in (0, 1), got a={a}, b={b}")
    num = 1.0 - (a * b) ** 2
    return 0.5 * min(num / (1.0 + a * a), num / (1.0 + b * b))


def quadratic_bound(a: float) -> float:
    """1/2 for a <= 1/2, else (1/a - 1/(4a^2))/2; continuous at a = 1/2.

    Above a = 1/2 this is only the two-step value (see
    QUADRATIC_N2_CAVEAT); the numerical minimizer may return less.
    """
    if not a >= 0:
        raise ConfigError(f"quadratic bound requires a >= 0, got a={a}")
    if a <= 0.5:
        return 0.5
    return 0.5 * (1.0 / a - 1.0 / (4.0 * a * a))


def quadratic_has_caveat(a: float) -> bool:
    return a > 0.5


@dataclass(frozen=True)
class NoiseBound:
    """Distribution-level exit constant: its statistic kind ('log' compares
    q(eps)*log E[tau], 'linear' compares eps*E[tau]), the constant, whether
    the asymptotic statement is an equality, and any validity note."""

    kind: str
    value: float
    equality: bool
    note: str | None = None


def noise_constants(noise: NoiseSpec) -> NoiseBound:
    """Exit constant carried by the innovation family itself."""
    if noise.family == "laplace":
        return NoiseBound("log", 1.0 / noise.b, equality=True)
    if noise.family == "cauchy":
        return NoiseBound("linear", math.pi / 2.0, equality=False)
    if noise.family == "poisson_diff":
        return NoiseBound(
            "log",
            noise.lam,
            equality=False,
            note="valid for increasing maps fixed at the origin with |f(x)| < |x|",
        )
    raise ConfigError(
        "gaussian noise has no distribution-level constant; "
        "use the action-based bound for the chosen map"
    )


def closed_form_bound(
    m: MapSpec, h: float = 1.0, max_len: int = 50
) -> tuple[float, int | None, list[str]]:
    """Dispatch to the family's bound formula.

    Only the linear family takes a general half-width; the other formulas
    are stated for h = 1 and refuse anything else (run the numerical
    minimizer instead). Returns (value, attaining N when the formula
    produces one, caveat strings).
    """
    fam = m.family
    if fam == "linear":
        return linear_bound(m.a, h), None, []
    if h != 1.0:
        raise ConfigError(
            f"the {fam} closed form is stated for half-width 1 (got h={h}); "
            "use the numerical minimizer (--numeric)"
        )
    if fam == "dead_zone":
        value, n_star = deadzone_bound(m.a, m.b, max_len)
        return value, n_star, []
    if fam == "saturated":
        return saturated_bound(m.a, m.c), None, []
    if fam == "half_line":
        return halfline_bound(m.a), None, []
    if fam == "two_slope":
        return twoslope_bound(m.a, m.b), None, []
    if fam == "abs_value":
        return absval_bound(m.a), None, []
    if fam == "quadratic":
        caveats = [QUADRATIC_N2_CAVEAT] if quadratic_has_caveat(m.a) else []
        return quadratic_bound(m.a), None, caveats
    raise ConfigError(
        f"no closed-form bound for the {fam} family; "
        "use the numerical minimizer (--numeric)"
    )
