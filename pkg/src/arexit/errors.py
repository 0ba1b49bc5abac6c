"""Exception types shared across the package."""


class ConfigError(ValueError):
    """A parameter, path, or configuration violates its domain constraints."""


class PathError(ConfigError):
    """A trajectory violates the exit-path constraints."""


class MapContainmentError(ConfigError):
    """The map sends an interior point outside the interval, so the
    boundary-exit reduction used by the grid optimizer does not apply."""

    def __init__(self, x: float, fx: float, half_width: float):
        self.x = x
        self.fx = fx
        self.half_width = half_width
        super().__init__(
            f"map is not contained in the interval: |f({x:.6g})| = "
            f"{abs(fx):.6g} >= half_width {half_width:.6g}"
        )


class EstimateInvalidError(RuntimeError):
    """A Monte Carlo estimate could not be formed (every trial censored)."""
