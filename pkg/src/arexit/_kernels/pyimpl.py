"""Numpy implementations of the hot kernels.

These are the fallback used when the compiled extension is unavailable
(and always for tabulated maps, which carry arrays the C kernel does not
take). The compiled twin in ``_speedups.pyx`` mirrors the arithmetic of
this module branch for branch so that, for the piecewise-linear families,
both backends produce bit-identical trajectories.
"""

import numpy as np

# Family codes shared with the compiled kernel.
LINEAR = 0
DEAD_ZONE = 1
SATURATED = 2
HALF_LINE = 3
TWO_SLOPE = 4
ABS_VALUE = 5
QUADRATIC = 6
RICKER = 7
TABULATED = 8

FAMILY_CODES = {
    "linear": LINEAR,
    "dead_zone": DEAD_ZONE,
    "saturated": SATURATED,
    "half_line": HALF_LINE,
    "two_slope": TWO_SLOPE,
    "abs_value": ABS_VALUE,
    "quadratic": QUADRATIC,
    "ricker": RICKER,
    "tabulated": TABULATED,
}


def eval_family(code, p0, p1, x, knots_x=None, knots_y=None):
    """Vectorized map evaluation for a coded family.

    Each branch formula extends continuously outside the unit interval;
    tabulated maps clamp to their end knot values.
    """
    x = np.asarray(x, dtype=np.float64)
    if code == LINEAR:
        return p0 * x
    if code == DEAD_ZONE:
        return np.where(x <= -p1, p0 * (x + p1), np.where(x >= p1, p0 * (x - p1), 0.0))
    if code == SATURATED:
        return p0 * np.clip(x, -p1, p1)
    if code == HALF_LINE:
        return np.where(x < 0.0, 0.0, -p0 * x)
    if code == TWO_SLOPE:
        return np.where(x < 0.0, -p1 * x, -p0 * x)
    if code == ABS_VALUE:
        return p0 * np.abs(x)
    if code == QUADRATIC:
        return p0 * x * x
    if code == RICKER:
        return (x + p0) * np.exp(-x) - p0
    if code == TABULATED:
        return np.interp(x, knots_x, knots_y)
    raise ValueError(f"unknown family code {code}")


def dp_relax(cin, tmat, cout, amin):
    """One value-iteration sweep: cout[j] = min_i cin[i] + tmat[j, i].

    ``amin`` receives the attaining i (first index on ties, matching the
    compiled kernel's strict-< rule).
    """
    total = tmat + cin[np.newaxis, :]
    idx = np.argmin(total, axis=1)
    amin[:] = idx
    cout[:] = total[np.arange(total.shape[0]), idx]


def exit_scan(x, noise, code, p0, p1, eps, h, out, knots_x=None, knots_y=None):
    """Advance each row through its noise chunk until it leaves (-h, h).

    out[i] is the 1-based step of first exit within the chunk, 0 if the row
    survives the whole chunk. x is updated in place to the position after
    the last consumed step (the exit position for exited rows).
    """
    n, k = noise.shape
    out[:] = 0
    active = np.arange(n)
    for j in range(k):
        xa = eval_family(code, p0, p1, x[active], knots_x, knots_y) + eps * noise[active, j]
        x[active] = xa
        hit = np.abs(xa) >= h
        if hit.any():
            out[active[hit]] = j + 1
            active = active[~hit]
            if active.size == 0:
                break
