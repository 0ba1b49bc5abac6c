"""Hot-kernel backend selection.

The compiled extension is preferred when it imports; set
``AREXIT_BACKEND=python`` to force the numpy fallback, or
``AREXIT_BACKEND=compiled`` to make a missing extension a hard error.
Tabulated maps always scan through the numpy path (the C kernel takes
scalar parameters only), under either backend.
"""

import os

from . import pyimpl
from .pyimpl import FAMILY_CODES, TABULATED, eval_family

_requested = os.environ.get("AREXIT_BACKEND", "auto").lower()
if _requested not in ("auto", "python", "compiled"):
    raise RuntimeError(f"AREXIT_BACKEND must be auto|python|compiled, got {_requested!r}")

_impl = None
if _requested in ("auto", "compiled"):
    try:
        from . import _speedups as _impl
    except ImportError:
        if _requested == "compiled":
            raise
        _impl = None

BACKEND = "compiled" if _impl is not None else "python"


def dp_relax(cin, tmat, cout, amin):
    if _impl is not None:
        _impl.dp_relax(cin, tmat, cout, amin)
    else:
        pyimpl.dp_relax(cin, tmat, cout, amin)


def exit_scan(x, noise, code, p0, p1, eps, h, out, knots_x=None, knots_y=None):
    if _impl is not None and code != TABULATED:
        _impl.exit_scan(x, noise, code, p0, p1, eps, h, out)
    else:
        pyimpl.exit_scan(x, noise, code, p0, p1, eps, h, out, knots_x, knots_y)
