"""Kernel backend selection.

Imports the compiled extension when available, otherwise the pure-Python
fallback.  Set the environment variable ``GKSPEC_PURE=1`` before import to
force the fallback (useful for benchmarking and differential testing).
"""

import os

if os.environ.get("GKSPEC_PURE"):
    from . import _fallback as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fallback as _impl

gf_mul = _impl.gf_mul
gf_pow = _impl.gf_pow
gf_geom_sum = _impl.gf_geom_sum
psl2_order_counts = _impl.psl2_order_counts


def backend_name() -> str:
    """'compiled' when the extension module is active, else 'pure'."""
    return "compiled" if _impl.COMPILED else "pure"
