"""Kernel backend selection.

Imports the compiled extension when it is available and falls back to the
pure-numpy twin otherwise.  Setting the environment variable
``SPINFACTOR_PURE=1`` forces the fallback (used by the benchmark and tests).
"""
import os

if os.environ.get("SPINFACTOR_PURE", "0") not in ("", "0"):
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as kernels

        BACKEND = "python"

triple_product_raw = kernels.triple_product
rk4_flow_raw = kernels.rk4_flow
