"""Selects the lattice-kernel implementation at import time.

The compiled extension is preferred when it imports cleanly; otherwise the
numpy fallback is used. Set MONOCERT_PURE_PYTHON=1 to force the fallback,
which is handy for benchmarking the two side by side.
"""

from __future__ import annotations

import os

if os.environ.get("MONOCERT_PURE_PYTHON"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

INF = _impl.INF
weight_table = _impl.weight_table
dnf_table = _impl.dnf_table
min_true_weight_below = _impl.min_true_weight_below
min_false_coweight_above = _impl.min_false_coweight_above
certificate_sizes = _impl.certificate_sizes
certificate_sizes_real = _impl.certificate_sizes_real
first_monotone_violation = _impl.first_monotone_violation


def backend() -> str:
    """Name of the active implementation: "compiled" or "python"."""
    return BACKEND
