"""Search kernels: compiled extension when available, pure Python otherwise.

Set RBMINOR_PURE=1 to force the pure fallback (used by the benchmark and by
tests that compare the two backends).  Both implementations share the same
algorithms and produce identical output, bit for bit.
"""

import os

from . import pykernels

if os.environ.get("RBMINOR_PURE"):
    _impl = pykernels
    KERNEL_BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        KERNEL_BACKEND = "compiled"
    except ImportError:
        _impl = pykernels
        KERNEL_BACKEND = "python"

all_simple_cycles = _impl.all_simple_cycles
first_r_odd_cycle = _impl.first_r_odd_cycle
find_kt_model = _impl.find_kt_model
has_tk = _impl.has_tk
find_compatible = _impl.find_compatible

__all__ = [
    "KERNEL_BACKEND",
    "all_simple_cycles",
    "first_r_odd_cycle",
    "find_kt_model",
    "has_tk",
    "find_compatible",
    "pykernels",
]
