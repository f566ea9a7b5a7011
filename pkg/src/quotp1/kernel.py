"""Backend selection for the term-list kernels.

The compiled ``_speedups`` extension is used when it imports; otherwise the
pure-Python ``_kernel_py`` twin. Setting ``QUOTP1_PURE=1`` forces the fallback.
"""

import os

from . import _kernel_py

BACKEND = "python"
_impl = _kernel_py

if os.environ.get("QUOTP1_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _impl = _kernel_py

add_terms = _impl.add_terms
scale_terms = _impl.scale_terms
mul_terms = _impl.mul_terms
normal_form = _impl.normal_form
support_mask = _impl.support_mask


def backends():
    """Map backend name -> module, for the benchmark and the parity tests."""
    out = {"python": _kernel_py}
    try:
        from . import _speedups
        out["cython"] = _speedups
    except ImportError:
        pass
    return out
