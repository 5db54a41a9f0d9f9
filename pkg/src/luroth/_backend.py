"""Kernel selection.

The compiled extension is used when it imports cleanly; ``LUROTH_PURE=1``
forces the pure-Python kernels (used by the benchmark and the parity tests).
"""

import os

from luroth import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("LUROTH_PURE", "") not in ("1", "true", "yes"):
    try:
        from luroth import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        _impl = _kernels_py

bareiss_det = _impl.bareiss_det
ff_gauss_jordan = _impl.ff_gauss_jordan
fano_sum = _impl.fano_sum
