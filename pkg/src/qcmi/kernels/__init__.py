"""Backend selection for the hot numeric kernels.

The env var QCMI_BACKEND picks the implementation:

  QCMI_BACKEND=numba   require the numba backend (ImportError if missing)
  QCMI_BACKEND=numpy   force the pure-numpy fallback
  unset                numba when importable, numpy otherwise

``BACKEND`` records the active choice. Both implementations share one
contract; see benchmarks/bench_kernels.py for a speed comparison.
"""

import os

_requested = os.environ.get("QCMI_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ValueError(
        f"QCMI_BACKEND={_requested!r} not understood (use 'numba' or 'numpy')"
    )

if _requested == "numpy":
    from . import numpy_impl as _impl

    BACKEND = "numpy"
else:
    try:
        from . import numba_impl as _impl

        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import numpy_impl as _impl

        BACKEND = "numpy"

kth_distances = _impl.kth_distances
count_within = _impl.count_within
weighted_count_within = _impl.weighted_count_within
kde_gaussian = _impl.kde_gaussian

__all__ = [
    "BACKEND",
    "kth_distances",
    "count_within",
    "weighted_count_within",
    "kde_gaussian",
]
