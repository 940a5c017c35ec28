"""Pick the kernel implementation at import time.

The compiled ``_ckernel`` is used when it was built; otherwise, or when
``HDIST_PURE_PYTHON`` is set to a non-empty value, the pure-Python module.
"""

import os

from . import _pykernel

kernel = _pykernel
if not os.environ.get("HDIST_PURE_PYTHON"):
    try:
        from . import _ckernel as kernel  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND = kernel.NAME
