"""Hot-loop kernels with a compiled core and a pure numpy fallback.

The compiled extension ``_native`` is preferred when importable; setting
the environment variable ``LOGCAP_PURE_PYTHON`` (to any non-empty value)
forces the numpy fallback.  ``BACKEND`` records which one is active.
"""

import os

if os.environ.get("LOGCAP_PURE_PYTHON"):
    from . import pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _native as _impl

        BACKEND = "native"
    except ImportError:
        from . import pure as _impl

        BACKEND = "pure"

gap_moment_sums = _impl.gap_moment_sums
poly_over_sqrt_q = _impl.poly_over_sqrt_q
skip_product = _impl.skip_product

__all__ = ["BACKEND", "gap_moment_sums", "poly_over_sqrt_q", "skip_product"]
