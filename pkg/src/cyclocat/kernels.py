"""Backend selection for the scalar kernels.

The Cython extension ``cyclocat._speedups`` is used when it has been built;
otherwise the pure-Python ``cyclocat._pykernels`` is used.  Setting the
environment variable ``CYCLOCAT_PURE_PYTHON=1`` forces the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("CYCLOCAT_PURE_PYTHON", "") not in ("", "0"):
    from cyclocat import _pykernels as _impl
else:
    try:
        from cyclocat import _speedups as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        from cyclocat import _pykernels as _impl

normalize = _impl.normalize
add = _impl.add
sub = _impl.sub
mul = _impl.mul
scale = _impl.scale
