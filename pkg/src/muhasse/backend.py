"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting the
environment variable MUHASSE_PURE=1 forces the pure-Python kernel (used by
the benchmark and by the backend parity tests).
"""

import os

from . import _kernel_py

if os.environ.get("MUHASSE_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

BACKEND = "compiled" if _impl is not _kernel_py else "pure-python"

add = _impl.add
sub = _impl.sub
neg = _impl.neg
smul = _impl.smul
mul = _impl.mul
sigma_apply = _impl.sigma_apply
mat_mul = _impl.mat_mul
mat_sigma = _impl.mat_sigma
berkowitz = _impl.berkowitz
