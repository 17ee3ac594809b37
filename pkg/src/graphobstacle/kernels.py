"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded. Both expose the same four functions.
"""
from __future__ import annotations

try:
    from . import _ckernels as _impl
except ImportError:  # extension not built
    from . import _pykernels as _impl

BACKEND: str = _impl.BACKEND
bareiss_det = _impl.bareiss_det
principal_minors = _impl.principal_minors
faddeev_leverrier = _impl.faddeev_leverrier
jacobi_eigenvalues = _impl.jacobi_eigenvalues


def available_backends() -> dict:
    """Every kernel module that imports in this environment, keyed by backend name."""
    from . import _pykernels

    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["compiled"] = _ckernels
    return found
