"""Select the census kernel: compiled extension if importable, else pure Python.

Set ``DISTRANK_PURE=1`` to force the pure-Python kernel.
"""

import os

from . import _pykernels

if os.environ.get("DISTRANK_PURE", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
COMPILED_MAX_N = _compiled.MAX_N if _compiled is not None else 0


def scan(n, lo, hi, target=-1):
    if _compiled is not None and n <= COMPILED_MAX_N:
        return _compiled.scan(n, lo, hi, target)
    return _pykernels.scan(n, lo, hi, target)


def mask_rank(n, mask):
    if _compiled is not None and n <= COMPILED_MAX_N:
        return _compiled.mask_rank(n, mask)
    return _pykernels.mask_rank(n, mask)
