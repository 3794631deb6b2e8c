"""Kernel selection: compiled extension when available, pure Python otherwise.

Set BEL_PURE_PYTHON=1 to force the fallback (used by the parity tests and
the benchmark).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("BEL_PURE_PYTHON"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

KERNEL_NAME = _impl.KERNEL_NAME
buchberger = _impl.buchberger
normal_form = _impl.normal_form
interreduce = _impl.interreduce


def implementations():
    """All importable kernel modules, keyed by name."""
    impls = {_kernel_py.KERNEL_NAME: _kernel_py}
    try:
        from . import _kernel_c

        impls[_kernel_c.KERNEL_NAME] = _kernel_c
    except ImportError:
        pass
    return impls
