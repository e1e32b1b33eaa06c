"""Kernel selection: compiled extension when available, pure Python otherwise.

``EICOUNT_BACKEND=python`` forces the fallback; ``EICOUNT_BACKEND=compiled``
insists on the extension and fails loudly when it is missing.
"""

import os

from . import _kernels_py as python_kernels

_forced = os.environ.get("EICOUNT_BACKEND")

compiled_kernels = None
if _forced != "python":
    try:
        from . import _kernels as compiled_kernels
    except ImportError:
        if _forced == "compiled":
            raise

kernels = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND = "compiled" if compiled_kernels is not None else "python"


def run_kernel(name, *args, **kwargs):
    """Call a kernel, falling back to pure Python when the compiled side
    rejects the instance (host too large, count beyond 2^62)."""
    fn = getattr(kernels, name)
    try:
        return fn(*args, **kwargs)
    except (ValueError, OverflowError):
        if kernels is python_kernels:
            raise
        return getattr(python_kernels, name)(*args, **kwargs)
