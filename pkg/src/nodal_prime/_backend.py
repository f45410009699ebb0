"""Import-time choice between the compiled kernel and pure Python.

Set ``NODAL_PRIME_BACKEND=python`` to force the pure-Python path even when
the extension is built.
"""

import os

# the kernel works on unsigned 64-bit words; t1 + t2 must not overflow
WORD_LIMIT = 1 << 63

kernel = None
if os.environ.get("NODAL_PRIME_BACKEND", "").strip().lower() != "python":
    try:
        from . import _kernel as kernel
    except ImportError:
        kernel = None

BACKEND = "cython" if kernel is not None else "python"
