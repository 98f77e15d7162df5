"""Select the computation kernel.

The compiled extension (rootwald._speedups) and the pure Python module
(rootwald._kernel_py) expose the same functions over the same plain data.
Set ROOTWALD_BACKEND=python or ROOTWALD_BACKEND=c to force one of them;
the default prefers the compiled kernel when it imported cleanly.
"""

import os

from rootwald import _kernel_py


def load_backend(name):
    if name == "python":
        return _kernel_py
    if name == "c":
        from rootwald import _speedups

        return _speedups
    raise ValueError("unknown backend %r" % name)


_forced = os.environ.get("ROOTWALD_BACKEND", "").strip().lower()
if _forced in ("python", "py", "pure"):
    impl = _kernel_py
elif _forced == "c":
    impl = load_backend("c")
else:
    try:
        impl = load_backend("c")
    except ImportError:
        impl = _kernel_py

BACKEND = impl.BACKEND
