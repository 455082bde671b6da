"""Backend selection for the Apéry-table kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``NSGP_PURE_PYTHON`` is set to a non-empty value, the
pure-Python module is used. ``set_backend`` switches at runtime (tests and
the benchmark use it to compare the two).
"""

import os

from . import _kernels_py

try:
    from . import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

_NAMES = (
    "apery_from_generators",
    "pseudo_frobenius",
    "special_gaps",
    "minimal_generators",
    "child_gaps",
    "expand_level",
)

BACKEND = None


def available_backends():
    return ["cython", "python"] if _kernels_c is not None else ["python"]


def set_backend(name):
    global BACKEND
    if name == "cython":
        if _kernels_c is None:
            raise ImportError("compiled kernels are not built")
        mod = _kernels_c
    elif name == "python":
        mod = _kernels_py
    else:
        raise ValueError(f"unknown backend {name!r}")
    g = globals()
    for n in _NAMES:
        g[n] = getattr(mod, n)
    BACKEND = name


set_backend("cython" if _kernels_c is not None and not os.environ.get("NSGP_PURE_PYTHON") else "python")
