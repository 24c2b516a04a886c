"""Kernel backend selection.

The compiled extension (`lambert.kernels._cy_core`) is used when it imported
successfully; otherwise the pure-numpy fallback takes over. Force a backend
with LAMBERT_KERNELS=cy|np (cy raises if the extension is missing).
"""

import os

from . import np_backend

_choice = os.environ.get("LAMBERT_KERNELS", "auto")

if _choice == "np":
    backend = np_backend
elif _choice == "cy":
    from . import cy_backend

    backend = cy_backend
else:
    try:
        from . import cy_backend

        backend = cy_backend
    except ImportError:
        backend = np_backend

BACKEND_NAME = backend.NAME


def set_num_threads(n):
    """Cap kernel threads (compiled backend only; numpy path is unaffected)."""
    if hasattr(backend, "set_num_threads"):
        backend.set_num_threads(n)


def get_num_threads():
    return backend.get_num_threads() if hasattr(backend, "get_num_threads") else 1


def get_backend(name):
    """Fetch a backend by name regardless of the import-time selection."""
    if name == "np":
        return np_backend
    if name == "cy":
        from . import cy_backend

        return cy_backend
    raise ValueError(f"unknown kernel backend {name!r}")
