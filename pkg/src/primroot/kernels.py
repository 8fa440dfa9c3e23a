"""Backend dispatch for the sweep kernels.

Prefers the compiled extension, falls back to the pure-Python mirror.
Set PRIMROOT_BACKEND=python or PRIMROOT_BACKEND=compiled to force one;
forcing "compiled" raises if the extension is not built.
"""

from __future__ import annotations

import os

_requested = os.environ.get("PRIMROOT_BACKEND")

if _requested == "python":
    from . import _kernels_py as _impl

    BACKEND = "python"
elif _requested == "compiled":
    from . import _kernels as _impl  # type: ignore[no-redef]

    BACKEND = "compiled"
elif _requested:
    raise ImportError(f"PRIMROOT_BACKEND must be 'compiled' or 'python', got {_requested!r}")
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

sieve = _impl.sieve
spf_table = _impl.spf_table
prime_scan = _impl.prime_scan
psi_indicator = _impl.psi_indicator
power_table = _impl.power_table

FLAG_FERMAT = 1
FLAG_GERMAIN = 2
FLAG_HIGHLY_COMPOSITE = 4


def available_backends():
    """Names of the importable backends, preferred first."""
    names = []
    try:
        from . import _kernels  # noqa: F401

        names.append("compiled")
    except ImportError:
        pass
    names.append("python")
    return names


def get_backend(name):
    """Return a specific backend module by name ("compiled" or "python")."""
    if name == "python":
        from . import _kernels_py

        return _kernels_py
    if name == "compiled":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown backend: {name!r}")
