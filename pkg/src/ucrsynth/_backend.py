"""Kernel backend selection.

Imports the compiled extension when it was built, the numpy fallback
otherwise. Set UCRSYNTH_KERNELS=compiled or UCRSYNTH_KERNELS=numpy to force
a choice (forcing "compiled" raises if the extension is missing).
"""

from __future__ import annotations

import os

_forced = os.environ.get("UCRSYNTH_KERNELS", "").strip().lower()

if _forced == "numpy":
    from . import _kernels_py as _impl

    BACKEND = "numpy"
elif _forced == "compiled":
    from . import _kernels as _impl

    BACKEND = "compiled"
elif _forced:
    raise ValueError(
        f"UCRSYNTH_KERNELS={_forced!r} not understood; use 'compiled' or 'numpy'"
    )
else:
    try:
        from . import _kernels as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "numpy"

rot = _impl.rot
cnot = _impl.cnot
