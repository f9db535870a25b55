"""Kernel backend selection.

SYMTHETA_BACKEND=numpy forces the pure-numpy path; SYMTHETA_BACKEND=numba
forces the jit path (failing loudly if numba is unusable).  Unset, numba is
used when importable and numpy otherwise.
"""

import os

_choice = os.environ.get("SYMTHETA_BACKEND", "").strip().lower()

if _choice == "numpy":
    from . import gb_kernels_numpy as kernels
elif _choice == "numba":
    from . import gb_kernels_numba as kernels
elif _choice == "":
    try:
        from . import gb_kernels_numba as kernels
    except ImportError:  # pragma: no cover - environment dependent
        from . import gb_kernels_numpy as kernels
else:
    raise RuntimeError(f"SYMTHETA_BACKEND={_choice!r}; expected 'numba' or 'numpy'")

BACKEND_NAME = kernels.BACKEND_NAME
normal_form = kernels.normal_form
add_scaled_shifted = kernels.add_scaled_shifted
warmup = kernels.warmup
