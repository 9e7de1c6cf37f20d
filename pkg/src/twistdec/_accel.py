"""Backend selection for the numeric kernels.

Set ``TWISTDEC_BACKEND=numpy`` to force the pure-numpy code paths; the
default is ``numba`` whenever numba imports cleanly.
"""

from __future__ import annotations

import logging
import os

try:
    import numba

    logging.getLogger("numba").setLevel(logging.WARNING)
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    numba = None
    HAVE_NUMBA = False


def _requested_backend() -> str:
    name = os.environ.get("TWISTDEC_BACKEND", "numba").strip().lower()
    if name not in ("numba", "numpy"):
        raise ValueError(f"TWISTDEC_BACKEND must be 'numba' or 'numpy', got {name!r}")
    return name


BACKEND = "numba" if (_requested_backend() == "numba" and HAVE_NUMBA) else "numpy"


def njit(fn):
    """Compile with numba when available, else return ``fn`` unchanged.

    Compilation is independent of ``BACKEND`` so both paths stay testable in
    one process; dispatch happens in :mod:`twistdec.kernels`.
    """
    if not HAVE_NUMBA:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)
