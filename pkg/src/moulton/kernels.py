"""Backend selection for the integer kernels.

The compiled ``_ckernels`` extension is used when it has been built; set
``MOULTON_PURE=1`` to force the pure-Python fallback.
"""

import os

if os.environ.get("MOULTON_PURE"):
    from ._pykernels import *  # noqa: F401,F403
    BACKEND = "python"
else:
    try:
        from ._ckernels import *  # noqa: F401,F403
        BACKEND = "cython"
    except ImportError:
        from ._pykernels import *  # noqa: F401,F403
        BACKEND = "python"

from ._pykernels import ZERO  # noqa: E402,F401
