"""Hot integer kernels behind the scalar-ring fast path.

The compiled extension is used when it was built; otherwise (or when
``EDET_PURE_PYTHON=1``) the pure-Python module is used. Both expose
``leibniz``, ``power_blocks`` and ``polarized`` with identical results.
"""

import os

from . import _pykernels as pure

if os.environ.get("EDET_PURE_PYTHON") == "1":
    compiled = None
else:
    try:
        from . import _ckernels as compiled
    except ImportError:
        compiled = None

active = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

leibniz = active.leibniz
power_blocks = active.power_blocks
polarized = active.polarized

MAX_ORDER = 20  # fixed-size C buffers hold up to 32 letters; factorial ranks must fit in 64 bits
