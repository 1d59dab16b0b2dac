"""Select the cyclotomic kernel backend at import time.

The compiled extension is used when it was built; set ``GALMOD_PURE_PYTHON=1``
to force the pure-Python fallback (the test-suite runs both).
"""

import os

from . import _pykernels

if os.environ.get("GALMOD_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND
reduce_terms = _impl.reduce_terms
mulmod = _impl.mulmod
galois_map = _impl.galois_map
