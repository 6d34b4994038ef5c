"""Select the graph kernel at import time.

The compiled extension is used when it was built; otherwise the pure-Python
module takes over.  Set ``BOUNCING_TOWER_PURE=1`` to force the fallback.
"""

import os

from . import _kernel_py

if os.environ.get("BOUNCING_TOWER_PURE", "") not in ("", "0"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernel_py

BACKEND = "cython" if _impl is not _kernel_py else "python"
SLOTS = _impl.SLOTS
MAX_DISKS = _impl.MAX_DISKS
build_adjacency = _impl.build_adjacency
bfs_distances = _impl.bfs_distances
