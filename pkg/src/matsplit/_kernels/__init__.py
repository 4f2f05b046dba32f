"""GF(2) kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
fallback.  Set ``MATSPLIT_PURE=1`` to force the fallback (used by the
benchmark and for debugging).
"""

import os

from . import gf2_py

if os.environ.get("MATSPLIT_PURE"):
    backend = gf2_py
else:
    try:
        from . import _gf2cy as backend  # type: ignore[no-redef]
    except ImportError:
        backend = gf2_py

BACKEND_NAME = backend.NAME
MAX_TABLE_BITS = gf2_py.MAX_TABLE_BITS

rank_rows = backend.rank_rows
rref_rows = backend.rref_rows
rank_table = backend.rank_table
circuit_masks = backend.circuit_masks

# Pure versions stay importable for wide matrices (> 64 columns) and for
# backend cross-checks in tests.
pure = gf2_py
