"""Kernel selection: the compiled extension when built, else pure Python.

Set ``STREAMDFS_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("STREAMDFS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

walk_up = _impl.walk_up
is_ancestor = _impl.is_ancestor
lca = _impl.lca
uf_find = _impl.uf_find
uf_union = _impl.uf_union

__all__ = ["BACKEND", "walk_up", "is_ancestor", "lca", "uf_find", "uf_union"]
