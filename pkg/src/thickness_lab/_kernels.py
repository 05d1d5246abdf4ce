"""Backend selection for the planarity verdict used in hot loops.

The compiled kernel is used when importable; ``THICKNESS_LAB_PURE=1`` forces
the pure-Python path.
"""

from __future__ import annotations

import os
from typing import Callable, Sequence

from ._lr import adjacency_from_edges, lr_is_planar

Edges = Sequence[tuple[int, int]]


def _py_is_planar_edges(n: int, edges: Edges) -> bool:
    return lr_is_planar(n, adjacency_from_edges(n, edges))


_compiled: Callable[[int, Edges], bool] | None
try:
    from ._lr_kernel import lr_is_planar_edges as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "python" if _compiled is None or os.environ.get("THICKNESS_LAB_PURE") else "cython"

is_planar_edges: Callable[[int, Edges], bool] = (
    _compiled if BACKEND == "cython" else _py_is_planar_edges  # type: ignore[assignment]
)
python_is_planar_edges = _py_is_planar_edges
compiled_is_planar_edges = _compiled
