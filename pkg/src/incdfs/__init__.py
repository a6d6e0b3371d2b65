"""Incremental DFS-tree maintenance for undirected graphs.

A DFS tree is kept valid under online edge/vertex insertions: batches are
replayed over a frozen snapshot by :func:`incdfs.rebuild.batch_insert` in
O(n + |U|) plus engine time, and :class:`incdfs.maintain.DfsMaintainer`
de-amortizes full rebuilds so every single insertion costs O(n) worst case.
Four interchangeable query engines answer the hanging-subtree queries the
rebuild needs; all of them are instrumented with machine-independent work
counters.
"""

from . import _core
from .graph import DfsTree, Edge, Graph, is_ancestor, level_ancestor, path_vertices, static_dfs
from .maintain import DfsMaintainer
from .oracle import brute_query, reference_batch_insert, validate_dfs_tree
from .rebuild import UpdateBatch, batch_insert

__version__ = "0.1.0"

__all__ = [
    "DfsMaintainer",
    "DfsTree",
    "Edge",
    "Graph",
    "UpdateBatch",
    "batch_insert",
    "brute_query",
    "is_ancestor",
    "level_ancestor",
    "path_vertices",
    "reference_batch_insert",
    "static_dfs",
    "validate_dfs_tree",
    "_core",
]
