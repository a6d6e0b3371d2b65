"""Constant-time engine: every (subtree, ancestor) answer precomputed.

Quadratic preprocessing walks each vertex's ancestor path once, extending
answers incrementally with per-ancestor adjacency bit arrays (prefix sums
for the existence test, next-position witnesses to recover the edge).
Selected when n^2 <= m log n.
"""

from . import _core
from .engines import EngineStats
from .graph import DfsTree, Edge, Graph, is_ancestor


class DenseTable:
    """Flat per-vertex rows indexed by ancestor depth; -1 encodes Null."""

    __slots__ = ("t", "off", "hi", "lo", "build_work")

    def __init__(self, t, off, hi, lo, build_work):
        self.t = t
        self.off = off
        self.hi = hi
        self.lo = lo
        self.build_work = build_work

    @property
    def stored_entries(self):
        return self.off[-1]


def build_dense(g: Graph, t: DfsTree) -> DenseTable:
    gen = build_dense_steps(g, t)
    try:
        while True:
            next(gen)
    except StopIteration as stop:
        return stop.value


def build_dense_steps(g: Graph, t: DfsTree):
    """Generator form of :func:`build_dense`; every step is O(n)."""
    eu, ev = g.edge_arrays()
    builder = _core.kernels.DenseBuilder(
        g.n, eu, ev, t.first, t.last, t.depth, t.par, t.order)
    yield g.m
    for u in range(g.n):
        yield builder.prefix_step(u)
    for w in range(g.n):
        yield builder.rows_step(w)
    off, hi, lo, work = builder.result()
    return DenseTable(t, off, hi, lo, work)


def dense_query(tab: DenseTable, w: int, u: int):
    """Stored Q(T(w), u, par(w)); O(1)."""
    t = tab.t
    if w >= t.n or u >= t.n or u == w or not is_ancestor(t, u, w):
        raise ValueError(f"no stored answer: {u} is not a proper ancestor of {w}")
    p = tab.off[w] + t.depth[u] - 1
    hi = tab.hi[p]
    if hi < 0:
        return None
    return Edge(hi, tab.lo[p])


class DenseEngine:
    """Adapter answering each hanging subtree with one table lookup."""

    name = "dense"

    def __init__(self, g: Graph, t: DfsTree, table=None):
        self.t = t
        self.table = table if table is not None else build_dense(g, t)
        self.build_work = self.table.build_work

    @classmethod
    def build_steps(cls, g, t):
        table = yield from build_dense_steps(g, t)
        return cls(g, t, table)

    def batched_path_query(self, u, v, hanging, path=None):
        st = EngineStats()
        answers = []
        for x in hanging:
            answers.append(dense_query(self.table, x, u))
            st.point_queries += 1
            st.charged += 1
        return answers, st
