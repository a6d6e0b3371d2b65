"""De-amortized online interface: a valid DFS tree after every insertion.

Reporting replays the buffered updates over a frozen base generation
(snapshot graph, tree, engine) in O(n + |buffer|); meanwhile the next
generation is built in the background, a bounded quota of work per update,
and generations swap once the build completes.  Buffers stay O(sqrt(f))
long, so every insert costs O(n) worst case.
"""

import math
from dataclasses import dataclass

from .engines import engine_build_steps
from .graph import Graph, static_dfs_steps
from .hybrid_engine import ceil_log2
from .rebuild import UpdateBatch, batch_insert


def cost_budget(n: int, m: int) -> int:
    """Preprocessing budget min(m log n, n^2) for the structure over (n, m)."""
    return min(m * ceil_log2(max(n, 2)), n * n)


def select_engine_kind(n: int, m: int) -> str:
    """Dense when the quadratic table is the cheaper structure."""
    return "dense" if n * n <= m * ceil_log2(max(n, 2)) else "hybrid"


@dataclass
class UpdateMetrics:
    index: int
    n: int
    m: int
    report_work: int
    build_work: int
    queries_3b: int
    cascade_work: int
    shortpath_work: int
    swapped: bool

    @property
    def total_work(self):
        return self.report_work + self.build_work


def _generation_steps(graph, kind):
    tree = yield from static_dfs_steps(graph)
    engine = yield from engine_build_steps(kind, graph, tree)
    return tree, engine


class DfsMaintainer:
    """Single-writer online maintainer over a growing undirected graph."""

    def __init__(self, g: Graph, engine: str = "auto"):
        self.engine_policy = engine
        self.current = g.copy()
        self.base_graph = g.copy()
        kind = self._kind_for(self.base_graph)
        gen = _generation_steps(self.base_graph, kind)
        self.init_work = 0
        while True:
            try:
                self.init_work += next(gen)
            except StopIteration as stop:
                self.base_tree, self.engine = stop.value
                break
        self.pending = UpdateBatch()   # frozen into the in-progress build
        self.buffer = UpdateBatch()    # updates of the current phase
        self._build = None
        self._build_target = None
        self.phase_len = 0
        self.quota = 0
        self.updates_into_build = 0
        self.updates_seen = 0

    def _kind_for(self, g: Graph) -> str:
        if self.engine_policy != "auto":
            return self.engine_policy
        return select_engine_kind(g.n, g.m)

    def _start_build(self):
        # freeze everything not yet in the base as the next build's target
        self.pending.new_vertices += self.buffer.new_vertices
        self.pending.new_edges.extend(self.buffer.new_edges)
        self.buffer = UpdateBatch()
        target = self.pending.apply_to(self.base_graph.copy())
        f = max(1, cost_budget(target.n, target.m))
        self.phase_len = max(1, math.isqrt(f - 1) + 1)
        self.quota = -(-8 * (target.n + 1 + f) // self.phase_len)
        self._build_target = target
        self._build = _generation_steps(target, self._kind_for(target))
        self.updates_into_build = 0

    def insert_edge(self, u, v):
        return self.insert(("E", u, v))

    def insert_vertex(self):
        return self.insert(("V",))

    def insert(self, update):
        """Apply one update and report a DFS tree of the current graph.

        Returns ``(tree, metrics)``.  Invalid updates raise ValueError and
        leave the state untouched.
        """
        if update[0] == "E":
            _, a, b = update
            if a == b:
                raise ValueError(f"self-loop ({a}, {b}) rejected")
            if not (0 <= a < self.current.n and 0 <= b < self.current.n):
                raise ValueError(f"edge ({a}, {b}) out of range")
            self.current.add_edge(a, b)
            self.buffer.new_edges.append((a, b))
        elif update[0] == "V":
            self.current.add_vertex()
            self.buffer.new_vertices += 1
        else:
            raise ValueError(f"unknown update {update!r}")
        self.updates_seen += 1

        if self._build is None:
            self._start_build()
        drained = 0
        swapped = False
        self.updates_into_build += 1
        while drained < self.quota:
            try:
                drained += next(self._build)
            except StopIteration as stop:
                self.base_tree, self.engine = stop.value
                self.base_graph = self._build_target
                self.pending = UpdateBatch()
                self._build = None
                self._build_target = None
                swapped = True
                break

        batch = UpdateBatch(
            self.pending.new_vertices + self.buffer.new_vertices,
            self.pending.new_edges + self.buffer.new_edges)
        tree, rstats = batch_insert(self.base_graph, self.base_tree,
                                    self.engine, batch)
        metrics = UpdateMetrics(
            index=self.updates_seen - 1,
            n=self.current.n,
            m=self.current.m,
            report_work=rstats.work + rstats.engine.charged,
            build_work=drained,
            queries_3b=rstats.engine.queries_3b,
            cascade_work=rstats.engine.cascade_comparisons,
            shortpath_work=rstats.engine.table_lookups,
            swapped=swapped,
        )
        return tree, metrics
