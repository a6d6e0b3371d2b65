"""Query-engine adapters behind one batched interface.

The rebuilder always hands an engine a whole tree path plus every subtree
root hanging from it; point engines answer with a loop of single queries,
the hybrid engine amortizes across the batch.  Every engine uses the same
answer convention: minimum-depth path endpoint, ties broken toward the
smallest DFS position of the subtree endpoint, so identical inputs yield
identical rebuilt trees regardless of the engine.
"""

from dataclasses import dataclass, field

from . import _core
from .graph import DfsTree, Edge, Graph


@dataclass
class EngineStats:
    """Per-call instrumentation, merged across calls by the rebuilder.

    ``charged`` accumulates the contractual cost of each operation (1 per
    table lookup, group size + log for a cascade query, log n per range
    query, edge count per brute scan); the raw counters sit alongside so
    tests can check each structure against its own bound.
    """

    point_queries: int = 0
    table_lookups: int = 0
    cascade_queries: int = 0
    cascade_comparisons: int = 0
    agg_steps: int = 0
    queries_3b: int = 0
    range_visits: int = 0
    table_misses: int = 0
    charged: int = 0
    threeb_roots: list = field(default_factory=list)

    def add(self, other):
        self.point_queries += other.point_queries
        self.table_lookups += other.table_lookups
        self.cascade_queries += other.cascade_queries
        self.cascade_comparisons += other.cascade_comparisons
        self.agg_steps += other.agg_steps
        self.queries_3b += other.queries_3b
        self.range_visits += other.range_visits
        self.table_misses += other.table_misses
        self.charged += other.charged
        self.threeb_roots.extend(other.threeb_roots)


class BruteEngine:
    """Adapter over the O(m)-per-query reference scan."""

    name = "brute"

    def __init__(self, g: Graph, t: DfsTree):
        eu, ev = g.edge_arrays()
        self._scanner = _core.kernels.BruteScanner(eu, ev, t.first, t.last, t.depth)
        self.t = t
        self.m = g.m
        self.build_work = g.m

    @classmethod
    def build_steps(cls, g, t):
        yield g.m
        return cls(g, t)

    def batched_path_query(self, u, v, hanging, path=None):
        st = EngineStats()
        du = self.t.depth[u]
        fv = self.t.first[v]
        answers = []
        for x in hanging:
            hi, lo = self._scanner.query(du, fv, x)
            answers.append(Edge(hi, lo) if hi >= 0 else None)
            st.point_queries += 1
            st.charged += self.m
        return answers, st


def make_engine(kind: str, g: Graph, t: DfsTree):
    """Build the named engine over (g, t)."""
    from .dense_engine import DenseEngine
    from .hybrid_engine import HybridEngine
    from .range_engine import RangeEngine

    cls = {
        "brute": BruteEngine,
        "dense": DenseEngine,
        "range": RangeEngine,
        "hybrid": HybridEngine,
    }.get(kind)
    if cls is None:
        raise ValueError(f"unknown engine {kind!r}")
    return cls(g, t)


def engine_build_steps(kind: str, g: Graph, t: DfsTree):
    """Generator form of :func:`make_engine` for resumable background builds."""
    from .dense_engine import DenseEngine
    from .hybrid_engine import HybridEngine
    from .range_engine import RangeEngine

    cls = {
        "brute": BruteEngine,
        "dense": DenseEngine,
        "range": RangeEngine,
        "hybrid": HybridEngine,
    }.get(kind)
    if cls is None:
        raise ValueError(f"unknown engine {kind!r}")
    return cls.build_steps(g, t)


ENGINE_NAMES = ("brute", "dense", "range", "hybrid")
