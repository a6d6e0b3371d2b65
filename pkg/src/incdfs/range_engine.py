"""Single-query engine: range-successor index over the edge point set.

Every edge contributes both oriented DFS-position pairs to a 2D point set;
a subtree/path query becomes "leftmost point by x inside a rectangle",
answered by one wavelet-tree descent in O(log n) node visits.
"""

import bisect

from . import _core
from .engines import EngineStats
from .graph import DfsTree, Edge, Graph, is_ancestor


class RangeSuccessorIndex:
    """Sorted point set plus a wavelet tree over the y-values in x-order."""

    __slots__ = ("n", "xs", "ys", "pu", "pv", "wavelet", "build_work")

    def __init__(self, n, xs, ys, pu, pv, wavelet, build_work):
        self.n = n
        self.xs = xs
        self.ys = ys
        self.pu = pu
        self.pv = pv
        self.wavelet = wavelet
        self.build_work = build_work

    def leftmost_in_rect(self, x1, x2, y1, y2):
        """Index of the point with smallest x (ties: smallest y) in the
        inclusive rectangle [x1, x2] x [y1, y2], or -1; plus node visits."""
        l = bisect.bisect_left(self.xs, x1)
        r = bisect.bisect_right(self.xs, x2)
        return self.wavelet.leftmost(l, r, y1, y2)


def build_range_index(g: Graph, t: DfsTree) -> RangeSuccessorIndex:
    gen = build_range_index_steps(g, t)
    try:
        while True:
            next(gen)
    except StopIteration as stop:
        return stop.value


def build_range_index_steps(g: Graph, t: DfsTree):
    """Generator form of :func:`build_range_index` (bounded step sizes)."""
    first = t.first
    pts = []
    work = 0
    for (a, b) in g.edges:
        fa, fb = first[a], first[b]
        pts.append((fa, fb, a, b))
        pts.append((fb, fa, b, a))
        work += 2
        if work >= 1024:
            yield work
            work = 0
    pts.sort()
    m2 = len(pts)
    sort_charge = m2 * max(1, (m2 + 1).bit_length())
    yield work + sort_charge
    build_work = 2 * g.m + sort_charge
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    pu = [p[2] for p in pts]
    pv = [p[3] for p in pts]
    wavelet = _core.kernels.Wavelet(ys, t.n + 1, defer=True)
    more = True
    while more:
        more = wavelet.build_level()
        build_work += m2
        yield m2
    return RangeSuccessorIndex(g.n, xs, ys, pu, pv, wavelet, build_work)


def reduce_query(t: DfsTree, w: int, x: int, y: int):
    """Rewrite Q(T(w), x, y) as Q(T(w), x, par(w)).

    Edges out of the subtree of w land on ancestors of par(w), so the path
    below par(w) never matters.  Validates that the subtree actually hangs
    from path(x, y) and returns the (w, x) pair every engine consumes.
    """
    if not is_ancestor(t, x, y):
        raise ValueError(f"{x} is not an ancestor of {y}")
    p = t.par[w]
    if p < 0 or p == t.root or not (is_ancestor(t, x, p) and is_ancestor(t, p, y)):
        raise ValueError(f"subtree of {w} does not hang from path({x}, {y})")
    if is_ancestor(t, w, y):
        raise ValueError(f"{w} lies on path({x}, {y})")
    return w, x


def range_query(idx: RangeSuccessorIndex, t: DfsTree, w: int, x: int):
    """Q(T(w), x, par(w)) via the rectangle query; returns (answer, visits).

    The rectangle is [first(x), first(w)-1] x [first(w), last(w)]: x-side a
    path vertex, y-side a subtree vertex.  Minimum x = shallowest path
    endpoint; ties by y = smallest subtree DFS position.
    """
    if w >= t.n or x >= t.n or w == x or not is_ancestor(t, x, w):
        raise ValueError(f"{x} is not a proper ancestor of {w}")
    fw = t.first[w]
    i, visits = idx.leftmost_in_rect(t.first[x], fw - 1, fw, t.last[w])
    if i < 0:
        return None, visits
    return Edge(idx.pu[i], idx.pv[i]), visits


class RangeEngine:
    """Adapter answering each hanging subtree with one rectangle query."""

    name = "range"

    def __init__(self, g: Graph, t: DfsTree, index=None):
        self.t = t
        self.index = index if index is not None else build_range_index(g, t)
        self.build_work = self.index.build_work

    @classmethod
    def build_steps(cls, g, t):
        index = yield from build_range_index_steps(g, t)
        return cls(g, t, index)

    def batched_path_query(self, u, v, hanging, path=None):
        st = EngineStats()
        answers = []
        for x in hanging:
            ans, visits = range_query(self.index, self.t, x, u)
            answers.append(ans)
            st.point_queries += 1
            st.range_visits += visits
            st.charged += max(1, visits)
        return answers, st
