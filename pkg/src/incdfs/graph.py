"""Undirected graph and DFS-tree representations.

Real vertices carry dense ids 0..n-1; every tree stores one extra virtual
super root at index n.  The super root has conceptual edges to every vertex
but those are never materialized in adjacency lists: traversal code handles
the root specially, so query structures only ever index real edges.
"""

from typing import NamedTuple

from . import _core


class Edge(NamedTuple):
    """An edge attached to a DFS tree: ``hi`` is the endpoint closer to the root."""

    hi: int
    lo: int


class Graph:
    """Growable undirected multigraph over dense vertex ids.

    Self-loops are rejected; parallel edges are kept.  ``edges`` lists every
    undirected edge exactly once, in insertion order.
    """

    __slots__ = ("n", "adj", "edges", "_pairs")

    def __init__(self, n=0, edges=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.adj = [[] for _ in range(n)]
        self.edges = []
        self._pairs = set()
        for u, v in edges or ():
            self.add_edge(u, v)

    @property
    def m(self):
        return len(self.edges)

    def add_vertex(self):
        """Append a new isolated vertex and return its id."""
        self.adj.append([])
        self.n += 1
        return self.n - 1

    def add_edge(self, u, v):
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) rejected")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
        self.adj[u].append(v)
        self.adj[v].append(u)
        self.edges.append((u, v))
        self._pairs.add((u, v) if u < v else (v, u))

    def has_edge(self, u, v):
        return ((u, v) if u < v else (v, u)) in self._pairs

    def copy(self):
        g = Graph.__new__(Graph)
        g.n = self.n
        g.adj = [list(a) for a in self.adj]
        g.edges = list(self.edges)
        g._pairs = set(self._pairs)
        return g

    def edge_arrays(self):
        """Edge endpoints as two parallel lists (kernel input)."""
        eu = [e[0] for e in self.edges]
        ev = [e[1] for e in self.edges]
        return eu, ev


class DfsTree:
    """Rooted DFS tree over a graph plus the virtual super root.

    Arrays have length n+1 with the root at index n: ``par`` (root parent is
    -1), ``depth`` (root 0), ``order`` (preorder, root at position 0) and the
    subtree interval ``first``/``last`` per vertex.
    """

    __slots__ = ("n", "root", "par", "depth", "order", "first", "last",
                 "_children", "_lift")

    def __init__(self, n, par, depth, order, first, last, children=None):
        self.n = n
        self.root = n
        self.par = par
        self.depth = depth
        self.order = order
        self.first = first
        self.last = last
        self._children = children
        self._lift = None

    @classmethod
    def from_parents(cls, par):
        """Rebuild a tree from a parent array (length n+1, par[n] == -1).

        Children are ordered by ascending id.  Raises ValueError on malformed
        input (bad parents, cycles).
        """
        n = len(par) - 1
        ok, order, first, last, depth = _core.kernels.tree_arrays(list(par), n)
        if not ok:
            raise ValueError("malformed parent array")
        return cls(n, list(par), list(depth), list(order), list(first), list(last))

    @property
    def children(self):
        if self._children is None:
            ch = [[] for _ in range(self.n + 1)]
            for v in self.order[1:]:
                ch[self.par[v]].append(v)
            self._children = ch
        return self._children

    def subtree_size(self, v):
        return self.last[v] - self.first[v] + 1

    def lift_table(self):
        """Flattened binary-lifting table (lazy; jumps clamp at the root)."""
        if self._lift is None:
            size = self.n + 1
            nlev = max(1, max(self.depth).bit_length())
            lift = [0] * (nlev * size)
            for v in range(size):
                p = self.par[v]
                lift[v] = p if p >= 0 else self.root
            for j in range(1, nlev):
                prev = (j - 1) * size
                cur = j * size
                for v in range(size):
                    lift[cur + v] = lift[prev + lift[prev + v]]
            self._lift = (lift, nlev)
        return self._lift


def is_ancestor(t: DfsTree, a: int, b: int) -> bool:
    """True iff a == b or a is a proper ancestor of b."""
    return t.first[a] <= t.first[b] and t.last[b] <= t.last[a]


def level_ancestor(t: DfsTree, v: int, hops: int) -> int:
    """The ancestor exactly ``hops`` edges above ``v``."""
    if hops < 0 or hops > t.depth[v]:
        raise ValueError(f"hops={hops} out of range for depth {t.depth[v]}")
    lift, nlev = t.lift_table()
    size = t.n + 1
    j = 0
    while hops:
        if hops & 1:
            v = lift[j * size + v]
        hops >>= 1
        j += 1
    return v


def path_vertices(t: DfsTree, u: int, v: int) -> list:
    """Tree path from ancestor ``u`` down to ``v`` inclusive."""
    if not is_ancestor(t, u, v):
        raise ValueError(f"{u} is not an ancestor of {v}")
    out = []
    x = v
    while x != u:
        out.append(x)
        x = t.par[x]
    out.append(u)
    out.reverse()
    return out


def static_dfs(g: Graph) -> DfsTree:
    """Textbook DFS over the whole graph.

    Components are entered in ascending order of their smallest vertex id and
    neighbors are explored in ascending id, so the result is reproducible.
    """
    gen = static_dfs_steps(g)
    try:
        while True:
            next(gen)
    except StopIteration as stop:
        return stop.value


def static_dfs_steps(g: Graph):
    """Generator form of :func:`static_dfs`, yielding work-unit chunks.

    Used by the de-amortized maintainer to spread tree construction over many
    updates; ``static_dfs`` simply drains it.
    """
    n = g.n
    root = n
    par = [-1] * (n + 1)
    depth = [0] * (n + 1)
    order = [root]
    first = [0] * (n + 1)
    last = [0] * (n + 1)
    adj_sorted = []
    pending = 0
    for a in g.adj:
        adj_sorted.append(sorted(a))
        pending += len(a) + 1
        if pending >= 512:
            yield pending
            pending = 0
    visited = bytearray(n + 1)
    visited[root] = 1
    for seed in range(n):
        if visited[seed]:
            continue
        par[seed] = root
        depth[seed] = 1
        visited[seed] = 1
        stack = [(seed, 0)]
        first[seed] = len(order)
        order.append(seed)
        while stack:
            v, i = stack[-1]
            nbrs = adj_sorted[v]
            advanced = False
            while i < len(nbrs):
                w = nbrs[i]
                i += 1
                pending += 1
                if not visited[w]:
                    visited[w] = 1
                    par[w] = v
                    depth[w] = depth[v] + 1
                    first[w] = len(order)
                    order.append(w)
                    stack[-1] = (v, i)
                    stack.append((w, 0))
                    advanced = True
                    break
            else:
                stack.pop()
            if advanced:
                continue
            if pending >= 512:
                yield pending
                pending = 0
    if pending:
        yield pending
    for i in range(n, -1, -1):
        v = order[i]
        last[v] = max(last[v], first[v])
        p = par[v]
        if p >= 0 and last[p] < last[v]:
            last[p] = last[v]
    yield n + 1
    return DfsTree(n, par, depth, order, first, last)
