"""Batched rebuild: a DFS tree of G + U from the old tree and a query engine.

Inserted vertices are attached under the super root, inserted edges seed the
candidate lists, and a traversal driven by the old tree reroots every path
it enters: climbing from the entry vertex to its highest unvisited ancestor
reverses that path in the new tree, and one engine query per hanging subtree
decides where the subtree is re-entered.  Total non-engine work is
O(n + |U|).
"""

from dataclasses import dataclass, field

from .engines import EngineStats
from .graph import DfsTree, Graph


@dataclass
class UpdateBatch:
    """A set of insertions: appended vertices plus new edges.

    Appended vertices take ids n, n+1, ... in order; edges may reference
    them.  No self-loops; endpoints must be within bounds after the appends.
    """

    new_vertices: int = 0
    new_edges: list = field(default_factory=list)

    @property
    def size(self):
        return self.new_vertices + len(self.new_edges)

    def validate(self, g: Graph):
        if self.new_vertices < 0:
            raise ValueError("negative vertex count")
        n_total = g.n + self.new_vertices
        for (a, b) in self.new_edges:
            if a == b:
                raise ValueError(f"self-loop ({a}, {b}) in update batch")
            if not (0 <= a < n_total and 0 <= b < n_total):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n_total}")

    def apply_to(self, g: Graph):
        """Mutate ``g`` by appending the vertices and edges."""
        self.validate(g)
        for _ in range(self.new_vertices):
            g.add_vertex()
        for (a, b) in self.new_edges:
            g.add_edge(a, b)
        return g


@dataclass
class RebuildStats:
    """Counters for one batch_insert run."""

    work: int = 0                 # non-engine elementary steps
    paths: int = 0                # rerooted path segments
    engine: EngineStats = field(default_factory=EngineStats)


def batch_insert(g: Graph, t: DfsTree, engine, batch: UpdateBatch):
    """Build a DFS tree of g + batch; returns ``(tree, stats)``.

    ``engine`` answers hanging-subtree queries over the old (g, t); the
    result is a valid DFS tree of the updated graph under the deterministic
    candidate ordering (inserted edges first, then query answers, FIFO).
    """
    batch.validate(g)
    stats = RebuildStats()
    n_old = g.n
    n_new = n_old + batch.new_vertices
    root = n_new
    old_root = t.root

    visited = bytearray(n_new + 1)
    visited[root] = 1
    par_star = [-1] * (n_new + 1)
    order_star = [root]
    cand = {}
    for (a, b) in batch.new_edges:
        cand.setdefault(a, []).append(b)
        cand.setdefault(b, []).append(a)
    stats.work += 2 * len(batch.new_edges)

    t_par = t.par
    t_children = t.children

    def enter(v):
        """Climb, mark and query one path; returns the traversal frame."""
        u = v
        while True:
            if u >= n_old:
                p = root
            else:
                p = t_par[u]
                # an old component root conceptually hangs under the new root
                if p == old_root:
                    p = root
            if visited[p]:
                break
            u = p
            stats.work += 1
        rev = []
        x = v
        while x != u:
            rev.append(x)
            x = t_par[x]
        rev.append(u)
        for x in rev:
            visited[x] = 1
        order_star.extend(rev)
        stats.work += 2 * len(rev)
        path = rev[::-1]
        tl = len(path)
        for i in range(tl - 1):
            par_star[path[i]] = path[i + 1]
        hanging = []
        for i in range(tl):
            w = path[i]
            if w >= n_old:
                continue
            nxt = path[i + 1] if i + 1 < tl else -1
            for c in t_children[w]:
                stats.work += 1
                if c != nxt and not visited[c]:
                    hanging.append(c)
        if hanging:
            answers, est = engine.batched_path_query(u, v, hanging, path=path)
            stats.engine.add(est)
            for ans in answers:
                if ans is not None:
                    cand.setdefault(ans.hi, []).append(ans.lo)
                    stats.work += 1
        stats.paths += 1
        return [path, 0, 0]

    def drive(x0):
        frames = [enter(x0)]
        while frames:
            fr = frames[-1]
            path, i, j = fr
            pushed = False
            while i < len(path):
                lst = cand.get(path[i])
                if lst is None or j >= len(lst):
                    i += 1
                    j = 0
                    continue
                x = lst[j]
                j += 1
                stats.work += 1
                if not visited[x]:
                    fr[1] = i
                    fr[2] = j
                    par_star[x] = path[i]
                    frames.append(enter(x))
                    pushed = True
                    break
            if not pushed:
                frames.pop()

    # super-root pass: old component roots in ascending id, then inserted
    # vertices in ascending id
    for x in list(t_children[old_root]) + list(range(n_old, n_new)):
        stats.work += 1
        if not visited[x]:
            par_star[x] = root
            drive(x)

    size = n_new + 1
    first = [0] * size
    last = [0] * size
    depth = [0] * size
    for pos, x in enumerate(order_star):
        first[x] = pos
    for i in range(size - 1, -1, -1):
        v = order_star[i]
        if last[v] < first[v]:
            last[v] = first[v]
        p = par_star[v]
        if p >= 0 and last[p] < last[v]:
            last[p] = last[v]
    for x in order_star[1:]:
        depth[x] = depth[par_star[x]] + 1
    stats.work += 3 * size
    tree = DfsTree(n_new, par_star, depth, order_star, first, last)
    return tree, stats
