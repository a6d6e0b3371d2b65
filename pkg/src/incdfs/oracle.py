"""Brute-force reference implementations and DFS-tree validity checking.

Everything here is deliberately simple and slow (O(m) per query); it is the
ground truth the query engines and the rebuilder are tested against.
"""

from . import _core
from .graph import DfsTree, Edge, Graph, is_ancestor


def brute_query(g: Graph, t: DfsTree, w: int, u: int, v: int):
    """Edge joining the highest vertex of path(u, v) to the subtree of w.

    Scans every edge.  Among edges whose path endpoint has minimum depth the
    one whose subtree endpoint has the smallest DFS position wins.  Returns
    an :class:`Edge` or None.
    """
    _check_query(t, w, u, v)
    eu, ev = g.edge_arrays()
    scanner = _core.kernels.BruteScanner(eu, ev, t.first, t.last, t.depth)
    hi, lo = scanner.query(t.depth[u], t.first[v], w)
    if hi < 0:
        return None
    return Edge(hi, lo)


def _check_query(t, w, u, v):
    if w >= t.n or u >= t.n or v >= t.n:
        raise ValueError("query vertices must be real")
    if not is_ancestor(t, u, v):
        raise ValueError(f"{u} is not an ancestor of {v}")
    p = t.par[w]
    if p < 0 or p == t.root or not is_ancestor(t, u, p):
        raise ValueError(f"subtree of {w} does not hang below {u}")
    if is_ancestor(t, u, w) and is_ancestor(t, w, v):
        raise ValueError(f"{w} lies on path({u}, {v})")


def sweep_all_answers(g: Graph, t: DfsTree):
    """Answers to every query with the path lower end fixed at par(w).

    Independent test oracle: for each real vertex w it walks the ancestors of
    w upward, scanning their adjacency lists for subtree membership — no
    prefix sums, no witness arrays, no shared code with the engines.  Returns
    ``{w: [answer at ancestor depth 1, 2, ...]}`` (entries are Edge or None).
    """
    out = {}
    first, last, depth, par = t.first, t.last, t.depth, t.par
    for w in range(t.n):
        rl = depth[w] - 1
        if rl <= 0:
            out[w] = []
            continue
        fw, lw = first[w], last[w]
        row = [None] * rl
        u = par[w]
        carry = None
        while u != t.root:
            best = -1
            for z in g.adj[u]:
                fz = first[z]
                if fw <= fz <= lw and (best == -1 or fz < best):
                    best = fz
            if best != -1:
                carry = Edge(u, t.order[best])
            row[depth[u] - 1] = carry
            u = par[u]
        out[w] = row
    return out


def validate_dfs_tree(g: Graph, t: DfsTree) -> bool:
    """True iff ``t`` is a valid DFS tree of ``g``."""
    return find_violation(g, t) is None


def find_violation(g: Graph, t: DfsTree):
    """None when valid, otherwise a human-readable description."""
    if t.n != g.n:
        return f"tree covers {t.n} vertices, graph has {g.n}"
    ok, order, first, last, _depth = _core.kernels.tree_arrays(list(t.par), t.n)
    if not ok:
        return "parent array is not a tree rooted at the super root"
    for v in range(g.n):
        p = t.par[v]
        if p != t.root and not g.has_edge(p, v):
            return f"tree edge ({p}, {v}) is not a graph edge"
    eu, ev = g.edge_arrays()
    bad = _core.kernels.edges_anc_desc(eu, ev, first, last)
    if bad >= 0:
        return f"edge ({eu[bad]}, {ev[bad]}) joins unrelated subtrees"
    return None


def reference_batch_insert(g: Graph, t: DfsTree, batch):
    """Rebuild driven by the brute-force query oracle (integration oracle)."""
    from .engines import BruteEngine
    from .rebuild import batch_insert

    tree, _stats = batch_insert(g, t, BruteEngine(g, t), batch)
    return tree
