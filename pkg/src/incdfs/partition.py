"""Separator sets for rooted trees.

Removing the computed marked set splits the tree into components of at most
``k`` vertices while marking at most ``floor(N / (k+1))`` vertices: each mark
swallows more than k not-yet-consumed descendants, so the bound is exact for
the greedy construction below.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Partition:
    """Result of :func:`compute_partition`.

    ``comp_of[v]`` is -1 for marked vertices, otherwise a component label;
    labels are assigned in preorder and are deterministic.
    """

    k: int
    marked: frozenset
    comp_of: list

    @property
    def component_sizes(self):
        sizes = {}
        for c in self.comp_of:
            if c >= 0:
                sizes[c] = sizes.get(c, 0) + 1
        return sizes


def compute_partition(tree, k: int) -> Partition:
    """Greedy bottom-up separator computation.

    ``tree`` is either a parent array (par[root] == -1, one root) or any
    object exposing ``.par``.  Accumulated unmarked-subtree sizes are carried
    upward; a vertex whose accumulation exceeds k is marked and resets it.
    """
    par = tree.par if hasattr(tree, "par") else list(tree)
    size = len(par)
    if not 2 <= k <= size:
        raise ValueError(f"k={k} out of range [2, {size}]")

    roots = [v for v in range(size) if par[v] < 0]
    if len(roots) != 1:
        raise ValueError("parent array must have exactly one root")
    root = roots[0]

    children = [[] for _ in range(size)]
    for v in range(size):
        if v != root:
            children[par[v]].append(v)
    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(children[v])

    weight = [1] * size
    marked = []
    for v in reversed(order):
        if weight[v] > k:
            marked.append(v)
            weight[v] = 0
            continue
        p = par[v]
        if p >= 0:
            weight[p] += weight[v]

    marked_set = frozenset(marked)
    comp_of = [-2] * size
    next_label = 0
    for v in order:
        if v in marked_set:
            comp_of[v] = -1
            continue
        p = par[v]
        if p >= 0 and comp_of[p] >= 0:
            comp_of[v] = comp_of[p]
        else:
            comp_of[v] = next_label
            next_label += 1
    return Partition(k=k, marked=marked_set, comp_of=comp_of)
