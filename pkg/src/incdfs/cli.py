"""Command-line tool: batch rebuilds, streamed maintenance, generators,
validity checking.

File formats (line-oriented text):

* graph file — header ``n m`` then m lines ``u v`` (0-based ids, no
  self-loops);
* update file — one update per line, ``E u v`` (edge) or ``V`` (append a
  vertex; it takes the next free id);
* tree output — n lines ``v p`` with p = -1 when the parent is the super
  root.

Exit codes: 0 success, 1 failed check, 2 parse error, 3 invalid update,
4 stream validation failure.
"""

import argparse
import math
import random
import sys

from .engines import ENGINE_NAMES, make_engine
from .graph import DfsTree, Graph, static_dfs
from .maintain import DfsMaintainer
from .oracle import find_violation
from .rebuild import UpdateBatch, batch_insert

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1

METRICS_COLUMNS = ("schema", "update", "n", "m", "report_work", "build_work",
                   "queries_3b", "cascade_work", "shortpath_work")
METRICS_SCHEMA = 1


class ParseError(Exception):
    def __init__(self, lineno, msg):
        super().__init__(f"parse error at line {lineno}: {msg}")
        self.lineno = lineno


def tree_digest(tree: DfsTree) -> str:
    """FNV-1a 64 fold over the parent array.

    Parents are taken in vertex order 0..n-1, super-root parent encoded as
    -1, each folded as its 8-byte little-endian two's complement.
    """
    h = _FNV_OFFSET
    for v in range(tree.n):
        p = tree.par[v]
        if p == tree.root:
            p = -1
        for byte in (p & _MASK64).to_bytes(8, "little"):
            h = ((h ^ byte) * _FNV_PRIME) & _MASK64
    return f"{h:016x}"


def parse_graph(lines) -> Graph:
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines)]
    rows = [(no, ln) for no, ln in rows if ln]
    if not rows:
        raise ParseError(1, "empty graph file")
    no, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(no, f"expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(no, f"non-integer header {header!r}") from None
    if n < 0 or m < 0:
        raise ParseError(no, "negative counts in header")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(body[-1][0] if body else no,
                         f"header declares {m} edges, file has {len(body)}")
    g = Graph(n)
    for no, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(no, f"expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(no, f"non-integer endpoints {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(no, f"endpoint out of range in {ln!r}")
        if u == v:
            raise ParseError(no, f"self-loop {ln!r}")
        g.add_edge(u, v)
    return g


def parse_updates(lines) -> list:
    out = []
    for i, ln in enumerate(lines):
        s = ln.strip()
        if not s:
            continue
        parts = s.split()
        if parts[0] == "V" and len(parts) == 1:
            out.append(("V",))
        elif parts[0] == "E" and len(parts) == 3:
            try:
                out.append(("E", int(parts[1]), int(parts[2])))
            except ValueError:
                raise ParseError(i + 1, f"non-integer endpoints {s!r}") from None
        else:
            raise ParseError(i + 1, f"expected 'E u v' or 'V', got {s!r}")
    return out


def parse_tree(lines, n) -> list:
    """Parent array (length n+1, root at n) from a tree output file."""
    par = [None] * n
    count = 0
    for i, ln in enumerate(lines):
        s = ln.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise ParseError(i + 1, f"expected 'v p', got {s!r}")
        try:
            v, p = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(i + 1, f"non-integer entries {s!r}") from None
        if not 0 <= v < n:
            raise ParseError(i + 1, f"vertex {v} out of range")
        if par[v] is not None:
            raise ParseError(i + 1, f"duplicate vertex {v}")
        if not (p == -1 or 0 <= p < n):
            raise ParseError(i + 1, f"parent {p} out of range")
        par[v] = n if p == -1 else p
        count += 1
    if count != n:
        raise ParseError(len(lines) or 1, f"tree file covers {count} of {n} vertices")
    return par + [-1]


def updates_to_batch(updates) -> UpdateBatch:
    batch = UpdateBatch()
    for up in updates:
        if up[0] == "V":
            batch.new_vertices += 1
        else:
            batch.new_edges.append((up[1], up[2]))
    return batch


def emit_parents(tree, out):
    for v in range(tree.n):
        p = tree.par[v]
        out.write(f"{v} {-1 if p == tree.root else p}\n")


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.readlines()


def cmd_batch(args, out=sys.stdout, err=sys.stderr):
    try:
        g = parse_graph(_read(args.graph))
        updates = parse_updates(_read(args.updates))
    except ParseError as e:
        print(e, file=err)
        return 2
    batch = updates_to_batch(updates)
    try:
        batch.validate(g)
    except ValueError as e:
        print(f"invalid update: {e}", file=err)
        return 3
    t = static_dfs(g)
    engine = make_engine(args.engine, g, t)
    tree, _stats = batch_insert(g, t, engine, batch)
    if args.emit == "parents":
        emit_parents(tree, out)
    else:
        out.write(tree_digest(tree) + "\n")
    return 0


def cmd_stream(args, out=sys.stdout, err=sys.stderr):
    try:
        g = parse_graph(_read(args.graph))
        updates = parse_updates(_read(args.updates))
    except ParseError as e:
        print(e, file=err)
        return 2
    maintainer = DfsMaintainer(g, engine=args.engine)
    metrics_rows = []
    code = 0
    for i, up in enumerate(updates):
        try:
            tree, metrics = maintainer.insert(up)
        except ValueError as e:
            print(f"invalid update {i}: {e}", file=err)
            code = 3
            break
        out.write(tree_digest(tree) + "\n")
        metrics_rows.append((METRICS_SCHEMA, metrics.index, metrics.n,
                             metrics.m, metrics.report_work,
                             metrics.build_work, metrics.queries_3b,
                             metrics.cascade_work, metrics.shortpath_work))
        if args.check:
            bad = find_violation(maintainer.current, tree)
            if bad is not None:
                print(f"validation failed at update {i}: {bad}", file=err)
                code = 4
                break
    if args.metrics:
        with open(args.metrics, "w", encoding="utf-8") as fh:
            fh.write(",".join(METRICS_COLUMNS) + "\n")
            for row in metrics_rows:
                fh.write(",".join(str(x) for x in row) + "\n")
    return code


def cmd_gen(args, out=sys.stdout, err=sys.stderr):
    n = args.n
    if n < 2:
        print("N must be at least 2", file=err)
        return 2
    lines = []
    if args.gen == "chain":
        edges = [(i, i + 1) for i in range(n - 1)]
        updates = [f"E 0 {n - 1}"]
    elif args.gen == "broom":
        if n < 4:
            print("broom needs N >= 4", file=err)
            return 2
        half = n // 2
        edges = [(i, i + 1) for i in range(half - 1)]
        edges += [(half - 1, leaf) for leaf in range(half, n)]
        edges += [(leaf, 0) for leaf in range(half, n)]
        updates = [f"E 0 {half - 1}"]
    elif args.gen == "random":
        rng = random.Random(args.seed)
        target = round(args.p * n * (n - 1) / 2)
        chosen = set()
        while len(chosen) < target:
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            chosen.add((u, v) if u < v else (v, u))
        edges = sorted(chosen)
        updates = []
        count = n
        for _ in range(math.isqrt(n - 1) + 1):
            if rng.random() < 0.1:
                updates.append("V")
                count += 1
            else:
                while True:
                    u = rng.randrange(count)
                    v = rng.randrange(count)
                    if u != v:
                        break
                updates.append(f"E {u} {v}")
    else:
        print(f"unknown generator {args.gen}", file=err)
        return 2
    lines.append(f"{n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    lines.extend(updates)
    out.write("\n".join(lines) + "\n")
    return 0


def cmd_check(args, out=sys.stdout, err=sys.stderr):
    try:
        g = parse_graph(_read(args.graph))
        par = parse_tree(_read(args.tree), g.n)
    except ParseError as e:
        print(e, file=err)
        return 2
    try:
        tree = DfsTree.from_parents(par)
    except ValueError as e:
        print(f"invalid tree: {e}", file=err)
        return 1
    bad = find_violation(g, tree)
    if bad is not None:
        print(f"invalid tree: {bad}", file=err)
        return 1
    out.write("ok\n")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="incdfs",
                                description="incremental DFS tree maintenance")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("batch", help="rebuild once over a batch of updates")
    b.add_argument("--graph", required=True)
    b.add_argument("--updates", required=True)
    b.add_argument("--engine", choices=ENGINE_NAMES, default="hybrid")
    b.add_argument("--emit", choices=("parents", "hash"), default="parents")
    b.set_defaults(func=cmd_batch)

    s = sub.add_parser("stream", help="maintain the tree update by update")
    s.add_argument("--graph", required=True)
    s.add_argument("--updates", required=True)
    s.add_argument("--engine", choices=("auto",) + ENGINE_NAMES, default="auto")
    s.add_argument("--check", action="store_true")
    s.add_argument("--metrics", default=None, help="write per-update counters CSV")
    s.set_defaults(func=cmd_stream)

    gn = sub.add_parser("gen", help="emit a graph file followed by an update file")
    gn.add_argument("--gen", choices=("chain", "broom", "random"), required=True)
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("--p", type=float, default=0.1, help="random edge density")
    gn.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="validate a tree file against a graph file")
    c.add_argument("--graph", required=True)
    c.add_argument("--tree", required=True)
    c.set_defaults(func=cmd_check)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
