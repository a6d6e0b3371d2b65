"""Pure-Python implementations of the hot kernels.

The compiled extension (``incdfs._core._ckern``) mirrors every function and
class in this module, including the instrumentation counters, so the two
backends are interchangeable.  Arrays follow the package conventions: a tree
over ``n`` real vertices has one extra root sentinel at index ``n``, DFS
positions run 0..n with the root at position 0.

Builders (``Wavelet`` with ``defer=True``, ``DenseBuilder``,
``ShortpathBuilder``) expose bounded-size construction steps so the
de-amortized maintainer can spread preprocessing across updates.
"""

BACKEND_NAME = "pure"


def tree_arrays(par, n):
    """Recompute preorder arrays from a parent array.

    ``par`` has length n+1 with ``par[n] == -1`` (index n is the root).
    Children are visited in ascending id order.  Returns
    ``(ok, order, first, last, depth)``; ``ok`` is False when the parent
    array is malformed (bad indices, cycles, unreachable vertices).
    """
    root = n
    size = n + 1
    if len(par) != size or par[root] != -1:
        return False, [], [], [], []
    cnt = [0] * size
    for v in range(n):
        p = par[v]
        if p < 0 or p > n:
            return False, [], [], [], []
        cnt[p] += 1
    # CSR over children; filling in ascending v keeps each child list sorted
    off = [0] * (size + 1)
    for v in range(size):
        off[v + 1] = off[v] + cnt[v]
    pos = list(off[:size])
    child = [0] * n
    for v in range(n):
        p = par[v]
        child[pos[p]] = v
        pos[p] += 1

    order = []
    first = [0] * size
    last = [0] * size
    depth = [0] * size
    stack = [root]
    seen = 0
    while stack:
        v = stack.pop()
        first[v] = len(order)
        order.append(v)
        seen += 1
        if v != root:
            depth[v] = depth[par[v]] + 1
        for i in range(off[v + 1] - 1, off[v] - 1, -1):
            stack.append(child[i])
    if seen != size:
        return False, [], [], [], []
    for i in range(size - 1, -1, -1):
        v = order[i]
        last[v] = max(last[v], first[v])
        p = par[v]
        if p >= 0 and last[p] < last[v]:
            last[p] = last[v]
    return True, order, first, last, depth


def edges_anc_desc(eu, ev, first, last):
    """Index of the first edge not joining an ancestor-descendant pair, or -1."""
    for i in range(len(eu)):
        a = eu[i]
        b = ev[i]
        fa, fb = first[a], first[b]
        if fa <= fb:
            if last[a] < fb:
                return i
        else:
            if last[b] < fa:
                return i
    return -1


class BruteScanner:
    """Full-edge-list scan answering one subtree/path query in O(m).

    ``query(du, fv, w)`` returns the edge (hi, lo) joining the shallowest
    vertex of the queried path (ancestors of the vertex at DFS position
    ``fv`` whose depth is >= ``du``, excluding anything inside the subtree
    of ``w``) to a vertex inside the subtree of ``w``.  Ties on the path
    endpoint are broken toward the smallest DFS position of the subtree
    endpoint.  Returns (-1, -1) when no such edge exists.
    """

    def __init__(self, eu, ev, first, last, depth):
        self.eu = eu
        self.ev = ev
        self.first = first
        self.last = last
        self.depth = depth

    def query(self, du, fv, w):
        eu, ev = self.eu, self.ev
        first, last, depth = self.first, self.last, self.depth
        fw = first[w]
        lw = last[w]
        best_d = -1
        best_f = -1
        hi = -1
        lo = -1
        for i in range(len(eu)):
            a = eu[i]
            b = ev[i]
            for _ in range(2):
                a, b = b, a
                fa = first[a]
                # a on the path: ancestor of the lower path end, deep enough,
                # and outside the queried subtree
                if fa > fv or last[a] < fv:
                    continue
                da = depth[a]
                if da < du or (fw <= fa <= lw):
                    continue
                fb = first[b]
                if fb < fw or fb > lw:
                    continue
                if best_d == -1 or da < best_d or (da == best_d and fb < best_f):
                    best_d = da
                    best_f = fb
                    hi = a
                    lo = b
        return hi, lo


class Wavelet:
    """Wavelet tree over an integer sequence supporting leftmost-in-range.

    ``leftmost(l, r, a, b)`` returns the smallest index i in [l, r) with
    ``a <= values[i] <= b`` (or -1), plus the number of node descents made.
    Values must lie in [0, sigma).  With ``defer=True`` construction is
    driven by ``build_level()`` (one level per call, O(len) work each).
    """

    def __init__(self, values, sigma, defer=False):
        self.n = len(values)
        self.sigma = max(1, sigma)
        self.nlevels = (self.sigma - 1).bit_length()
        self.levels = []
        self._seq = list(values)
        self._nodes = [(0, self.n, 0, self.sigma)]
        if not defer:
            while self.build_level():
                pass

    def build_level(self):
        """Build one level; returns True while more levels remain."""
        d = len(self.levels)
        if d >= self.nlevels:
            self._nodes = None
            return False
        n = self.n
        seq = self._seq
        pref = [0] * (n + 1)
        nxt = [0] * n
        newnodes = []
        run = 0
        for (s, e, lo, hi) in self._nodes:
            if hi - lo <= 1:
                for i in range(s, e):
                    run += 1
                    pref[i + 1] = run
                    nxt[i] = seq[i]
                newnodes.append((s, e, lo, hi))
                continue
            mid = (lo + hi) >> 1
            z = 0
            for i in range(s, e):
                if seq[i] < mid:
                    z += 1
            lp = s
            rp = s + z
            for i in range(s, e):
                x = seq[i]
                if x < mid:
                    run += 1
                    nxt[lp] = x
                    lp += 1
                else:
                    nxt[rp] = x
                    rp += 1
                pref[i + 1] = run
            newnodes.append((s, s + z, lo, mid))
            newnodes.append((s + z, e, mid, hi))
        self.levels.append(pref)
        self._seq = nxt
        self._nodes = newnodes
        if len(self.levels) >= self.nlevels:
            self._seq = None
            self._nodes = None
            return False
        return True

    def reconstruct(self):
        """Decode the original sequence (testing aid)."""
        out = []
        for i in range(self.n):
            d = 0
            s, e, lo, hi = 0, self.n, 0, self.sigma
            p = i
            while d < self.nlevels and hi - lo > 1:
                pref = self.levels[d]
                z = pref[e] - pref[s]
                zb = pref[p + 1] - pref[s]
                if pref[p + 1] - pref[p] == 1:
                    p = s + zb - 1
                    e = s + z
                    hi = (lo + hi) >> 1
                else:
                    p = s + z + ((p - s) - zb)
                    s = s + z
                    lo = (lo + hi) >> 1
                d += 1
            out.append(lo)
        return out

    def leftmost(self, l, r, a, b):
        if l < 0:
            l = 0
        if r > self.n:
            r = self.n
        self._visits = 0
        if l >= r or b < a:
            return -1, 0
        if self.nlevels == 0:
            res = l if a <= 0 <= b else -1
            return res, 0
        res = self._go(0, 0, self.n, 0, self.sigma, l, r, a, b, True)
        return res, self._visits

    def _go(self, d, s, e, lo, hi, l, r, a, b, is_root):
        if not is_root:
            self._visits += 1
        if l >= r or a >= hi or b < lo:
            return -1
        if (a <= lo and hi - 1 <= b) or hi - lo == 1:
            return l
        pref = self.levels[d]
        ps = pref[s]
        z = pref[e] - ps
        lz = pref[l] - ps
        rz = pref[r] - ps
        mid = (lo + hi) >> 1
        best = -1
        il = self._go(d + 1, s, s + z, lo, mid, s + lz, s + rz, a, b, False)
        if il >= 0:
            best = self._select0(pref, s, e, il - s + 1)
            # right-child candidates past `best` cannot win
            r = best
            rz = pref[r] - ps
        ir = self._go(d + 1, s + z, e, mid, hi,
                      s + z + (l - s - lz), s + z + (r - s - rz), a, b, False)
        if ir >= 0:
            cr = self._select1(pref, s, e, ir - (s + z) + 1)
            if best == -1 or cr < best:
                best = cr
        return best

    @staticmethod
    def _select0(pref, s, e, cnt):
        # smallest p in [s, e) with cnt zeros in [s, p+1)
        base = pref[s]
        lo, hi = s + 1, e
        while lo < hi:
            mid = (lo + hi) >> 1
            if pref[mid] - base >= cnt:
                hi = mid
            else:
                lo = mid + 1
        return lo - 1

    @staticmethod
    def _select1(pref, s, e, cnt):
        base = pref[s]
        lo, hi = s + 1, e
        while lo < hi:
            mid = (lo + hi) >> 1
            if (mid - s) - (pref[mid] - base) >= cnt:
                hi = mid
            else:
                lo = mid + 1
        return lo - 1


class DenseBuilder:
    """Per-(subtree, ancestor-depth) answer table, built in O(n^2).

    Drive with ``prefix_step(u)`` for u in 0..n-1 (adjacency bit prefix sums
    and next-neighbor-position witnesses, O(n) each), then ``rows_step(w)``
    for w in 0..n-1 (the upward walk, O(depth(w)) each).  ``result()``
    returns ``(off, hi_flat, lo_flat, work)``: answers for w sit at
    ``off[w] + d - 1`` for ancestor depth d; -1 encodes Null.
    """

    def __init__(self, n, eu, ev, first, last, depth, par, order):
        self.n = n
        self.first = first
        self.last = last
        self.depth = depth
        self.par = par
        self.order = order
        self.width = n + 2
        self.pref = [0] * (n * self.width)
        self.wit = [0] * (n * self.width)
        self.work = 0
        w = self.width
        for i in range(len(eu)):
            a, b = eu[i], ev[i]
            if first[a] > first[b]:
                a, b = b, a
            self.pref[a * w + first[b] + 1] += 1
            self.work += 1
        off = [0] * (n + 1)
        for v in range(n):
            off[v + 1] = off[v] + max(0, depth[v] - 1)
        self.off = off
        self.hi_flat = [-1] * off[n]
        self.lo_flat = [-1] * off[n]

    def prefix_step(self, u):
        n = self.n
        base = u * self.width
        pref = self.pref
        wit = self.wit
        run = 0
        for i in range(n + 1):
            run += pref[base + i + 1]
            pref[base + i + 1] = run
        nxt = n + 1
        for i in range(n, -1, -1):
            if pref[base + i + 1] - pref[base + i] > 0:
                nxt = i
            wit[base + i] = nxt
        self.work += 2 * (n + 1)
        return 2 * (n + 1)

    def rows_step(self, w):
        rl = self.depth[w] - 1
        if rl <= 0:
            return 1
        pref = self.pref
        wit = self.wit
        width = self.width
        fw = self.first[w]
        lw = self.last[w]
        ch = -1
        cl = -1
        u = self.par[w]
        base_w = self.off[w]
        root = self.n
        done = 0
        while u != root:
            base = u * width
            if pref[base + lw + 1] - pref[base + fw] > 0:
                ch = u
                cl = self.order[wit[base + fw]]
            p = base_w + self.depth[u] - 1
            self.hi_flat[p] = ch
            self.lo_flat[p] = cl
            done += 2
            u = self.par[u]
        self.work += done
        return done

    def result(self):
        self.pref = None
        self.wit = None
        return self.off, self.hi_flat, self.lo_flat, self.work


class ShortpathBuilder:
    """Answers for all queries whose path has at most ``cap`` hops.

    For each real vertex v the row covers its nearest ``min(cap, depth[v]-1)``
    ancestors, deepest first.  Drive with ``mark_step(i, j)`` over edge index
    slices (each edge marks <= cap ancestors of its lower endpoint with a
    smallest-DFS-position witness), then ``rows_step(v)`` per vertex.
    ``lift`` is the flattened binary-lifting table (nlift levels, n+1 wide).
    """

    def __init__(self, n, eu, ev, par, first, last, depth, lift, nlift, cap):
        self.n = n
        self.eu = eu
        self.ev = ev
        self.par = par
        self.first = first
        self.last = last
        self.depth = depth
        self.lift = lift
        self.nlift = nlift
        self.cap = cap
        off = [0] * (n + 1)
        for v in range(n):
            rl = depth[v] - 1
            if rl > cap:
                rl = cap
            if rl < 0:
                rl = 0
            off[v + 1] = off[v] + rl
        self.off = off
        self.witv = [-1] * off[n]
        self.hi_flat = [-1] * off[n]
        self.lo_flat = [-1] * off[n]
        self.work = 0

    def mark_step(self, i, j):
        eu, ev = self.eu, self.ev
        par, first, depth = self.par, self.first, self.depth
        off, witv = self.off, self.witv
        lift = self.lift
        size = self.n + 1
        cap = self.cap
        done = 0
        for e in range(i, j):
            a, b = eu[e], ev[e]
            if first[a] > first[b]:
                a, b = b, a
            hops = depth[b] - depth[a]
            z = b
            if hops > cap:
                up = hops - cap
                jj = 0
                while up:
                    if up & 1:
                        z = lift[jj * size + z]
                    up >>= 1
                    jj += 1
                done += 1
            v = z
            da = depth[a]
            fb = first[b]
            while v != a:
                p = off[v] + depth[v] - da - 1
                w0 = witv[p]
                if w0 < 0 or fb < first[w0]:
                    witv[p] = b
                v = par[v]
                done += 1
        self.work += done
        return done

    def rows_step(self, v):
        base = self.off[v]
        rl = self.off[v + 1] - base
        if rl == 0:
            return 1
        u = self.par[v]
        ch = -1
        cl = -1
        witv = self.witv
        hi_flat, lo_flat = self.hi_flat, self.lo_flat
        for i in range(rl):
            wv = witv[base + i]
            if wv >= 0:
                ch = u
                cl = wv
            hi_flat[base + i] = ch
            lo_flat[base + i] = cl
            u = self.par[u]
        self.work += rl
        return rl

    def result(self):
        self.witv = None
        return self.off, self.hi_flat, self.lo_flat, self.work
