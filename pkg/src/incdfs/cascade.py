"""Fractional cascading over a chain of sorted integer arrays.

One binary search in the first augmented list plus a constant amount of work
per subsequent array yields the successor of a key in every array: each
augmented list carries every second element of the next one, so the landing
position in the next list is off by at most two.
"""

import bisect
from dataclasses import dataclass


@dataclass
class CascadeFamily:
    arrays: list          # the original sorted arrays
    aug: list             # per-array augmented value lists
    own: list             # aug position -> index of next own element in arrays[i]
    promo: list           # aug position -> position of next promoted element in aug[i+1]

    @property
    def total_augmented(self):
        return sum(len(a) for a in self.aug)


def build_cascade(arrays) -> CascadeFamily:
    """Build the family; arrays must each be sorted ascending (duplicates ok)."""
    arrays = [list(a) for a in arrays]
    for i, a in enumerate(arrays):
        if any(a[j] > a[j + 1] for j in range(len(a) - 1)):
            raise ValueError(f"array {i} is not sorted")
    k = len(arrays)
    aug = [None] * k
    own = [None] * k
    promo = [None] * k
    next_aug = []
    for i in range(k - 1, -1, -1):
        promoted = next_aug[1::2]
        promoted_pos = list(range(1, len(next_aug), 2))
        merged = []          # (value, own_index or -1, promoted_pos or -1)
        a = arrays[i]
        ia = ip = 0
        while ia < len(a) or ip < len(promoted):
            if ip >= len(promoted) or (ia < len(a) and a[ia] <= promoted[ip]):
                merged.append((a[ia], ia, -1))
                ia += 1
            else:
                merged.append((promoted[ip], -1, promoted_pos[ip]))
                ip += 1
        L = len(merged)
        aug[i] = [m[0] for m in merged]
        own_i = [len(a)] * (L + 1)
        promo_i = [len(next_aug)] * (L + 1)
        for j in range(L - 1, -1, -1):
            _, oi, pp = merged[j]
            own_i[j] = oi if oi >= 0 else own_i[j + 1]
            promo_i[j] = pp if pp >= 0 else promo_i[j + 1]
        own[i] = own_i
        promo[i] = promo_i
        next_aug = aug[i]
    return CascadeFamily(arrays=arrays, aug=aug, own=own, promo=promo)


def query_all_successors(fam: CascadeFamily, x: int):
    """Successor of ``x`` (smallest element >= x) in every array.

    Returns ``(successors, comparisons)``: one value or None per array, and
    the number of key comparisons performed.
    """
    k = len(fam.arrays)
    out = [None] * k
    if k == 0:
        return out, 0
    comps = 0
    first = fam.aug[0]
    # plain binary search in the first augmented list, counting comparisons
    lo, hi = 0, len(first)
    while lo < hi:
        mid = (lo + hi) >> 1
        comps += 1
        if first[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    j = lo
    for i in range(k):
        oi = fam.own[i][j]
        a = fam.arrays[i]
        if oi < len(a):
            out[i] = a[oi]
        if i + 1 < k:
            p = fam.promo[i][j]
            nxt = fam.aug[i + 1]
            while p > 0:
                comps += 1
                if nxt[p - 1] >= x:
                    p -= 1
                else:
                    break
            j = p
    return out, comps


def successor_by_bisect(array, x):
    """Independent per-array oracle used by the tests."""
    i = bisect.bisect_left(array, x)
    return array[i] if i < len(array) else None
