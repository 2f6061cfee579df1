"""Max-plus permanents of square submatrices and the bookkeeping of which
partial bijections attain them.

The permanent of a k x k block is the maximum over permutations of the
sum of selected entries; a partial bijection attains it when its own sum
equals that maximum on the block it selects.  Optima are found by an
exhaustive permutation scan (exact, guarded by a size cap) and the full
argmax set by branch-and-bound against the known optimum.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from .boolmat import PartialBijection
from .tropical import Arrangement, _rat

DEFAULT_SCAN_CAP = 8


def tropical_permanent(x, cap: int = DEFAULT_SCAN_CAP) -> Fraction:
    """Max over permutations p of sum_b x[p(b)][b], for a square matrix."""
    rows = [[_rat(v) for v in row] for row in x]
    k = len(rows)
    if k < 1 or any(len(r) != k for r in rows):
        raise ValueError("input must be a non-empty square matrix")
    if k > cap:
        raise ValueError(f"size {k} exceeds the exhaustive-scan cap {cap}")
    return max(sum(rows[p[b]][b] for b in range(k))
               for p in permutations(range(k)))


def _best_and_argmax(arr: Arrangement, rows: tuple, cols: tuple, cap: int):
    """Optimal assignment value on the rows x cols block of the integer-
    rescaled matrix, plus the grid bitmasks of all optimal assignments."""
    k = len(rows)
    if k > cap:
        raise ValueError(f"size {k} exceeds the exhaustive-scan cap {cap}")
    icols = arr._icols
    sub = [[icols[j][i] for j in cols] for i in rows]  # sub[a][b]
    best = max(sum(sub[p[b]][b] for b in range(k))
               for p in permutations(range(k)))

    d = arr.d
    masks = []
    assign = [0] * k

    def rec(b, used, acc):
        if b == k:
            masks.append(sum(1 << (rows[assign[bb]] * d + cols[bb])
                             for bb in range(k)))
            return
        # prune subtrees that cannot reach the optimum even if every
        # remaining column took its best unused row independently
        optimistic = acc
        for b2 in range(b, k):
            optimistic += max(sub[a][b2] for a in range(k)
                              if not (used >> a) & 1)
        if optimistic < best:
            return
        for a in range(k):
            if (used >> a) & 1:
                continue
            assign[b] = a
            rec(b + 1, used | (1 << a), acc + sub[a][b])

    rec(0, 0, 0)
    return best, tuple(sorted(masks))


def _mask_to_bijection(mask: int, d: int) -> PartialBijection:
    pairs = []
    pos = 0
    while mask:
        if mask & 1:
            pairs.append((pos // d, pos % d))
        mask >>= 1
        pos += 1
    return PartialBijection(pairs)


def _check_bijection(arr: Arrangement, sigma: PartialBijection):
    if sigma.pairs and (sigma.image[-1] >= arr.n or sigma.domain[-1] >= arr.d):
        raise ValueError("bijection uses rows or columns outside the matrix")


def is_permanent_attaining(arr: Arrangement, sigma: PartialBijection,
                           cap: int = DEFAULT_SCAN_CAP) -> bool:
    """True iff sigma's entry sum ties the optimum over all bijections with
    the same domain and image.  The empty bijection attains vacuously."""
    _check_bijection(arr, sigma)
    k = len(sigma)
    if k == 0:
        return True
    rows, cols = sigma.image, sigma.domain
    if k > cap:
        raise ValueError(f"size {k} exceeds the exhaustive-scan cap {cap}")
    icols = arr._icols
    best = max(sum(icols[cols[b]][rows[p[b]]] for b in range(k))
               for p in permutations(range(k)))
    return sum(icols[j][i] for i, j in sigma.pairs) == best


def optimal_bijections(arr: Arrangement, rows, cols,
                       cap: int = DEFAULT_SCAN_CAP) -> frozenset:
    """The full argmax set of bijections from ``cols`` onto ``rows``:
    exactly those whose entry sum equals the block's permanent."""
    rows = tuple(sorted(rows))
    cols = tuple(sorted(cols))
    if len(rows) != len(cols):
        raise ValueError("row and column sets must have equal size")
    if len(rows) < 1:
        raise ValueError("block must be non-empty")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError("repeated indices")
    if rows[-1] >= arr.n or cols[-1] >= arr.d:
        raise ValueError("indices outside the matrix")
    _, masks = _best_and_argmax(arr, rows, cols, cap)
    return frozenset(_mask_to_bijection(m, arr.d) for m in masks)


class PermanentStructure:
    """All permanent-attaining partial bijections of an arrangement, held
    as lazily computed argmax sets indexed by (image rows, domain columns).

    Queries are pure; the cache only memoizes deterministic recomputation,
    so racing fills store identical values and concurrent use is safe.
    """

    def __init__(self, arr: Arrangement, k_max: int, cap: int = DEFAULT_SCAN_CAP):
        self.arrangement = arr
        self.k_max = k_max
        self.cap = cap
        self._cache = {}

    def _optimal(self, rows: tuple, cols: tuple):
        key = (rows, cols)
        got = self._cache.get(key)
        if got is None:
            got = self._cache.setdefault(
                key, _best_and_argmax(self.arrangement, rows, cols, self.cap))
        return got

    def is_attaining(self, sigma: PartialBijection) -> bool:
        _check_bijection(self.arrangement, sigma)
        k = len(sigma)
        if k == 0:
            return True
        if k > self.k_max:
            raise ValueError(f"bijection size {k} exceeds k_max={self.k_max}")
        best, _ = self._optimal(sigma.image, sigma.domain)
        icols = self.arrangement._icols
        return sum(icols[j][i] for i, j in sigma.pairs) == best

    def optimal(self, rows, cols) -> frozenset:
        """The full argmax set of bijections from the given columns onto the
        given rows; always non-empty."""
        rows = tuple(sorted(rows))
        cols = tuple(sorted(cols))
        if len(rows) != len(cols):
            raise ValueError("row and column sets must have equal size")
        if not 1 <= len(rows) <= self.k_max:
            raise ValueError(f"block size must be between 1 and {self.k_max}")
        if rows[-1] >= self.arrangement.n or cols[-1] >= self.arrangement.d:
            raise ValueError("indices outside the matrix")
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("repeated indices")
        _, masks = self._optimal(rows, cols)
        d = self.arrangement.d
        return frozenset(_mask_to_bijection(m, d) for m in masks)

    def bijections(self):
        """Yield the empty bijection plus every attaining one of size up to
        k_max, grouped by (size, rows, cols), deterministically."""
        yield PartialBijection.empty()
        n, d = self.arrangement.n, self.arrangement.d
        for k in range(1, self.k_max + 1):
            for rows in combinations(range(n), k):
                for cols in combinations(range(d), k):
                    _, masks = self._optimal(rows, cols)
                    for m in masks:
                        yield _mask_to_bijection(m, d)


def permanent_structure(arr: Arrangement, k_max=None,
                        cap: int = DEFAULT_SCAN_CAP) -> PermanentStructure:
    """The (cached) permanent structure of the arrangement covering sizes
    1..k_max; k_max defaults to min(n, d)."""
    limit = min(arr.n, arr.d)
    if k_max is None:
        k_max = limit
    if not 1 <= k_max <= limit:
        raise ValueError(f"k_max must be between 1 and {limit}")
    got = arr._structures.get(k_max)
    if got is None:
        got = arr._structures.setdefault(k_max, PermanentStructure(arr, k_max, cap))
    return got
