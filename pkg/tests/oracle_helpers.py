"""Independent brute-force oracles the tests check the library against.

These deliberately avoid the library's own algorithms: bijections are
found by filtering all subsets of the one-entries, dimensions come from
the exact rank of the tie equality system, and ordered set partitions are
rebuilt from permutations plus compositions.
"""

from fractions import Fraction
from itertools import combinations, permutations


def brute_contained_bijections(matrix) -> set:
    """All injective pair-sets below ``matrix``: filter every subset of
    the positions of its ones."""
    ones = [(i, j) for i in range(matrix.n) for j in range(matrix.d)
            if matrix.entry(i, j)]
    found = set()
    for k in range(len(ones) + 1):
        for sub in combinations(ones, k):
            rows = [i for i, _ in sub]
            cols = [j for _, j in sub]
            if len(set(rows)) == len(sub) and len(set(cols)) == len(sub):
                found.add(frozenset(sub))
    return found


def exact_rank(rows) -> int:
    """Rank over Q of a list of rational row vectors, by elimination."""
    rows = [list(map(Fraction, r)) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    pivot_col = 0
    while rank < len(rows) and pivot_col < ncols:
        pivot = next((r for r in range(rank, len(rows))
                      if rows[r][pivot_col] != 0), None)
        if pivot is None:
            pivot_col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][pivot_col]
        for r in range(len(rows)):
            if r != rank and rows[r][pivot_col] != 0:
                f = rows[r][pivot_col] / lead
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        pivot_col += 1
    return rank


def tie_system_dimension(arr, t) -> int:
    """Affine dimension, in the quotient by the all-ones line, of the
    solution space of the tie equalities of ``t``: n - 1 - rank of the
    difference vectors e_i - e_k over all tied pairs."""
    vecs = []
    for j in range(t.d):
        tied = [i for i in range(t.n) if t.entry(i, j)]
        for a, b in combinations(tied, 2):
            v = [Fraction(0)] * t.n
            v[a], v[b] = Fraction(1), Fraction(-1)
            vecs.append(v)
    if not vecs:
        return t.n - 1
    return t.n - 1 - exact_rank(vecs)


def brute_ordered_set_partitions(n: int) -> set:
    """Ordered set partitions rebuilt from permutations + compositions."""
    found = set()
    for perm in permutations(range(n)):
        for cuts in range(1 << (n - 1)):
            blocks = []
            cur = [perm[0]]
            for pos in range(1, n):
                if (cuts >> (pos - 1)) & 1:
                    blocks.append(frozenset(cur))
                    cur = []
                cur.append(perm[pos])
            blocks.append(frozenset(cur))
            found.add(tuple(blocks))
    return found


def brute_assignment_optimum(sub) -> Fraction:
    """Best assignment value of a square matrix by full permutation scan."""
    k = len(sub)
    return max(sum(sub[p[b]][b] for b in range(k))
               for p in permutations(range(k)))


def column_space_witness(arr, sigma):
    """A candidate point of the column space satisfying ``sigma``, or None.

    Assembled from a witness on sigma's own square block: solve there,
    take the residuation coefficients of the block columns, and spread
    them over the full columns.  Used to check that "satisfiable",
    "permanent-attaining" and "satisfied by a column-space point" agree.
    """
    from tropface import (Arrangement, PartialBijection, residuation,
                          witness)
    if not sigma.pairs:
        return arr.column(0)
    rows, cols = sigma.image, sigma.domain
    k = len(rows)
    block = Arrangement([[arr.entries[i][j] for j in cols] for i in rows])
    inner = PartialBijection(
        [(rows.index(i), cols.index(j)) for i, j in sigma.pairs])
    yhat = witness(block, inner.as_matrix(k, k))
    if yhat is None:
        return None
    coeffs = [residuation(block.column(b), yhat) for b in range(k)]
    return tuple(
        max(coeffs[b] + arr.entries[t][cols[b]] for b in range(k))
        for t in range(arr.n))
