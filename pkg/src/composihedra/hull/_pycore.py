"""Pure-Python kernels; same contract as the compiled ``_core`` module.

Inequalities arrive as integer rows ``A x <= b``.  A basic solution is a
point where ``d`` linearly independent rows are tight; it is returned as
``(numerators, denominator)`` with ``denominator > 0`` and the whole tuple
reduced by its gcd.
"""
from itertools import combinations
from math import gcd

BACKEND = "python"


def det(M):
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    n = len(M)
    if n == 0:
        return 1
    M = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            row_i = M[i]
            row_k = M[k]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def _solve(rows, rhs):
    D = det(rows)
    if D == 0:
        return None
    d = len(rows)
    nums = []
    for j in range(d):
        Mj = [r[:j] + [v] + r[j + 1:] for r, v in zip(rows, rhs)]
        nums.append(det(Mj))
    if D < 0:
        D = -D
        nums = [-x for x in nums]
    return nums, D


def basic_solutions(A, b, d):
    """Feasible basic solutions of ``A x <= b`` over all ``d``-row subsets."""
    A = [list(map(int, r)) for r in A]
    b = [int(v) for v in b]
    m = len(A)
    found = set()
    for S in combinations(range(m), d):
        sol = _solve([A[i] for i in S], [b[i] for i in S])
        if sol is None:
            continue
        nums, D = sol
        ok = True
        for r in range(m):
            row = A[r]
            s = 0
            for j in range(d):
                s += row[j] * nums[j]
            if s > b[r] * D:
                ok = False
                break
        if not ok:
            continue
        g = D
        for x in nums:
            g = gcd(g, x)
        found.add((tuple(x // g for x in nums), D // g))
    return sorted(found)


def tight_masks(A, b, solutions):
    """Bitmask of rows holding with equality, per solution."""
    out = []
    for nums, D in solutions:
        mask = 0
        for r, row in enumerate(A):
            if sum(a * x for a, x in zip(row, nums)) == b[r] * D:
                mask |= 1 << r
        out.append(mask)
    return out


def has_recession_ray(A, d):
    """Is there ``y != 0`` with ``A y <= 0``?  Assumes ``rank(A) == d``.

    Extreme rays of a pointed cone are tight at ``d - 1`` independent rows,
    so it suffices to try the cofactor vector of every such subset.
    """
    A = [list(map(int, r)) for r in A]
    if d == 1:
        col = [r[0] for r in A]
        return not (any(c > 0 for c in col) and any(c < 0 for c in col))
    for S in combinations(range(len(A)), d - 1):
        rows = [A[i] for i in S]
        y = [(-1) ** j * det([r[:j] + r[j + 1:] for r in rows]) for j in range(d)]
        if not any(y):
            continue
        neg = pos = True
        for row in A:
            v = sum(a * x for a, x in zip(row, y))
            if v > 0:
                neg = False
            elif v < 0:
                pos = False
            if not (neg or pos):
                break
        if neg or pos:
            return True
    return False
