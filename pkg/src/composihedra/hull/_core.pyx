# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for vertex enumeration; see ``_pycore`` for the contract.

All arithmetic is exact: inputs are 64-bit, intermediates 128-bit.  The
caller guarantees (via a Hadamard bound) that nothing overflows.
"""
from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long i128 "__int128"

ctypedef long long i64

BACKEND = "cython"


cdef i128 _det(i128* M, int n) noexcept nogil:
    cdef int k, i, j, found
    cdef i128 sign = 1
    cdef i128 prev = 1
    cdef i128 pivot, f, tmp
    if n == 0:
        return 1
    for k in range(n - 1):
        if M[k * n + k] == 0:
            found = -1
            for i in range(k + 1, n):
                if M[i * n + k] != 0:
                    found = i
                    break
            if found < 0:
                return 0
            for j in range(n):
                tmp = M[k * n + j]
                M[k * n + j] = M[found * n + j]
                M[found * n + j] = tmp
            sign = -sign
        pivot = M[k * n + k]
        for i in range(k + 1, n):
            f = M[i * n + k]
            for j in range(k + 1, n):
                M[i * n + j] = (M[i * n + j] * pivot - f * M[k * n + j]) / prev
        prev = pivot
    return sign * M[n * n - 1]


cdef inline i128 _abs(i128 x) noexcept nogil:
    return -x if x < 0 else x


cdef i128 _gcd(i128 a, i128 b) noexcept nogil:
    cdef i128 t
    a = _abs(a)
    b = _abs(b)
    while b != 0:
        t = a % b
        a = b
        b = t
    return a


def det(M):
    cdef int n = len(M)
    cdef i128* buf = <i128*> malloc(max(n * n, 1) * sizeof(i128))
    cdef int i, j
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            for j in range(n):
                buf[i * n + j] = <i64> M[i][j]
        return <i64> _det(buf, n)
    finally:
        free(buf)


def basic_solutions(A, b, int d):
    cdef int m = len(A)
    cdef int i, j, r, k, pos
    cdef i128 D, s, g
    cdef bint ok
    if d < 1 or m < d:
        return []
    cdef i64* Am = <i64*> malloc(m * d * sizeof(i64))
    cdef i64* bm = <i64*> malloc(m * sizeof(i64))
    cdef int* idx = <int*> malloc(d * sizeof(int))
    cdef i128* M = <i128*> malloc(d * d * sizeof(i128))
    cdef i128* nums = <i128*> malloc(d * sizeof(i128))
    if Am == NULL or bm == NULL or idx == NULL or M == NULL or nums == NULL:
        free(Am); free(bm); free(idx); free(M); free(nums)
        raise MemoryError()
    found = set()
    try:
        for r in range(m):
            row = A[r]
            for j in range(d):
                Am[r * d + j] = <i64> row[j]
            bm[r] = <i64> b[r]
        for i in range(d):
            idx[i] = i
        while True:
            for i in range(d):
                for j in range(d):
                    M[i * d + j] = Am[idx[i] * d + j]
            D = _det(M, d)
            if D != 0:
                for k in range(d):
                    for i in range(d):
                        for j in range(d):
                            if j == k:
                                M[i * d + j] = bm[idx[i]]
                            else:
                                M[i * d + j] = Am[idx[i] * d + j]
                    nums[k] = _det(M, d)
                if D < 0:
                    D = -D
                    for k in range(d):
                        nums[k] = -nums[k]
                ok = True
                for r in range(m):
                    s = 0
                    for j in range(d):
                        s += Am[r * d + j] * nums[j]
                    if s > bm[r] * D:
                        ok = False
                        break
                if ok:
                    g = D
                    for k in range(d):
                        g = _gcd(g, nums[k])
                    found.add((tuple([<i64> (nums[k] / g) for k in range(d)]), <i64> (D / g)))
            # next combination in lexicographic order
            pos = d - 1
            while pos >= 0 and idx[pos] == m - d + pos:
                pos -= 1
            if pos < 0:
                break
            idx[pos] += 1
            for i in range(pos + 1, d):
                idx[i] = idx[i - 1] + 1
    finally:
        free(Am); free(bm); free(idx); free(M); free(nums)
    return sorted(found)


def tight_masks(A, b, solutions):
    cdef int m = len(A)
    cdef int d, r, j
    cdef i128 s, D
    out = []
    if m == 0:
        return [0 for _ in solutions]
    d = len(A[0])
    cdef i64* Am = <i64*> malloc(max(m * d, 1) * sizeof(i64))
    cdef i64* bm = <i64*> malloc(m * sizeof(i64))
    cdef i128* x = <i128*> malloc(max(d, 1) * sizeof(i128))
    if Am == NULL or bm == NULL or x == NULL:
        free(Am); free(bm); free(x)
        raise MemoryError()
    try:
        for r in range(m):
            row = A[r]
            for j in range(d):
                Am[r * d + j] = <i64> row[j]
            bm[r] = <i64> b[r]
        for nums, den in solutions:
            for j in range(d):
                x[j] = <i64> nums[j]
            D = <i64> den
            mask = 0
            for r in range(m):
                s = 0
                for j in range(d):
                    s += Am[r * d + j] * x[j]
                if s == bm[r] * D:
                    mask |= (<object> 1) << r
            out.append(mask)
    finally:
        free(Am); free(bm); free(x)
    return out


def has_recession_ray(A, int d):
    cdef int m = len(A)
    cdef int i, j, r, k, c, pos, col
    cdef i128 v
    cdef bint neg_ok, pos_ok, nonzero
    if d == 1:
        col_vals = [row[0] for row in A]
        return not (any(x > 0 for x in col_vals) and any(x < 0 for x in col_vals))
    if m < d - 1:
        return True
    cdef int e = d - 1
    cdef i64* Am = <i64*> malloc(m * d * sizeof(i64))
    cdef int* idx = <int*> malloc(e * sizeof(int))
    cdef i128* M = <i128*> malloc(e * e * sizeof(i128))
    cdef i128* y = <i128*> malloc(d * sizeof(i128))
    if Am == NULL or idx == NULL or M == NULL or y == NULL:
        free(Am); free(idx); free(M); free(y)
        raise MemoryError()
    try:
        for r in range(m):
            row = A[r]
            for j in range(d):
                Am[r * d + j] = <i64> row[j]
        for i in range(e):
            idx[i] = i
        while True:
            nonzero = False
            for k in range(d):
                for i in range(e):
                    c = 0
                    for j in range(d):
                        if j == k:
                            continue
                        M[i * e + c] = Am[idx[i] * d + j]
                        c += 1
                y[k] = _det(M, e)
                if k % 2 == 1:
                    y[k] = -y[k]
                if y[k] != 0:
                    nonzero = True
            if nonzero:
                neg_ok = True
                pos_ok = True
                for r in range(m):
                    v = 0
                    for j in range(d):
                        v += Am[r * d + j] * y[j]
                    if v > 0:
                        neg_ok = False
                    elif v < 0:
                        pos_ok = False
                    if not (neg_ok or pos_ok):
                        break
                if neg_ok or pos_ok:
                    return True
            pos = e - 1
            while pos >= 0 and idx[pos] == m - e + pos:
                pos -= 1
            if pos < 0:
                break
            idx[pos] += 1
            for i in range(pos + 1, e):
                idx[i] = idx[i - 1] + 1
    finally:
        free(Am); free(idx); free(M); free(y)
    return False
