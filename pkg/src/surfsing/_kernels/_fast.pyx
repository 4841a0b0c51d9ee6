# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the routines in ``_pure``.

Work happens in checked 64-bit arithmetic on fixed-size stack buffers.
Any overflow, or a matrix larger than MAXN, raises OverflowError so the
dispatcher can rerun the call on Python integers.
"""

from libc.string cimport memcpy

cdef extern from *:
    """
    static inline int ss_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int ss_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int ss_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int ss_mul(long long a, long long b, long long *r) nogil
    int ss_sub(long long a, long long b, long long *r) nogil
    int ss_add(long long a, long long b, long long *r) nogil

cdef enum:
    MAXN = 32
    W = MAXN + 1
    MAX_LAUFER_STEPS = 1000000

ctypedef long long Mat[MAXN][W]

# inputs beyond this magnitude go to the Python kernels
cdef object BIG = 2 ** 31


cdef int _load(object M, Mat A, int n) except -1:
    cdef int i, j
    if n > MAXN:
        raise OverflowError("matrix too large for the compiled kernel")
    for i in range(n):
        row = M[i]
        for j in range(n):
            x = row[j]
            if not -BIG <= x <= BIG:
                raise OverflowError("entry too large for the compiled kernel")
            A[i][j] = x
    return 0


cdef inline int _cross(long long a, long long p, long long c, long long d,
                       long long prev, long long *out) noexcept nogil:
    # out = (a*p - c*d) / prev, exact; returns 1 on overflow
    cdef long long t1, t2, t3
    if ss_mul(a, p, &t1) or ss_mul(c, d, &t2) or ss_sub(t1, t2, &t3):
        return 1
    out[0] = t3 // prev
    return 0


cdef int _minors(Mat A, int n, long long *out, int negate) except -2:
    """Leading minors of A (or -A); returns how many were produced."""
    cdef Mat B
    cdef long long prev = 1, p
    cdef int i, j, k
    for i in range(n):
        for j in range(n):
            B[i][j] = -A[i][j] if negate else A[i][j]
    for k in range(n):
        p = B[k][k]
        out[k] = p
        if p == 0:
            return k + 1
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                if _cross(B[i][j], p, B[i][k], B[k][j], prev, &B[i][j]):
                    raise OverflowError("int64 overflow")
        prev = p
    return n


cdef int _solve(Mat A, int n, long long *rhs, long long *num, long long *den) except -1:
    cdef Mat B
    cdef long long prev = 1, p, aik, tmp
    cdef int i, j, k, r
    memcpy(B, A, sizeof(Mat))
    for i in range(n):
        B[i][n] = rhs[i]
    for k in range(n):
        if B[k][k] == 0:
            for r in range(k + 1, n):
                if B[r][k] != 0:
                    for j in range(n + 1):
                        tmp = B[k][j]
                        B[k][j] = B[r][j]
                        B[r][j] = tmp
                    break
            else:
                raise ZeroDivisionError("singular matrix")
        p = B[k][k]
        for i in range(n):
            if i == k:
                continue
            aik = B[i][k]
            for j in range(n + 1):
                if j != k:
                    if _cross(B[i][j], p, aik, B[k][j], prev, &B[i][j]):
                        raise OverflowError("int64 overflow")
            B[i][k] = 0
        prev = p
    if prev < 0:
        for i in range(n):
            num[i] = -B[i][n]
        den[0] = -prev
    else:
        for i in range(n):
            num[i] = B[i][n]
        den[0] = prev
    return 0


cdef int _laufer(Mat A, int n, long long *z) except -1:
    cdef long long s[MAXN]
    cdef long long steps = 0
    cdef int i, j
    for i in range(n):
        z[i] = 1
        s[i] = 0
        for j in range(n):
            s[i] += A[i][j]
    while steps < MAX_LAUFER_STEPS:
        i = 0
        while i < n and s[i] <= 0:
            i += 1
        if i == n:
            return 0
        z[i] += 1
        for j in range(n):
            s[j] += A[j][i]
        steps += 1
    raise RuntimeError("Laufer iteration did not terminate")


cdef long long _qform(Mat A, int n, long long *v) except? -1:
    cdef long long total = 0, row, t
    cdef int i, j
    for i in range(n):
        if v[i] == 0:
            continue
        row = 0
        for j in range(n):
            if ss_mul(A[i][j], v[j], &t) or ss_add(row, t, &row):
                raise OverflowError("int64 overflow")
        if ss_mul(v[i], row, &t) or ss_add(total, t, &total):
            raise OverflowError("int64 overflow")
    return total


cdef object _invariants(Mat A, int n, long long *rhs):
    cdef long long num[MAXN]
    cdef long long z[MAXN]
    cdef long long w[MAXN]
    cdef long long den, t
    cdef int i
    _solve(A, n, rhs, num, &den)
    _laufer(A, n, z)
    for i in range(n):
        if ss_mul(den, z[i], &t) or ss_sub(num[i], t, &w[i]):
            raise OverflowError("int64 overflow")
    return (den, [num[i] for i in range(n)], [z[i] for i in range(n)], _qform(A, n, w))


cdef object _analyze(Mat A, int n, long long *rhs):
    cdef long long minors[MAXN]
    cdef int k = _minors(A, n, minors, 1)
    cdef int i
    if k != n:
        return None
    for i in range(n):
        if minors[i] <= 0:
            return None
    return _invariants(A, n, rhs)


cdef int _load_vec(object v, long long *out, int n) except -1:
    cdef int i
    for i in range(n):
        x = v[i]
        if not -BIG <= x <= BIG:
            raise OverflowError("entry too large for the compiled kernel")
        out[i] = x
    return 0


def leading_minors(M):
    cdef int n = len(M)
    cdef Mat A
    cdef long long out[MAXN]
    _load(M, A, n)
    cdef int k = _minors(A, n, out, 0)
    return [out[i] for i in range(k)]


def solve(M, b):
    cdef int n = len(M)
    cdef Mat A
    cdef long long rhs[MAXN]
    cdef long long num[MAXN]
    cdef long long den
    _load(M, A, n)
    _load_vec(b, rhs, n)
    _solve(A, n, rhs, num, &den)
    return [num[i] for i in range(n)], den


def laufer(M):
    cdef int n = len(M)
    cdef Mat A
    cdef long long z[MAXN]
    _load(M, A, n)
    _laufer(A, n, z)
    return [z[i] for i in range(n)]


def qform(M, v):
    cdef int n = len(v)
    cdef Mat A
    cdef long long w[MAXN]
    _load(M, A, n)
    _load_vec(v, w, n)
    return _qform(A, n, w)


def invariants(M, rhs):
    cdef int n = len(M)
    cdef Mat A
    cdef long long r[MAXN]
    _load(M, A, n)
    _load_vec(rhs, r, n)
    return _invariants(A, n, r)


def analyze(M, rhs):
    cdef int n = len(M)
    cdef Mat A
    cdef long long r[MAXN]
    _load(M, A, n)
    _load_vec(rhs, r, n)
    return _analyze(A, n, r)


def analyze_weighted(weights, edges):
    cdef int n = len(weights)
    cdef Mat A
    cdef long long r[MAXN]
    cdef int i, j
    if n > MAXN:
        raise OverflowError("matrix too large for the compiled kernel")
    for i in range(n):
        for j in range(n):
            A[i][j] = 0
    for i in range(n):
        x = weights[i]
        if not 0 <= x <= BIG:
            raise OverflowError("entry too large for the compiled kernel")
        A[i][i] = -x
        r[i] = 2 - x
    for i, j in edges:
        A[i][j] += 1
        A[j][i] += 1
    return _analyze(A, n, r)
