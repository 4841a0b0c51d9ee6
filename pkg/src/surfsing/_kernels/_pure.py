"""Integer kernels in plain Python.

All inputs are square integer matrices given as lists of lists. Every
routine is fraction-free: intermediate values stay integral and divisions
are exact.
"""

MAX_LAUFER_STEPS = 1_000_000


def leading_minors(M):
    """Leading principal minors of M, in order, via Bareiss elimination.

    Stops after the first vanishing minor, since elimination without
    pivoting cannot continue past it.
    """
    n = len(M)
    A = [list(row) for row in M]
    minors = []
    prev = 1
    for k in range(n):
        p = A[k][k]
        minors.append(p)
        if p == 0:
            break
        for i in range(k + 1, n):
            Ai, aik = A[i], A[i][k]
            Ak = A[k]
            for j in range(k + 1, n):
                Ai[j] = (Ai[j] * p - aik * Ak[j]) // prev
        prev = p
    return minors


def solve(M, b):
    """Solve M x = b exactly; returns (numerators, denominator) with den > 0.

    Fraction-free Gauss-Jordan: after the last step every diagonal entry
    equals the pivot and the augmented column holds pivot * x.
    Raises ZeroDivisionError when M is singular.
    """
    n = len(M)
    A = [list(M[i]) + [b[i]] for i in range(n)]
    prev = 1
    for k in range(n):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    break
            else:
                raise ZeroDivisionError("singular matrix")
        Ak = A[k]
        p = Ak[k]
        for i in range(n):
            if i == k:
                continue
            Ai = A[i]
            aik = Ai[k]
            for j in range(n + 1):
                if j != k:
                    Ai[j] = (Ai[j] * p - aik * Ak[j]) // prev
            Ai[k] = 0
        prev = p
    den = prev
    num = [A[i][n] for i in range(n)]
    if den < 0:
        den = -den
        num = [-x for x in num]
    return num, den


def laufer(M):
    """Fundamental cycle by Laufer's algorithm, lowest-index tie-break."""
    n = len(M)
    z = [1] * n
    s = [sum(row) for row in M]
    for _ in range(MAX_LAUFER_STEPS):
        for i in range(n):
            if s[i] > 0:
                break
        else:
            return z
        z[i] += 1
        for j in range(n):
            s[j] += M[j][i]
    raise RuntimeError("Laufer iteration did not terminate")


def qform(M, v):
    n = len(v)
    total = 0
    for i in range(n):
        vi = v[i]
        if vi:
            row = M[i]
            total += vi * sum(row[j] * v[j] for j in range(n))
    return total


def invariants(M, rhs):
    """Discrepancy, fundamental cycle and the square of their difference.

    Returns (den, a_num, z, q) where the discrepancy coefficients are
    a_num[i] / den and (Delta - Z)^2 = q / den**2.
    """
    a_num, den = solve(M, rhs)
    z = laufer(M)
    w = [a_num[i] - den * z[i] for i in range(len(z))]
    return den, a_num, z, qform(M, w)


def analyze(M, rhs):
    """``invariants`` for negative definite M, else None."""
    neg = [[-x for x in row] for row in M]
    minors = leading_minors(neg)
    if len(minors) != len(M) or any(m <= 0 for m in minors):
        return None
    return invariants(M, rhs)


def analyze_weighted(weights, edges):
    """``analyze`` for a genus-0 graph given by weights and simple edges."""
    n = len(weights)
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = -weights[i]
    for i, j in edges:
        M[i][j] += 1
        M[j][i] += 1
    return analyze(M, [2 - w for w in weights])
