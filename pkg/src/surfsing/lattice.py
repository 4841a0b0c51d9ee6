"""Exact linear algebra over a finite curve lattice.

Every number is a :class:`fractions.Fraction`; nothing here touches floating
point. Vectors are plain sequences of rationals indexed like the matrix.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import _kernels


class LatticeError(ValueError):
    """Raised on dimension mismatches and malformed matrices."""


class SingularMatrixError(LatticeError):
    pass


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"-3/4"`` to Fraction.

    Floats are rejected so that inexact values never leak into the core.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean value {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE"):
            raise ValueError(f"not an exact rational: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rational(q) -> str:
    """Canonical rendering: ``p/q`` in lowest terms, ``p`` when q = 1."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class IntersectionMatrix:
    """Symmetric matrix of intersection numbers between curve classes."""

    entries: tuple

    def __init__(self, rows):
        rows = tuple(tuple(as_rational(x) for x in row) for row in rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise LatticeError("intersection matrix must be square")
            for j in range(i):
                if row[j] != rows[j][i]:
                    raise LatticeError(f"matrix not symmetric at ({i}, {j})")
                if row[j] < 0:
                    raise LatticeError(
                        f"distinct curves {i}, {j} meet negatively ({row[j]})"
                    )
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self):
        return [list(r) for r in self.entries]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def integer_rows(self):
        """Rows scaled by the lcm of all denominators, as Python ints."""
        m = lcm(*(x.denominator for row in self.entries for x in row)) if self.n else 1
        return [[int(x * m) for x in row] for row in self.entries]

    def submatrix(self, idx):
        idx = list(idx)
        return IntersectionMatrix([[self.entries[i][j] for j in idx] for i in idx])

    def apply(self, v):
        """M v as a list of Fractions."""
        _check_dim(self, v)
        v = [as_rational(x) for x in v]
        return [sum((r[j] * v[j] for j in range(self.n) if v[j]), Fraction(0))
                for r in self.entries]


def _check_dim(M, *vecs):
    for v in vecs:
        if len(v) != M.n:
            raise LatticeError(f"vector of length {len(v)} against {M.n}x{M.n} matrix")


def pairing(u, v, M: IntersectionMatrix) -> Fraction:
    """The intersection product u^T M v."""
    _check_dim(M, u, v)
    u = [as_rational(x) for x in u]
    Mv = M.apply(v)
    return sum((a * b for a, b in zip(u, Mv)), Fraction(0))


def is_negative_definite(M: IntersectionMatrix) -> bool:
    """True iff every leading principal minor of -M is positive.

    The matrix is first scaled to integers (a positive factor leaves the
    signs of the minors alone) and the minors come out of fraction-free
    elimination.
    """
    if M.n == 0:
        return True
    neg = [[-x for x in row] for row in M.integer_rows()]
    minors = _kernels.leading_minors(neg)
    return len(minors) == M.n and all(m > 0 for m in minors)


def solve(M: IntersectionMatrix, b):
    """Exact solution x of M x = b.

    Gaussian elimination on Fractions with partial pivoting: the pivot is the
    entry of largest absolute value in the column, ties going to the lowest
    row. The pivot choice does not change the exact answer, only the size of
    the intermediates.
    """
    _check_dim(M, b)
    n = M.n
    A = [list(M.entries[i]) + [as_rational(b[i])] for i in range(n)]
    for k in range(n):
        p = max(range(k, n), key=lambda r: (abs(A[r][k]), -r))
        if A[p][k] == 0:
            raise SingularMatrixError("matrix is singular")
        A[k], A[p] = A[p], A[k]
        piv = A[k]
        for r in range(k + 1, n):
            f = A[r][k] / piv[k]
            if f:
                row = A[r]
                for c in range(k, n + 1):
                    row[c] -= f * piv[c]
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        s = A[i][n] - sum((A[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = s / A[i][i]
    return x


def solve_integral(rows, b):
    """Solve an integer system through the fraction-free kernel."""
    try:
        num, den = _kernels.solve(rows, list(b))
    except ZeroDivisionError:
        raise SingularMatrixError("matrix is singular") from None
    return [Fraction(x, den) for x in num]
