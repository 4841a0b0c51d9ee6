"""Zariski decomposition relative to a declared, finite set of curves.

A genuine Zariski decomposition quantifies over every curve on the surface.
Here nefness and the support of the negative part are only tested against
the curves of a :class:`CurveLattice`, so results are "Zariski decompositions
relative to the declared curves".

A divisor class may be given by coefficients over the lattice or abstractly
by its pairings D.C_i (and optionally D^2); the abstract form is what arises
for pull-backs f*D, which are not supported on the exceptional curves.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import (
    IntersectionMatrix,
    LatticeError,
    as_rational,
    is_negative_definite,
    solve,
)


class NoZariskiDecompositionError(LatticeError):
    pass


@dataclass(frozen=True)
class CurveLattice:
    ids: tuple
    matrix: IntersectionMatrix

    def __init__(self, ids, matrix):
        ids = tuple(str(i) for i in ids)
        if len(set(ids)) != len(ids):
            raise LatticeError("curve ids must be unique")
        if not isinstance(matrix, IntersectionMatrix):
            matrix = IntersectionMatrix(matrix)
        if matrix.n != len(ids):
            raise LatticeError(f"{len(ids)} ids for a {matrix.n}x{matrix.n} matrix")
        object.__setattr__(self, "ids", ids)
        object.__setattr__(self, "matrix", matrix)

    @property
    def n(self):
        return len(self.ids)

    def index(self, cid):
        return self.ids.index(cid)

    @classmethod
    def from_dict(cls, doc):
        return cls(doc["ids"], doc["matrix"])


@dataclass(frozen=True)
class DivisorClass:
    """D through its pairings with the lattice curves, plus D^2 if known."""

    pairings: tuple
    square: Fraction | None = None
    coefficients: tuple | None = None

    @classmethod
    def from_vector(cls, coeffs, lattice: CurveLattice):
        v = [as_rational(c) for c in coeffs]
        pair = lattice.matrix.apply(v)
        sq = sum((a * b for a, b in zip(v, pair)), Fraction(0))
        return cls(tuple(pair), sq, tuple(v))

    @classmethod
    def from_pairings(cls, pairings, square=None):
        sq = None if square is None else as_rational(square)
        return cls(tuple(as_rational(x) for x in pairings), sq)


@dataclass(frozen=True)
class ZariskiDecomposition:
    N: tuple
    P_pairings: tuple
    support: frozenset
    P: tuple | None = None
    P_square: Fraction | None = None
    history: tuple = field(default=(), compare=False)


def _as_class(D, lattice):
    if isinstance(D, DivisorClass):
        cls = D
    else:
        cls = DivisorClass.from_vector(D, lattice)
    if len(cls.pairings) != lattice.n:
        raise LatticeError("divisor and lattice dimensions differ")
    return cls


def zariski_decompose(D, lattice: CurveLattice) -> ZariskiDecomposition:
    """D = P + N with P nef on the lattice, N >= 0 on a negative definite
    support, and P.C = 0 for every curve C in that support.

    Each round adds every curve on which the current P is negative, then
    re-solves N on the enlarged support; at most n rounds.
    """
    D = _as_class(D, lattice)
    M = lattice.matrix
    n = lattice.n
    N = [Fraction(0)] * n
    support = []
    history = []
    while True:
        P = [d - m for d, m in zip(D.pairings, M.apply(N))]
        new = [i for i in range(n) if P[i] < 0 and i not in support]
        if not new:
            break
        support = sorted(set(support) | set(new))
        history.append(frozenset(support))
        sub = M.submatrix(support)
        if not is_negative_definite(sub):
            names = [lattice.ids[i] for i in support]
            raise NoZariskiDecompositionError(
                f"no Zariski decomposition over this lattice: support {names} "
                "is not negative definite"
            )
        coeffs = solve(sub, [D.pairings[i] for i in support])
        N = [Fraction(0)] * n
        for i, c in zip(support, coeffs):
            N[i] = c
        if any(c < 0 for c in N):
            raise ArithmeticError(f"negative part acquired a negative coefficient: {N}")
    N_sq = sum((a * b for a, b in zip(N, M.apply(N))), Fraction(0))
    P_vec = None
    if D.coefficients is not None:
        P_vec = tuple(d - m for d, m in zip(D.coefficients, N))
    P_sq = None if D.square is None else D.square - N_sq
    return ZariskiDecomposition(
        N=tuple(N),
        P_pairings=tuple(P),
        support=frozenset(i for i in range(n) if N[i] != 0),
        P=P_vec,
        P_square=P_sq,
        history=tuple(history),
    )


def verify_decomposition(D, Z: ZariskiDecomposition, lattice: CurveLattice) -> bool:
    """Independent check of every defining property of ``Z``."""
    D = _as_class(D, lattice)
    M = lattice.matrix
    n = lattice.n
    if len(Z.N) != n or len(Z.P_pairings) != n:
        return False
    N = [as_rational(x) for x in Z.N]
    P = [as_rational(x) for x in Z.P_pairings]
    if any(c < 0 for c in N):
        return False
    if any(p < 0 for p in P):
        return False
    supp = [i for i in range(n) if N[i] != 0]
    if set(supp) != set(Z.support):
        return False
    if any(P[i] != 0 for i in supp):
        return False
    if supp and not is_negative_definite(M.submatrix(supp)):
        return False
    MN = M.apply(N)
    if any(P[i] + MN[i] != D.pairings[i] for i in range(n)):
        return False
    if Z.P is not None:
        if D.coefficients is None:
            return False
        if any(p + c != d for p, c, d in zip(Z.P, N, D.coefficients)):
            return False
    return True
