"""Exclusion inequalities for base points of |K_Y + D| and the corollaries.

If D is nef, K_Y + D is Cartier and D^2 > delta_x, a base point x forces a
non-zero effective E through x with

    0 <= D.E < delta_x / 2,
    D.E - delta_x / 4 <= E^2 <= (D.E)^2 / D^2,
    E^2 < 0 when D.E = 0.

Nothing here can certify freeness in general: the search for E runs over
declared curve classes with bounded coefficients, and verdicts say so.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .cycles import Kind, SingularityClass, fundamental_cycle
from .graph import DualGraph
from .lattice import as_rational, is_negative_definite
from .zariski import CurveLattice


class CriterionError(ValueError):
    pass


class HypothesisViolation(CriterionError):
    """D^2 <= delta_x, so the exclusion inequalities give no information."""


class NotNefError(CriterionError):
    pass


DEFAULT_BOUND = 10

FREE = "Free"
POSSIBLY_NOT_FREE = "PossiblyNotFree"


@dataclass(frozen=True)
class DivisorData:
    D2: Fraction
    pairings: dict

    def __init__(self, D2, pairings=None):
        object.__setattr__(self, "D2", as_rational(D2))
        object.__setattr__(
            self, "pairings", {str(k): as_rational(v) for k, v in (pairings or {}).items()}
        )

    def is_nef(self):
        return all(v >= 0 for v in self.pairings.values())


@dataclass(frozen=True)
class ExclusionWitness:
    E: tuple  # ((curve id, coefficient), ...)
    DE: Fraction
    E2: Fraction


@dataclass(frozen=True)
class Verdict:
    status: str
    delta_x: Fraction
    witnesses: tuple = ()
    bound: int | None = None
    caveat: str = ""
    searched: int = field(default=0, compare=False)

    @property
    def free(self):
        return self.status == FREE


def check_exclusion(D2, DE, E2, delta) -> bool:
    """True iff (D.E, E^2) satisfies every inequality allowed for a base point."""
    D2, DE, E2, delta = map(as_rational, (D2, DE, E2, delta))
    if D2 <= delta:
        raise HypothesisViolation(f"D^2 = {D2} is not > delta_x = {delta}")
    if not (0 <= DE < delta / 2):
        return False
    if not (DE - delta / 4 <= E2 <= DE * DE / D2):
        return False
    if DE == 0 and not E2 < 0:
        return False
    return True


def freeness_verdict(point_class: SingularityClass, D: DivisorData, curves: CurveLattice,
                     through_x, bound=DEFAULT_BOUND) -> Verdict:
    """Search E = sum e_i C_i (0 <= e_i <= bound) over the curves through x.

    A point that is not log terminal is free outright. Otherwise the point is
    Free if no candidate E satisfies :func:`check_exclusion`, relative to the
    declared curves and the coefficient bound.
    """
    delta = point_class.delta_x
    if not D.is_nef():
        raise NotNefError("D pairs negatively with a declared curve")
    if D.D2 <= delta:
        raise HypothesisViolation(
            f"theorem inapplicable: D^2 = {D.D2} is not > delta_x = {delta}"
        )
    if point_class.kind is Kind.NOT_LOG_TERMINAL:
        return Verdict(FREE, delta, caveat="unconditional: x is not log terminal")
    if bound < 1:
        raise CriterionError("bound must be >= 1")
    through_x = [str(c) for c in through_x]
    idx = [curves.index(c) for c in through_x]
    missing = [c for c in through_x if c not in D.pairings]
    if missing:
        raise CriterionError(f"no pairing D.C given for curves {missing}")
    de = [D.pairings[c] for c in through_x]
    M = curves.matrix
    sub = [[M[i, j] for j in idx] for i in idx]
    k = len(idx)
    witnesses = []
    searched = 0
    for e in itertools.product(range(bound + 1), repeat=k):
        if not any(e):
            continue
        searched += 1
        DE = sum((c * d for c, d in zip(e, de)), Fraction(0))
        if DE >= delta / 2:  # cheap reject before forming E^2
            continue
        E2 = sum((e[i] * e[j] * sub[i][j] for i in range(k) if e[i]
                  for j in range(k) if e[j]), Fraction(0))
        if check_exclusion(D.D2, DE, E2, delta):
            witnesses.append(ExclusionWitness(tuple(zip(through_x, e)), DE, E2))
    witnesses.sort(key=lambda w: tuple(c for _, c in w.E))
    caveat = f"relative to declared curves {through_x} and coefficient bound {bound}"
    status = POSSIBLY_NOT_FREE if witnesses else FREE
    return Verdict(status, delta, tuple(witnesses), bound, caveat, searched)


def corollary2_check(delta, D: DivisorData) -> bool:
    """D^2 > delta_x and D.C >= delta_x / 2 for every declared curve."""
    delta = as_rational(delta)
    return D.D2 > delta and all(v >= delta / 2 for v in D.pairings.values())


def corollary1_check(A: DivisorData, t: int) -> bool:
    """Freeness of |K_Y + tA| for ample A: t >= 3, or t = 2 with A^2 > 1."""
    if not isinstance(t, int) or t <= 0:
        raise CriterionError(f"t must be a positive integer, got {t!r}")
    if A.D2 <= 0 or any(v <= 0 for v in A.pairings.values()):
        raise CriterionError("A is not ample on the declared data")
    return t >= 3 or (t == 2 and A.D2 > 1)


def corollary4_check(g: DualGraph) -> bool:
    """Every coefficient of the fundamental cycle of the ADE graph is >= 2."""
    if not g.is_ade() or not is_negative_definite(g.matrix):
        raise CriterionError("the fundamental-cycle check applies to rational double points only")
    return min(fundamental_cycle(g)) >= 2
