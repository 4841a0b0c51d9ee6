"""Fundamental cycle, discrepancy divisor and the invariant delta_x.

For a point x with minimal resolution f: X -> Y the discrepancy divisor
Delta = sum a_i C_i is defined by f*K_Y = K_X + Delta, i.e. by the linear
system Delta.C_i = C_i^2 + 2 - 2 g_i. The fundamental cycle Z is the
smallest non-zero effective integral cycle with Z.C_i <= 0 for all i.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .graph import DualGraph
from .lattice import LatticeError, format_rational, is_negative_definite, pairing


class NotContractibleError(LatticeError):
    """The intersection matrix is not negative definite."""

    def __init__(self, msg="not a contractible exceptional configuration"):
        super().__init__(msg)


class Kind(enum.Enum):
    SMOOTH = "Smooth"
    RATIONAL_DOUBLE_POINT = "RationalDoublePoint"
    LOG_TERMINAL = "LogTerminal"
    NOT_LOG_TERMINAL = "NotLogTerminal"

    def __str__(self):
        return self.value


class SmoothPoint:
    """Marker for a smooth point (empty exceptional locus)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "SMOOTH"


SMOOTH = SmoothPoint()


@dataclass(frozen=True)
class Cycle:
    """A Q-linear combination of the exceptional curves of ``graph``."""

    graph: DualGraph
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) != len(self.graph):
            raise LatticeError("cycle dimension does not match its graph")
        object.__setattr__(self, "coefficients", coeffs)

    def __getitem__(self, key):
        if isinstance(key, str):
            key = self.graph.index(key)
        return self.coefficients[key]

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __add__(self, other):
        return Cycle(self.graph, [a + b for a, b in zip(self, _coeffs(other))])

    def __sub__(self, other):
        return Cycle(self.graph, [a - b for a, b in zip(self, _coeffs(other))])

    def __neg__(self):
        return Cycle(self.graph, [-a for a in self])

    def scale(self, t):
        return Cycle(self.graph, [t * a for a in self])

    def dot(self, other) -> Fraction:
        return pairing(self.coefficients, _coeffs(other), self.graph.matrix)

    def square(self) -> Fraction:
        return self.dot(self)

    def dot_curve(self, i) -> Fraction:
        """Intersection with the single curve C_i."""
        if isinstance(i, str):
            i = self.graph.index(i)
        row = self.graph.integer_rows[i]
        return sum((a * m for a, m in zip(self.coefficients, row)), Fraction(0))

    def is_effective(self):
        return all(a >= 0 for a in self.coefficients)

    def is_zero(self):
        return not any(self.coefficients)

    def as_dict(self):
        return dict(zip(self.graph.ids, self.coefficients))


def _coeffs(x):
    return x.coefficients if isinstance(x, Cycle) else tuple(x)


def _require_contractible(g: DualGraph):
    if not is_negative_definite(g.matrix):
        raise NotContractibleError()


def _rhs(g):
    return [2 - v.weight - 2 * v.genus for v in g.vertices]


def fundamental_cycle(g: DualGraph) -> Cycle:
    """Laufer's algorithm: start from the reduced cycle and add C_i (lowest
    index first) while Z.C_i > 0."""
    _require_contractible(g)
    return Cycle(g, _kernels.laufer(g.integer_rows))


def discrepancy(g: DualGraph) -> Cycle:
    """Delta with f*K_Y = K_X + Delta on the minimal resolution."""
    _require_contractible(g)
    num, den = _kernels.solve(g.integer_rows, _rhs(g))
    delta = Cycle(g, [Fraction(x, den) for x in num])
    if not delta.is_effective():  # impossible for a negative definite tree
        raise ArithmeticError(f"non-effective discrepancy {delta.coefficients}")
    return delta


@dataclass(frozen=True)
class SingularityClass:
    kind: Kind
    delta_x: Fraction
    discrepancy: Cycle | None = None
    fundamental_cycle: Cycle | None = None

    @property
    def is_log_terminal(self):
        return self.kind in (Kind.RATIONAL_DOUBLE_POINT, Kind.LOG_TERMINAL)

    def __str__(self):
        return f"{self.kind}, delta_x = {format_rational(self.delta_x)}"


def classify(g) -> SingularityClass:
    """Classify the point whose minimal resolution has dual graph ``g``.

    Log terminality is decided on the minimal resolution: an snc tree of
    smooth rational curves with every a_i < 1. Graphs with cycles, multiple
    intersections or curves of positive genus are reported NotLogTerminal.
    """
    if g is SMOOTH or isinstance(g, SmoothPoint):
        return SingularityClass(Kind.SMOOTH, Fraction(4))
    if not isinstance(g, DualGraph):
        raise TypeError(f"expected a DualGraph or SMOOTH, got {type(g).__name__}")
    _require_contractible(g)
    den, a_num, z, q = _kernels.invariants(g.integer_rows, _rhs(g))
    delta = Cycle(g, [Fraction(x, den) for x in a_num])
    Z = Cycle(g, z)
    kind = kind_from_discrepancy(a_num, den, g.is_snc_rational_tree(), g.is_ade())
    value = Fraction(-q, den * den) if kind is not Kind.NOT_LOG_TERMINAL else Fraction(0)
    return SingularityClass(kind, value, delta, Z)


def kind_from_discrepancy(a_num, den, snc_rational_tree, ade):
    """Kind of a singular point from Delta = a_num / den (den > 0)."""
    if ade and not any(a_num):
        return Kind.RATIONAL_DOUBLE_POINT
    if snc_rational_tree and all(x < den for x in a_num):
        return Kind.LOG_TERMINAL
    return Kind.NOT_LOG_TERMINAL


def delta_x(g) -> Fraction:
    return classify(g).delta_x


def z_minus_delta(g: DualGraph) -> Cycle:
    """Z - Delta, whose coefficients are written mu_i = c_i - a_i."""
    return fundamental_cycle(g) - discrepancy(g)


def marked_components(g: DualGraph):
    """Indices i with (Delta - Z).C_i = 1."""
    v = z_minus_delta(g)
    return [i for i in range(len(g)) if v.dot_curve(i) == -1]
