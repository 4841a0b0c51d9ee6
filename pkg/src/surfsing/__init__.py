"""Invariants of normal surface singularities from their resolution graphs.

Exact rational arithmetic throughout: fundamental cycles, discrepancy
divisors, log terminal classification and delta_x, Zariski decomposition
over a declared curve lattice, and exclusion inequalities for base points
of adjoint systems.
"""

from .atlas import EnumerationSpec, certify_prop1, enumerate_graphs, write_csv
from .criterion import (
    DivisorData,
    Verdict,
    check_exclusion,
    corollary1_check,
    corollary2_check,
    corollary4_check,
    freeness_verdict,
)
from .cycles import (
    SMOOTH,
    Cycle,
    Kind,
    NotContractibleError,
    SingularityClass,
    classify,
    delta_x,
    discrepancy,
    fundamental_cycle,
)
from .graph import (
    DualGraph,
    EnTypeDescriptor,
    Vertex,
    dynkin,
    make_An,
    make_Dn,
    make_En,
    make_star,
    parse_graph,
    serialize_graph,
)
from .lattice import IntersectionMatrix, is_negative_definite, pairing, solve
from .zariski import CurveLattice, DivisorClass, zariski_decompose, verify_decomposition

__version__ = "0.1.0"

__all__ = [
    "EnumerationSpec", "certify_prop1", "enumerate_graphs", "write_csv",
    "DivisorData", "Verdict", "check_exclusion", "corollary1_check",
    "corollary2_check", "corollary4_check", "freeness_verdict",
    "SMOOTH", "Cycle", "Kind", "NotContractibleError", "SingularityClass",
    "classify", "delta_x", "discrepancy", "fundamental_cycle",
    "DualGraph", "EnTypeDescriptor", "Vertex", "dynkin", "make_An", "make_Dn",
    "make_En", "make_star", "parse_graph", "serialize_graph",
    "IntersectionMatrix", "is_negative_definite", "pairing", "solve",
    "CurveLattice", "DivisorClass", "zariski_decompose", "verify_decomposition",
]
