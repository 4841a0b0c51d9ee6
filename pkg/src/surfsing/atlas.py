"""Enumerate weighted chain, fork and three-armed star graphs and certify
the bound delta_x <= 2 (equality exactly at rational double points).

Shapes partition the trees with at most one trivalent vertex:

* ``chain``: a path C1 - ... - Cn (A-type);
* ``fork``: a star whose arms include at least two single curves (D-type);
* ``star3``: a star with at most one single-curve arm (E-type and beyond).

Each graph appears once up to its shape symmetry (chain reversal, arm
permutation). Stars with four or more arms are not enumerated.
"""

import csv
import io
import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool

from . import _kernels
from .cycles import Kind, kind_from_discrepancy
from .graph import DualGraph, Vertex
from .lattice import format_rational

SHAPES = ("chain", "fork", "star3")


@dataclass(frozen=True)
class EnumerationSpec:
    max_vertices: int
    max_weight: int
    shapes: tuple = SHAPES
    min_vertices: int = 1

    def __post_init__(self):
        if self.max_weight < 2:
            raise ValueError("max_weight must be >= 2")
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be >= 1")
        bad = set(self.shapes) - set(SHAPES)
        if bad:
            raise ValueError(f"unknown shapes {sorted(bad)}")
        object.__setattr__(self, "shapes", tuple(s for s in SHAPES if s in self.shapes))


@dataclass(frozen=True)
class ShapedGraph:
    """``parts`` is (weights,) for a chain and (centre, arm, arm, arm) for a
    star, arms listed from the outer end and sorted canonically."""

    shape: str
    parts: tuple

    @property
    def n(self):
        if self.shape == "chain":
            return len(self.parts[0])
        return 1 + sum(len(a) for a in self.parts[1:])

    def layout(self):
        """(ids, weights, edges) in the index order used for computation."""
        if self.shape == "chain":
            ws = list(self.parts[0])
            ids = [f"C{i + 1}" for i in range(len(ws))]
            return ids, ws, [(i, i + 1) for i in range(len(ws) - 1)]
        centre, *arms = self.parts
        if self.shape == "fork":
            # the long arm and the centre form the chain C1..C(n-2)
            long_arm = arms[2]
            ids = [f"C{i + 1}" for i in range(len(long_arm) + 1)] + ["C1'", "C1''"]
            ws = list(long_arm) + [centre, arms[0][0], arms[1][0]]
            k = len(long_arm)
            edges = [(i, i + 1) for i in range(k)] + [(k, k + 1), (k, k + 2)]
            return ids, ws, edges
        ids, ws, edges = [], [], []
        for arm, prime in zip(arms, ("", "'", "''")):
            start = len(ws)
            ids += [f"C{i + 1}{prime}" for i in range(len(arm))]
            ws += list(arm)
            edges += [(start + i, start + i + 1) for i in range(len(arm) - 1)]
        c0 = len(ws)
        ids.append("C0")
        ws.append(centre)
        pos = 0
        for arm in arms:
            pos += len(arm)
            edges.append((pos - 1, c0))
        return ids, ws, edges

    def rows(self):
        _, ws, edges = self.layout()
        n = len(ws)
        M = [[0] * n for _ in range(n)]
        for i, w in enumerate(ws):
            M[i][i] = -w
        for i, j in edges:
            M[i][j] = M[j][i] = 1
        return M, ws

    def to_graph(self) -> DualGraph:
        ids, ws, edges = self.layout()
        return DualGraph([Vertex(i, w) for i, w in zip(ids, ws)], edges)

    def label(self):
        j = lambda t: ",".join(map(str, t))  # noqa: E731
        if self.shape == "chain":
            return j(self.parts[0])
        centre, *arms = self.parts
        return f"{centre};" + ";".join(j(a) for a in arms)


def _arm_key(arm):
    return (len(arm), arm)


def _chain_batches(n, weights):
    edges = [(i, i + 1) for i in range(n - 1)]
    batch = ((("chain", (t,)), t) for t in itertools.product(weights, repeat=n) if t <= t[::-1])
    yield edges, batch


def _arm_length_triples(n):
    # arm lengths p <= q <= r with p + q + r = n - 1
    for p in range(1, n):
        for q in range(p, n):
            r = n - 1 - p - q
            if r >= q:
                yield p, q, r


def _star_weights(shape, centre, arms):
    if shape == "fork":
        return arms[2] + (centre, arms[0][0], arms[1][0])
    return arms[0] + arms[1] + arms[2] + (centre,)


def _star_batch(shape, lengths, weights):
    groups = [(L, len(list(g))) for L, g in itertools.groupby(lengths)]
    choices = [
        list(itertools.combinations_with_replacement(
            list(itertools.product(weights, repeat=L)), m))
        for L, m in groups
    ]
    for combo in itertools.product(*choices):
        arms = tuple(sorted((a for grp in combo for a in grp), key=_arm_key))
        for c in weights:
            yield (shape, (c,) + arms), _star_weights(shape, c, arms)


def _star_batches(n, weights, shape):
    for lengths in _arm_length_triples(n):
        singles = sum(1 for x in lengths if x == 1)
        if (shape == "fork") != (singles >= 2):
            continue
        # all graphs with these arm lengths share one edge list
        template = ShapedGraph(shape, (2,) + tuple((2,) * L for L in lengths))
        yield template.layout()[2], _star_batch(shape, lengths, weights)


def _partitions(spec):
    for shape in spec.shapes:
        for n in range(spec.min_vertices, spec.max_vertices + 1):
            if shape != "chain" and n < 4:
                continue
            yield shape, n


def _batches(shape, n, max_weight):
    """Batches of (edges, stream of (key, weights)), weights in layout order."""
    weights = range(2, max_weight + 1)
    if shape == "chain":
        return _chain_batches(n, weights)
    return _star_batches(n, weights, shape)


def _generate(shape, n, max_weight):
    for _, batch in _batches(shape, n, max_weight):
        for key, _ in batch:
            yield ShapedGraph(*key)


def enumerate_graphs(spec: EnumerationSpec):
    """All graphs of the requested shapes, deterministic order, one per
    symmetry class."""
    for shape, n in _partitions(spec):
        yield from _generate(shape, n, spec.max_weight)


@dataclass(frozen=True)
class AtlasRow:
    graph: ShapedGraph
    kind: str  # a Kind value, or "NotNegativeDefinite"
    delta_x: Fraction | None
    fundamental_cycle: tuple | None
    all_two: bool

    def csv_fields(self):
        ids, _, _ = self.graph.layout()
        z = ""
        if self.fundamental_cycle is not None:
            z = " ".join(f"{i}:{c}" for i, c in zip(ids, self.fundamental_cycle))
        d = "" if self.delta_x is None else format_rational(self.delta_x)
        return [self.graph.shape, self.graph.label(), self.graph.n, self.kind, d, z]


EXCLUDED = "NotNegativeDefinite"


def analyze(sg: ShapedGraph) -> AtlasRow:
    _, ws, edges = sg.layout()
    all_two = all(w == 2 for w in ws)
    res = _kernels.analyze_weighted(ws, edges)
    if res is None:
        return AtlasRow(sg, EXCLUDED, None, None, all_two)
    den, a_num, z, q = res
    kind = kind_from_discrepancy(a_num, den, True, all_two)
    delta = Fraction(0) if kind is Kind.NOT_LOG_TERMINAL else Fraction(-q, den * den)
    return AtlasRow(sg, kind.value, delta, tuple(z), all_two)


@dataclass
class Prop1Report:
    counts: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)
    equality_cases: int = 0
    excluded: list = field(default_factory=list)

    @property
    def total(self):
        return sum(self.counts.values())

    @property
    def ok(self):
        return not self.violations

    def merge(self, other):
        self.counts.update(other.counts)
        self.violations += other.violations
        self.equality_cases += other.equality_cases
        self.excluded += other.excluded

    def summary(self):
        parts = [f"{k}={v}" for k, v in sorted(self.counts.items())]
        return (f"graphs={self.total} " + " ".join(parts)
                + f" equality_cases={self.equality_cases} violations={len(self.violations)}")


def _certify_partition(args):
    shape, n, max_weight, keep_excluded = args
    rep = Prop1Report()
    counts = rep.counts
    lt, rdp = Kind.LOG_TERMINAL.value, Kind.RATIONAL_DOUBLE_POINT.value
    nlt = Kind.NOT_LOG_TERMINAL.value
    run = _kernels.analyze_weighted
    for edges, batch in _batches(shape, n, max_weight):
        for key, ws in batch:
            res = run(ws, edges)
            if res is None:
                counts[EXCLUDED] += 1
                if keep_excluded:
                    rep.excluded.append(
                        (ShapedGraph(*key), "intersection matrix not negative definite"))
                continue
            den, a_num, _, q = res
            all_two = max(ws) == 2
            if all_two and not any(a_num):
                counts[rdp] += 1
            elif all(x < den for x in a_num):
                counts[lt] += 1
            else:
                counts[nlt] += 1
                continue
            # delta_x = -q / den^2, compared against 2 in integers
            twice = 2 * den * den
            if -q > twice or (-q == twice) != all_two:
                rep.violations.append((ShapedGraph(*key), Fraction(-q, den * den)))
            elif -q == twice:
                rep.equality_cases += 1
    return rep


def certify_prop1(spec: EnumerationSpec, jobs=1, keep_excluded=False) -> Prop1Report:
    """Check delta_x <= 2 on every log terminal graph, with equality exactly
    when all weights are 2."""
    tasks = [(s, n, spec.max_weight, keep_excluded) for s, n in _partitions(spec)]
    rep = Prop1Report()
    if jobs > 1:
        with Pool(jobs) as pool:
            parts = pool.map(_certify_partition, tasks, chunksize=1)
    else:
        parts = map(_certify_partition, tasks)
    for p in parts:
        rep.merge(p)
    return rep


CSV_HEADER = ["shape", "weights", "n", "class", "delta_x", "fundamental_cycle"]


def write_csv(spec: EnumerationSpec, out=None):
    """One row per enumerated graph; returns the text if ``out`` is None."""
    buf = out if out is not None else io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for sg in enumerate_graphs(spec):
        w.writerow(analyze(sg).csv_fields())
    if out is None:
        return buf.getvalue()
    return None
