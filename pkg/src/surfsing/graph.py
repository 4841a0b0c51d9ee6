"""Resolution dual graphs and the named families used throughout.

A :class:`DualGraph` has one vertex per exceptional curve C_i, weighted by
w_i = -C_i^2, and one edge per intersection point. Vertex order is
significant only as an index order for the linear algebra; equality and
serialization use the canonical (id-sorted) form.

Vertex names follow the usual notation: a chain C1..Cn, fork leaves C1' and
C1'', and for the star-shaped E-types a centre C0 with arms C1..Cn1,
C1'..Cn2' and C1''. Arm indices run from the outer end towards the centre.
"""

import json
from dataclasses import dataclass
from functools import cached_property

from .lattice import IntersectionMatrix


class GraphError(ValueError):
    code = "graph"


class GraphSyntaxError(GraphError):
    code = "syntax"


class NotMinimalError(GraphError):
    code = "not-minimal"


class DisconnectedGraphError(GraphError):
    code = "disconnected"


@dataclass(frozen=True)
class Vertex:
    id: str
    weight: int
    genus: int = 0


class DualGraph:
    """Weighted intersection graph of the exceptional curves over one point.

    ``edges`` holds index pairs (i < j); a pair repeated k times means the
    two curves meet in k points.
    """

    def __init__(self, vertices, edges=()):
        vertices = tuple(
            v if isinstance(v, Vertex) else Vertex(*v) for v in vertices
        )
        if not vertices:
            raise GraphSyntaxError("a dual graph needs at least one vertex")
        ids = [v.id for v in vertices]
        if len(set(ids)) != len(ids):
            raise GraphSyntaxError("duplicate vertex ids")
        for v in vertices:
            if not isinstance(v.weight, int) or isinstance(v.weight, bool):
                raise GraphSyntaxError(f"weight of {v.id} must be an integer")
            if not isinstance(v.genus, int) or v.genus < 0:
                raise GraphSyntaxError(f"genus of {v.id} must be a non-negative integer")
            if v.weight < 2:
                raise NotMinimalError(
                    f"curve {v.id} has self-intersection {-v.weight}; "
                    "not minimal (weights must be >= 2)"
                )
        n = len(vertices)
        norm = []
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise GraphSyntaxError(f"edge ({i}, {j}) out of range")
            if i == j:
                raise GraphSyntaxError(f"self-loop at {vertices[i].id}")
            norm.append((min(i, j), max(i, j)))
        self.vertices = vertices
        self.edges = tuple(sorted(norm))
        if not self._connected():
            raise DisconnectedGraphError("dual graph of one point must be connected")

    def _connected(self):
        adj = self.adjacency
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.vertices)

    @cached_property
    def adjacency(self):
        adj = [set() for _ in self.vertices]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def __len__(self):
        return len(self.vertices)

    @property
    def ids(self):
        return [v.id for v in self.vertices]

    @property
    def weights(self):
        return [v.weight for v in self.vertices]

    def index(self, vid):
        return self.ids.index(vid)

    def multiplicity(self, i, j):
        a, b = min(i, j), max(i, j)
        return self.edges.count((a, b))

    @cached_property
    def integer_rows(self):
        n = len(self.vertices)
        rows = [[0] * n for _ in range(n)]
        for i, v in enumerate(self.vertices):
            rows[i][i] = -v.weight
        for i, j in self.edges:
            rows[i][j] += 1
            rows[j][i] += 1
        return rows

    @cached_property
    def matrix(self) -> IntersectionMatrix:
        return IntersectionMatrix(self.integer_rows)

    def is_tree(self):
        return len(self.edges) == len(self.vertices) - 1 and len(set(self.edges)) == len(self.edges)

    def is_snc_rational_tree(self):
        """Tree of smooth rational curves meeting transversally once."""
        return self.is_tree() and all(v.genus == 0 for v in self.vertices)

    def is_ade(self):
        return self.is_snc_rational_tree() and all(v.weight == 2 for v in self.vertices)

    def canonical(self):
        verts = tuple(sorted((v.id, v.weight, v.genus) for v in self.vertices))
        ids = self.ids
        edges = tuple(sorted(tuple(sorted((ids[i], ids[j]))) for i, j in self.edges))
        return verts, edges

    def __eq__(self, other):
        if not isinstance(other, DualGraph):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        ws = ",".join(f"{v.id}:{v.weight}" for v in self.vertices)
        return f"DualGraph({ws}; {len(self.edges)} edges)"

    def to_dict(self):
        verts, edges = self.canonical()
        return {
            "vertices": [{"id": i, "weight": w, "genus": g} for i, w, g in verts],
            "edges": [list(e) for e in edges],
        }


def serialize_graph(g: DualGraph) -> str:
    return json.dumps(g.to_dict(), sort_keys=True)


def graph_from_dict(doc) -> DualGraph:
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise GraphSyntaxError('graph document needs a "vertices" list')
    verts = doc["vertices"]
    if not isinstance(verts, list):
        raise GraphSyntaxError('"vertices" must be a list')
    vertices = []
    for item in verts:
        if not isinstance(item, dict) or "id" not in item or "weight" not in item:
            raise GraphSyntaxError(f"bad vertex entry {item!r}")
        extra = set(item) - {"id", "weight", "genus"}
        if extra:
            raise GraphSyntaxError(f"unknown vertex keys {sorted(extra)}")
        vertices.append(Vertex(str(item["id"]), item["weight"], item.get("genus", 0)))
    index = {v.id: k for k, v in enumerate(vertices)}
    edges = []
    for e in doc.get("edges", []):
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise GraphSyntaxError(f"bad edge entry {e!r}")
        try:
            edges.append((index[str(e[0])], index[str(e[1])]))
        except KeyError as exc:
            raise GraphSyntaxError(f"edge refers to unknown vertex {exc.args[0]!r}") from None
    return DualGraph(vertices, edges)


def parse_graph(text: str) -> DualGraph:
    """Parse the JSON graph document format.

    Raises GraphSyntaxError, NotMinimalError or DisconnectedGraphError.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(f"invalid JSON: {exc}") from None
    return graph_from_dict(doc)


# -- families ---------------------------------------------------------------

def _check_weights(ws):
    ws = list(ws)
    for w in ws:
        if not isinstance(w, int) or w < 2:
            raise NotMinimalError(f"weight {w!r} < 2: not a minimal resolution")
    return ws


def make_An(weights) -> DualGraph:
    """Chain C1 - C2 - ... - Cn."""
    ws = _check_weights(weights)
    if not ws:
        raise GraphError("A_n needs at least one curve")
    verts = [Vertex(f"C{i + 1}", w) for i, w in enumerate(ws)]
    return DualGraph(verts, [(i, i + 1) for i in range(len(ws) - 1)])


def make_Dn(weights, w_prime=2, w_dprime=2) -> DualGraph:
    """Chain C1..C(n-2) with leaves C1' and C1'' on the last chain curve."""
    ws = _check_weights(weights)
    if not ws:
        raise GraphError("D_n needs a chain of length >= 1")
    leaves = _check_weights([w_prime, w_dprime])
    k = len(ws)
    verts = [Vertex(f"C{i + 1}", w) for i, w in enumerate(ws)]
    verts += [Vertex("C1'", leaves[0]), Vertex("C1''", leaves[1])]
    edges = [(i, i + 1) for i in range(k - 1)] + [(k - 1, k), (k - 1, k + 1)]
    return DualGraph(verts, edges)


def make_star(center, arm_a, arm_b, arm_c=(2,)) -> DualGraph:
    """Star with centre C0 and three arms, each listed from its outer end.

    Arm names: C1.., C1'.., C1''..; the last curve of each arm meets C0.
    """
    arms = [_check_weights(a) for a in (arm_a, arm_b, arm_c)]
    if any(not a for a in arms):
        raise GraphError("every arm needs at least one curve")
    center = _check_weights([center])[0]
    verts, edges = [], []
    for arm, prime in zip(arms, ("", "'", "''")):
        start = len(verts)
        verts += [Vertex(f"C{i + 1}{prime}", w) for i, w in enumerate(arm)]
        edges += [(start + i, start + i + 1) for i in range(len(arm) - 1)]
    c0 = len(verts)
    verts.append(Vertex("C0", center))
    start = 0
    for arm in arms:
        start += len(arm)
        edges.append((start - 1, c0))
    return DualGraph(verts, edges)


# Arm weight lists of the fifteen E-type graphs (mu; arm A; arm B), arm C
# being a single (-2)-curve. Lists run from the outer end C1 towards C0;
# this orientation is pinned by the closed-form delta_x tests (types 10-13
# distinguish the two orientations).
E_TYPES = {
    1: ((2, 2), (2, 2)),
    2: ((2, 2), (3,)),
    3: ((3,), (3,)),
    4: ((2, 2, 2), (2, 2)),
    5: ((2, 2, 2), (3,)),
    6: ((4,), (2, 2)),
    7: ((4,), (3,)),
    8: ((2, 2, 2, 2), (2, 2)),
    9: ((2, 2, 2, 2), (3,)),
    10: ((2, 3), (2, 2)),
    11: ((2, 3), (3,)),
    12: ((3, 2), (2, 2)),
    13: ((3, 2), (3,)),
    14: ((5,), (2, 2)),
    15: ((5,), (3,)),
}


@dataclass(frozen=True)
class EnTypeDescriptor:
    type_id: int
    mu: int

    def __post_init__(self):
        if self.type_id not in E_TYPES:
            raise GraphError(f"E-type id must be in 1..15, got {self.type_id!r}")
        if not isinstance(self.mu, int) or self.mu < 2:
            raise NotMinimalError(f"central weight mu must be >= 2, got {self.mu!r}")

    @property
    def arm_a(self):
        return E_TYPES[self.type_id][0]

    @property
    def arm_b(self):
        return E_TYPES[self.type_id][1]

    def notation(self):
        a = ",".join(map(str, self.arm_a))
        b = ",".join(map(str, self.arm_b))
        return f"({self.mu};{a};{b})"


def make_En(desc, mu=None) -> DualGraph:
    """E-type graph number ``desc`` (descriptor, or type id plus ``mu``)."""
    if not isinstance(desc, EnTypeDescriptor):
        desc = EnTypeDescriptor(desc, mu)
    return make_star(desc.mu, desc.arm_a, desc.arm_b, (2,))


def dynkin(kind: str, n: int) -> DualGraph:
    """All-(-2) Dynkin graphs A_n, D_n (n >= 4), E_6, E_7, E_8."""
    kind = kind.upper()
    if kind == "A" and n >= 1:
        return make_An([2] * n)
    if kind == "D" and n >= 4:
        return make_Dn([2] * (n - 2))
    if kind == "E" and n in (6, 7, 8):
        return make_star(2, [2] * (n - 4), [2, 2], [2])
    raise GraphError(f"no Dynkin diagram {kind}_{n}")
