import csv
import io
import itertools

import pytest

from surfsing.atlas import (
    CSV_HEADER,
    EXCLUDED,
    EnumerationSpec,
    ShapedGraph,
    analyze,
    certify_prop1,
    enumerate_graphs,
    write_csv,
)
from surfsing.cycles import classify
from surfsing.lattice import is_negative_definite

from .oracles import chain_orbits, tree_canonical


def _labels(spec):
    return [sg.label() for sg in enumerate_graphs(spec)]


def test_small_chain_examples():
    assert _labels(EnumerationSpec(1, 3, ("chain",))) == ["2", "3"]
    assert _labels(EnumerationSpec(2, 2, ("chain",), min_vertices=2)) == ["2,2"]


def test_chain_count_n3_w3():
    got = list(enumerate_graphs(EnumerationSpec(3, 3, ("chain",))))
    expected = sum(len(chain_orbits(n, 3)) for n in (1, 2, 3))
    assert expected == 2 + 3 + 6
    assert len(got) == expected == 11


def test_spec_validation():
    for bad in [dict(max_vertices=3, max_weight=1), dict(max_vertices=0, max_weight=3),
                dict(max_vertices=3, max_weight=3, shapes=("ring",))]:
        with pytest.raises(ValueError):
            EnumerationSpec(**bad)


def _prufer_trees(n):
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(i for i in range(n) if degree[i] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [i for i in range(n) if degree[i] == 1]
        edges.append((u, v))
        yield edges


def _shape_of(n, edges):
    deg = [0] * n
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    if max(deg, default=0) <= 2:
        return "chain"
    branch = [v for v in range(n) if deg[v] >= 3]
    if len(branch) > 1 or deg[branch[0]] > 3:
        return None
    c = branch[0]
    leaves = sum(1 for i, j in edges if c in (i, j) and deg[i + j - c] == 1)
    return "fork" if leaves >= 2 else "star3"


@pytest.mark.parametrize("n", range(1, 7))
def test_dedup_matches_tree_isomorphism_oracle(n):
    """Enumerated graphs are exactly the weighted-tree isomorphism classes."""
    w = 3
    want = {s: set() for s in ("chain", "fork", "star3")}
    shapes = {}
    for edges in _prufer_trees(n):
        key = tuple(sorted(edges))
        if key not in shapes:
            shapes[key] = _shape_of(n, edges)
    for edges, shape in shapes.items():
        if shape is None:
            continue
        for ws in itertools.product(range(2, w + 1), repeat=n):
            want[shape].add(tree_canonical(ws, edges))
    for shape, classes in want.items():
        got = []
        for sg in enumerate_graphs(EnumerationSpec(n, w, (shape,), min_vertices=n)):
            _, ws, edges = sg.layout()
            got.append(tree_canonical(ws, edges))
        assert len(got) == len(set(got)), shape
        assert set(got) == classes, shape


def test_layout_names():
    sg = ShapedGraph("fork", (3, (2,), (4,), (2, 5)))
    ids, ws, edges = sg.layout()
    assert ids == ["C1", "C2", "C3", "C1'", "C1''"]
    assert ws == [2, 5, 3, 2, 4]
    g = sg.to_graph()
    assert g.adjacency[g.index("C3")] == {1, 3, 4}
    star = ShapedGraph("star3", (2, (2,), (2, 2), (2, 2, 2)))
    assert star.to_graph().ids[-1] == "C0"
    assert star.label() == "2;2;2,2;2,2,2"


def test_analyze_agrees_with_classify():
    for sg in enumerate_graphs(EnumerationSpec(5, 4)):
        row = analyze(sg)
        g = sg.to_graph()
        if row.kind == EXCLUDED:
            assert not is_negative_definite(g.matrix)
            continue
        sc = classify(g)
        assert row.kind == sc.kind.value and row.delta_x == sc.delta_x
        assert list(row.fundamental_cycle) == list(sc.fundamental_cycle)


def test_certify_chains_and_forks():
    rep = certify_prop1(EnumerationSpec(6, 5, ("chain",)))
    assert rep.ok and rep.equality_cases == 6
    rep = certify_prop1(EnumerationSpec(7, 4, ("fork",)))
    assert rep.ok and rep.equality_cases == 4  # D4..D7
    assert rep.counts[EXCLUDED] == 0


def test_equality_cases_are_ade():
    rep = certify_prop1(EnumerationSpec(8, 2))
    # A1..A8, D4..D8, E6..E8; the affine star (2;2,2;2,2;2,2) is excluded
    assert rep.ok and rep.equality_cases == 8 + 5 + 3
    assert rep.counts["RationalDoublePoint"] == 16
    assert rep.counts[EXCLUDED] == rep.total - 16


def test_excluded_graphs_are_logged():
    rep = certify_prop1(EnumerationSpec(7, 2, ("star3",)), keep_excluded=True)
    labels = {g.label(): why for g, why in rep.excluded}
    assert "2;2,2;2,2;2,2" in labels
    assert all("not negative definite" in why for why in labels.values())


def test_parallel_matches_serial():
    spec = EnumerationSpec(6, 4)
    a = certify_prop1(spec)
    b = certify_prop1(spec, jobs=2)
    assert a.counts == b.counts and a.equality_cases == b.equality_cases


def test_csv():
    spec = EnumerationSpec(4, 3)
    text = write_csv(spec)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == CSV_HEADER
    assert len(rows) - 1 == sum(1 for _ in enumerate_graphs(spec))
    buf = io.StringIO()
    write_csv(spec, buf)
    assert buf.getvalue() == text
    first = rows[1]
    assert first == ["chain", "2", "1", "RationalDoublePoint", "2", "C1:1"]
    chain33 = next(r for r in rows if r[:2] == ["chain", "3,3"])
    assert chain33[3:] == ["LogTerminal", "1", "C1:1 C2:1"]


def test_csv_count_chains_closed_form():
    # chains of length n in k weights up to reversal: (k^n + k^ceil(n/2)) / 2
    k = 4
    spec = EnumerationSpec(6, k + 1, ("chain",))
    rows = write_csv(spec).strip().split("\n")[1:]
    assert len(rows) == sum((k ** n + k ** ((n + 1) // 2)) // 2 for n in range(1, 7))
