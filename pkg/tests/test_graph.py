import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from semicoclass import graph as gr
from semicoclass import semigroup as sg
from semicoclass.graph import CoclassGraph, Vertex


def forest(parents, labels=None, dims=None):
    """Small synthetic forest: ``parents[i]`` is an index or None."""
    if dims is None:
        dims = []
        for par in parents:
            dims.append(0 if par is None else dims[par] + 1)
    labels = labels or [1] * len(parents)
    verts = [Vertex(f"v{i}", dims[i], labels[i], None if par is None else f"v{par}", True, (), [])
             for i, par in enumerate(parents)]
    return CoclassGraph({}, sorted(verts, key=lambda v: v.dim))


@pytest.fixture(scope="module")
def g1():
    return gr.build_graph(1, 3, 2, 10)


def test_coclass_zero_is_a_path():
    g = gr.build_graph(0, 5, 1, 8)
    assert [v.dim for v in g.vertices] == list(range(8))
    assert all(v.label == 1 for v in g.vertices)
    assert gr.roots(g) == ["0.0"]
    assert gr.alive_path(g, "0.0", 7) == [f"{i}.0" for i in range(7)]


def test_graph_invariants(g1):
    levels = sg.census(1, 2, 10)
    for v in g1.vertices:
        if g1.parent(v.id):
            assert g1[g1.parent(v.id)].dim == v.dim - 1
    for dim in g1.dims():
        assert sum(v.label for v in g1.level(dim)) == len(levels[dim + 1])
    assert gr.roots(g1) == ["2.0"]
    assert gr.maximal_trees(g1) == ["2.0"]


def test_parameter_checks():
    with pytest.raises(gr.InvalidParameters):
        gr.build_graph(1, 4, 2, 8)
    with pytest.raises(gr.InvalidParameters):
        gr.build_graph(2, 3, 2, 4)
    with pytest.raises(gr.EmptyGraph):
        gr.build_graph(1, 3, 3, 6)


def test_json_round_trip(g1):
    g = CoclassGraph(g1.params, g1.vertices, gr.analyze(g1))
    text = gr.export_json(g)
    back = gr.import_json(text)
    assert gr.export_json(back) == text
    assert gr.forest_code(back) == gr.forest_code(g1)
    rep = back.reports[0]
    assert isinstance(rep, gr.PeriodicityReport) and gr.verify_report(back, rep)


def test_dot_round_trip(g1):
    nodes, edges = gr.parse_dot(gr.export_dot(g1))
    assert nodes == {v.id: (v.dim, v.label, not v.commutative) for v in g1.vertices}
    assert sorted(edges) == sorted(g1.edges())


def test_tampered_report_fails(g1):
    rep = gr.detect_periodicity(g1, "2.0")
    assert gr.verify_report(g1, rep)
    rep.families[0].samples[0] = (0, 99)
    assert not gr.verify_report(g1, rep)


# ---------------------------------------------------------------- tree codes

def _iso_brute(g, a, h, b):
    ca, cb = g.children(a), h.children(b)
    if len(ca) != len(cb):
        return False
    return any(all(_iso_brute(g, x, h, y) for x, y in zip(ca, perm))
               for perm in itertools.permutations(cb))


random_trees = st.integers(1, 7).flatmap(
    lambda n: st.tuples(*[st.just(None)] + [st.integers(0, i - 1) for i in range(1, n)]))


@given(random_trees, random_trees)
@settings(max_examples=150, deadline=None)
def test_tree_code_matches_brute_force_isomorphism(a, b):
    g, h = forest(list(a)), forest(list(b))
    same = gr.tree_code(g) == gr.tree_code(h)
    assert same == _iso_brute(g, "v0", h, "v0")


def test_truncated_code():
    g = forest([None, 0, 1, 2])
    h = forest([None, 0, 1, 2, 2])
    assert gr.tree_code(g, 2) == gr.tree_code(h, 2)
    assert gr.tree_code(g, 3) != gr.tree_code(h, 3)


# ---------------------------------------------------------------- alive, reach

def test_alive_with_reach():
    # 0 - 1 - 2 - 3 - 4 main line, 1 - 5 - 6 side branch of depth 2
    g = forest([None, 0, 1, 2, 3, 1, 5])
    assert gr.alive_vertices(g, 3) == {"v0", "v1", "v2", "v5"}
    assert gr.maximal_trees(g, 3) == ["v2", "v5"]
    assert gr.alive_vertices(g, 3, 4) == {"v0", "v1", "v2"}
    assert gr.maximal_trees(g, 3, 4) == ["v0"]
    assert gr.alive_path(g, "v0", 3, 4) == ["v0", "v1", "v2"]
    with pytest.raises(gr.NoAlivePath):
        gr.alive_path(g, "v0", 3)
    with pytest.raises(ValueError):
        gr.alive_vertices(g, 4, 3)
    with pytest.raises(ValueError):
        gr.alive_vertices(g, 3, 5)


# ---------------------------------------------------------------- interpolation

@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.integers(0, 3))
@settings(max_examples=100, deadline=None)
def test_interpolate_recovers_polynomials(coeffs, extra):
    pts = [(x, sum(c * x ** i for i, c in enumerate(coeffs))) for x in range(len(coeffs) + extra)]
    got = gr.interpolate(pts)
    want = list(coeffs)
    while len(want) > 1 and want[-1] == 0:
        want.pop()
    assert got == [Fraction(c) for c in want]


def test_family_polynomial_str_and_fit():
    f = gr.FamilyPolynomial("x", gr.interpolate([(0, 1), (1, 2), (2, 5)]), [(0, 1), (1, 2), (2, 5)])
    assert f.degree == 2 and f.fits() and str(f) == "x^2 + 1"


def test_synthetic_periodic_tree():
    # a main line with a twig of label 2 on every vertex, so (1, 1) is periodic
    parents, labels, main = [None], [1], 0
    for _ in range(6):
        parents += [main, main]
        labels += [1, 2]
        main = len(parents) - 2
    g = forest(parents, labels)
    rep = gr.detect_periodicity(g, "v0", horizon=5)
    assert (rep.defect, rep.period, rep.strong) == (1, 1, True)
    assert all(f.coefficients == [Fraction(f.samples[0][1])] for f in rep.families)
    assert gr.verify_report(g, rep)
