import json

import pytest
from hypothesis import given, settings

from covergadget.complex import independence_complex
from covergadget.gadget import build_gadget, layer_label, uniform
from covergadget.graph import (Graph, GraphError, add_whisker, build_graph, cycle_graph,
                               delete_vertices, enumerate_trees, path_graph, star_graph)
from covergadget.harness import example_graphs, induced_four_cycle, reference_tree, whiskered_cycles
from covergadget.vd import (EDGELESS, Certificate, Refutation, VDBudgetError,
                            dominated_shedding, guided_vd_tree_gadget, guided_vd_unicyclic,
                            is_shedding_vertex, is_vertex_decomposable, replay_certificate,
                            shedding_vertices, validate_refutation)
from conftest import graphs, weighted_trees
from oracles import independent_sets, vd_by_definition

FIVE, FIVE_K = example_graphs()["bipartite-5"]


def brute_shedding(G, x):
    """Every independent set of G - N[x] extends by a neighbour of x."""
    nbrs = G.adjacency[x]
    rest = delete_vertices(G, nbrs | {x})
    for C in independent_sets(rest):
        if not any(not (G.adjacency[y] & C) for y in nbrs):
            return False
    return True


def test_shedding_examples():
    assert is_shedding_vertex(FIVE, "x1")[0]
    ok, witness = is_shedding_vertex(cycle_graph(4), "x1")
    assert not ok and witness == {"x3"}
    assert is_shedding_vertex(path_graph(2), "x1")[0]
    with pytest.raises(GraphError):
        is_shedding_vertex(path_graph(2), "zz")


def test_dominated_examples():
    assert dominated_shedding(FIVE, "x1")
    assert not any(dominated_shedding(cycle_graph(4), x) for x in cycle_graph(4).vertices)
    W = add_whisker(cycle_graph(4), "x1", "y")
    assert dominated_shedding(W, "x1")


@given(graphs(max_n=8))
def test_shedding_matches_brute_force(G):
    for x in G.vertices:
        ok, witness = is_shedding_vertex(G, x)
        assert ok == brute_shedding(G, x)
        if dominated_shedding(G, x):
            assert ok
        if not ok:
            C = set(witness)
            assert not C & (G.adjacency[x] | {x})
            assert all(G.adjacency[y] & C for y in G.adjacency[x])


@settings(max_examples=80)
@given(graphs(max_n=7))
def test_vd_matches_facet_definition(G):
    out = is_vertex_decomposable(G)
    assert isinstance(out, Certificate) == vd_by_definition(independence_complex(G).facet_set())
    if isinstance(out, Certificate):
        assert replay_certificate(G, out)
    else:
        assert validate_refutation(G, out)


def test_simple_cases():
    assert is_vertex_decomposable(Graph(("a", "b", "c"))) is EDGELESS
    assert isinstance(is_vertex_decomposable(cycle_graph(4)), Refutation)
    assert isinstance(is_vertex_decomposable(cycle_graph(5)), Certificate)
    with pytest.raises(VDBudgetError):
        is_vertex_decomposable(path_graph(30))


def test_example_gadget_refuted_with_unique_shedding_vertex():
    G = build_gadget(FIVE, FIVE_K).graph
    out = is_vertex_decomposable(G)
    assert isinstance(out, Refutation) and validate_refutation(G, out)
    assert shedding_vertices(G) == [layer_label("x1", 1)]
    cyc = induced_four_cycle(delete_vertices(G, [layer_label("x1", 1)]))
    assert cyc is not None and set(cyc) == {layer_label("x2", 1), layer_label("x1", 2),
                                             layer_label("x4", 1), layer_label("x3", 1)}


@pytest.mark.parametrize("name", list(example_graphs()))
def test_counterexample_bases_vd_gadgets_not(name):
    G, k = example_graphs()[name]
    base = is_vertex_decomposable(G)
    assert isinstance(base, Certificate) and replay_certificate(G, base)
    gad = build_gadget(G, k).graph
    out = is_vertex_decomposable(gad)
    assert isinstance(out, Refutation) and validate_refutation(gad, out)


def test_certificate_json_round_trip():
    G = build_gadget(path_graph(4), (2, 1, 2)).graph
    cert = is_vertex_decomposable(G)
    again = Certificate.from_dict(json.loads(json.dumps(cert.to_dict())))
    assert replay_certificate(G, again)
    ref = is_vertex_decomposable(build_gadget(FIVE, FIVE_K).graph)
    back = Refutation.from_dict(json.loads(json.dumps(ref.to_dict())))
    assert validate_refutation(build_gadget(FIVE, FIVE_K).graph, back)


def test_tampered_evidence_is_rejected():
    P3 = path_graph(3)
    assert not replay_certificate(P3, Certificate("x1", EDGELESS, EDGELESS))
    assert not replay_certificate(P3, EDGELESS)
    C4 = cycle_graph(4)
    ref = is_vertex_decomposable(C4)
    forged = Refutation(ref.vertices, ref.attempts[:-1])
    assert not validate_refutation(C4, forged)
    assert not validate_refutation(P3, ref)


def test_guided_tree_examples():
    cert = guided_vd_tree_gadget(path_graph(3), (1, 1))
    assert cert.depth() <= 2 and replay_certificate(build_gadget(path_graph(3), (1, 1)).graph, cert)
    T = reference_tree()
    assert guided_vd_tree_gadget(T, (0,) * 6) is EDGELESS
    k = (2, 1, 1, 1, 2, 2)
    assert replay_certificate(build_gadget(T, k).graph, guided_vd_tree_gadget(T, k))
    with pytest.raises(GraphError):
        guided_vd_tree_gadget(cycle_graph(4), (1,) * 4)


@given(weighted_trees(max_n=7, max_k=3))
def test_guided_tree_certificates_replay(tk):
    T, k = tk
    assert replay_certificate(build_gadget(T, k).graph, guided_vd_tree_gadget(T, k))


@pytest.mark.parametrize("n", range(1, 7))
def test_guided_and_exhaustive_agree_uniform(n):
    for T in enumerate_trees(n):
        for k in range(3):
            G = build_gadget(T, uniform(T, k)).graph
            assert isinstance(is_vertex_decomposable(G), Certificate)


@pytest.mark.parametrize("name,G", whiskered_cycles((4, 6)))
@pytest.mark.parametrize("k", [1, 2])
def test_guided_unicyclic(name, G, k):
    gad = build_gadget(G, uniform(G, k)).graph
    assert replay_certificate(gad, guided_vd_unicyclic(G, k))
    assert isinstance(is_vertex_decomposable(gad), Certificate)


def test_guided_unicyclic_two_steps():
    G = add_whisker(cycle_graph(4), "x1", "y")
    cert = guided_vd_unicyclic(G, 2)
    assert cert.vertex == layer_label("x1", 1) and cert.delete.vertex == layer_label("x1", 2)


def test_guided_unicyclic_rejects():
    with pytest.raises(GraphError):
        guided_vd_unicyclic(add_whisker(cycle_graph(5), "x1"), 1)
    with pytest.raises(GraphError):
        guided_vd_unicyclic(add_whisker(cycle_graph(3), "x1"), 1)
    with pytest.raises(GraphError):
        guided_vd_unicyclic(cycle_graph(4), 1)
    with pytest.raises(GraphError):
        guided_vd_unicyclic(star_graph(3), 1)
    chord = build_graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d"), ("a", "c")])
    with pytest.raises(GraphError):
        guided_vd_unicyclic(chord, 1)
