import json

import pytest

from covergadget.graph import Graph, cycle_graph, is_bipartite
from covergadget.harness import (SUITES, InstanceResult, RegularityConfig, StructuralConfig,
                                 SuiteReport, TreeGadgetConfig, TreePowerConfig, UnicyclicConfig,
                                 _attempt, bipartite_pool, example_graphs, induced_four_cycle,
                                 run_suite, suite_counterexamples, suite_regularity,
                                 suite_structural, suite_tree_gadgets, suite_tree_powers,
                                 suite_unicyclic_gadgets, tree_pool, whiskered_cycles)


def test_pools():
    assert [len(tree_pool(n, n)) for n in range(1, 8)] == [1, 1, 1, 2, 3, 6, 11]
    ws = whiskered_cycles((4, 6))
    assert len(ws) == 10 and all(len(G.edges) == len(G.vertices) for _, G in ws)
    assert all(is_bipartite(G) for _, G in bipartite_pool(6))
    assert induced_four_cycle(cycle_graph(4)) is not None
    assert induced_four_cycle(cycle_graph(5)) is None


def test_example_graph_shapes():
    ex = example_graphs()
    assert [len(G.edges) for G, _ in ex.values()] == [5, 6, 5]
    assert all(len(k) == len(G.edges) for G, k in ex.values())


def test_tree_gadget_suite_small():
    rep = suite_tree_gadgets(TreeGadgetConfig(n_max=5, k_max=2, random_tuples=50))
    assert rep.passed and rep.count > 0
    assert any("exhaustive" in r.details for r in rep.instances)


def test_tree_gadget_suite_trivial():
    rep = suite_tree_gadgets(TreeGadgetConfig(n_max=3, k_max=0, uniform_max=0, random_tuples=0,
                                              all_small_tuples=False))
    assert rep.passed and rep.count == 3


def test_tree_gadget_suite_is_deterministic():
    cfg = TreeGadgetConfig(n_max=6, k_max=3, random_tuples=10, all_small_tuples=False, seed=7)
    a, b = suite_tree_gadgets(cfg), suite_tree_gadgets(cfg)
    assert [r.name for r in a.instances] == [r.name for r in b.instances]


def test_other_suites_pass():
    assert suite_tree_powers(TreePowerConfig(n_max=4)).passed
    assert suite_unicyclic_gadgets(UnicyclicConfig(cycles=(4,), k_max=2)).passed
    assert suite_regularity(RegularityConfig(n_max=4, cycles=(4,))).passed
    assert suite_counterexamples().passed
    assert suite_structural(StructuralConfig(n_max=4, bipartite_n_max=5)).passed


def test_report_round_trip():
    rep = suite_counterexamples()
    back = SuiteReport.from_dict(json.loads(rep.to_json()))
    assert back.to_dict() == rep.to_dict()
    assert rep.summary().startswith("PASS counterexamples: 3/3")


def test_failures_carry_reproducers():
    G = cycle_graph(4)

    def boom():
        raise RuntimeError("nope")

    bad = _attempt("x", G, (1, 2), boom)
    assert not bad.passed and bad.reproducer["graph"] == G.to_dict()
    assert bad.reproducer["k"] == [1, 2] and bad.reproducer["stage"] == "exception"
    staged = _attempt("y", G, 2, lambda: {"failed_stage": "regularity", "reg": 3})
    assert staged.reproducer["stage"] == "regularity" and staged.details == {"reg": 3}
    rep = SuiteReport("demo", {}, [staged, InstanceResult("z", True)], 0.0)
    assert not rep.passed and rep.failures() == [staged]
    assert Graph.from_dict(rep.to_dict()["instances"][0]["reproducer"]["graph"]) == G


def test_run_suite_by_name():
    assert set(SUITES) == {"tree-gadgets", "tree-powers", "unicyclic-gadgets", "regularity",
                           "counterexamples", "structural"}
    rep = run_suite("tree-powers", n_max=3, k_max=1, seed=1, s_max=5)
    assert rep.params["n_max"] == 3 and rep.passed
    with pytest.raises(KeyError):
        run_suite("nope")
