"""Verification suites over small graph families.

Each suite takes a frozen config dataclass, runs every instance it
enumerates, and returns a :class:`SuiteReport`.  A failing instance always
carries a reproducer (graph JSON, weight tuple, failing stage), and every
suite is deterministic given its config.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Callable, Iterable

from .betti import is_componentwise_linear, regularity
from .gadget import (build_gadget, collapse_map, layer_label, leaf_collapse, link_decomposition,
                     uniform)
from .graph import (Graph, add_whisker, are_isomorphic, build_graph, cycle_graph,
                    delete_vertices, enumerate_trees, is_bipartite, is_isomorphism, neighborhood,
                    strip_isolated)
from .ideal import (cover_ideal, is_linear_quotients_order, linear_quotients_order,
                    max_gen_degree, polarize, power, symbolic_power_cover)
from .vd import (Certificate, Refutation, guided_vd_tree_gadget, guided_vd_unicyclic,
                 is_vertex_decomposable, replay_certificate, shedding_vertices,
                 validate_refutation)

DEFAULT_SEED = 20240611


@dataclass
class InstanceResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    reproducer: dict | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "InstanceResult":
        return cls(**data)


@dataclass
class SuiteReport:
    suite: str
    params: dict
    instances: list[InstanceResult]
    wall_time: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.instances)

    @property
    def count(self) -> int:
        return len(self.instances)

    def failures(self) -> list[InstanceResult]:
        return [r for r in self.instances if not r.passed]

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.suite}: {self.count - len(self.failures())}/{self.count} "
                f"instances in {self.wall_time:.2f}s")

    def to_dict(self) -> dict:
        return {"suite": self.suite, "params": self.params, "passed": self.passed,
                "count": self.count, "wall_time": self.wall_time,
                "instances": [r.to_dict() for r in self.instances]}

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteReport":
        return cls(data["suite"], data["params"],
                   [InstanceResult.from_dict(r) for r in data["instances"]], data["wall_time"])

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _reproducer(G: Graph, k=None, stage: str = "", **extra) -> dict:
    out = {"graph": G.to_dict(), "stage": stage}
    if k is not None:
        out["k"] = list(k) if not isinstance(k, int) else k
    out.update(extra)
    return out


def _run(suite: str, params: dict, body: Callable[[], Iterable[InstanceResult]]) -> SuiteReport:
    start = time.perf_counter()
    instances = list(body())
    return SuiteReport(suite, params, instances, time.perf_counter() - start)


def _attempt(name: str, G: Graph, k, fn: Callable[[], dict]) -> InstanceResult:
    """Run one instance; a failed check or an exception becomes a failing result."""
    try:
        details = fn()
    except Exception as exc:  # reported, never swallowed silently
        return InstanceResult(name, False, {"error": repr(exc)}, _reproducer(G, k, "exception"))
    stage = details.pop("failed_stage", None)
    if stage:
        return InstanceResult(name, False, details, _reproducer(G, k, stage))
    return InstanceResult(name, True, details)


# -- graph pools -------------------------------------------------------------------

def tree_pool(n_max: int, n_min: int = 1) -> list[tuple[str, Graph]]:
    out = []
    for n in range(n_min, n_max + 1):
        for i, T in enumerate(enumerate_trees(n)):
            out.append((f"tree{n}.{i}", T))
    return out


def whiskered_cycles(lengths: Iterable[int]) -> list[tuple[str, Graph]]:
    """Cycle C_n with one whisker, once per attachment position."""
    out = []
    for n in lengths:
        C = cycle_graph(n)
        for v in C.vertices:
            out.append((f"C{n}+w@{v}", add_whisker(C, v, f"y{v[1:]}")))
    return out


def example_graphs() -> dict[str, tuple[Graph, tuple[int, ...]]]:
    """The three small graphs whose weighted gadgets fail vertex decomposability."""
    xs = [f"x{i}" for i in range(1, 6)]
    five = [("x1", "x5"), ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x1", "x4")]
    chorded = [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x1", "x4"), ("x1", "x3")]
    return {
        "bipartite-5": (build_graph(xs, five), (1, 2, 1, 1, 2)),
        "chordal-5": (build_graph(xs, five + [("x1", "x3")]), (1, 2, 1, 1, 2, 1)),
        "square-with-chord": (build_graph(xs[:4], chorded), (2,) * 5),
    }


def reference_tree() -> Graph:
    """Seven-vertex tree with a degree-3 support b on edges e1, e2, e3."""
    return build_graph(["a", "b", "c", "d", "e", "f", "g"],
                       [("a", "b"), ("c", "b"), ("d", "b"), ("d", "e"), ("e", "f"), ("e", "g")])


def induced_four_cycle(G: Graph) -> tuple[str, ...] | None:
    """Some 4 vertices inducing a cycle, or None."""
    adj = G.adjacency
    for a in G.vertices:
        for b, d in ((b, d) for b in adj[a] for d in adj[a] if b < d):
            if G.has_edge(b, d):
                continue
            for c in (adj[b] & adj[d]) - {a}:
                if not G.has_edge(a, c):
                    return (a, b, c, d)
    return None


# -- suites -------------------------------------------------------------------------

@dataclass(frozen=True)
class TreeGadgetConfig:
    n_max: int = 6
    k_max: int = 2
    uniform_max: int = 2
    random_tuples: int = 20
    seed: int = DEFAULT_SEED
    exhaustive_n: int = 6
    exhaustive_k: int = 2
    all_small_tuples: bool = True  # every tuple in {0..exhaustive_k}^(n-1) for n <= exhaustive_n


def _tree_tuples(T: Graph, cfg: TreeGadgetConfig, rng: random.Random) -> list[tuple[int, ...]]:
    m = len(T.edges)
    tuples = [uniform(T, k) for k in range(0, cfg.uniform_max + 1)]
    tuples += [tuple(rng.randint(0, cfg.k_max) for _ in range(m)) for _ in range(cfg.random_tuples)]
    if cfg.all_small_tuples and len(T.vertices) <= cfg.exhaustive_n:
        tuples += list(product(range(cfg.exhaustive_k + 1), repeat=m))
    return list(dict.fromkeys(tuples))


def suite_tree_gadgets(cfg: TreeGadgetConfig = TreeGadgetConfig()) -> SuiteReport:
    """Guided certificate for every tree gadget, cross-checked by exhaustive search on small cases."""
    def body():
        rng = random.Random(cfg.seed)
        for name, T in tree_pool(cfg.n_max):
            for k in _tree_tuples(T, cfg, rng):
                def check(T=T, k=k):
                    lg = build_gadget(T, k)
                    cert = guided_vd_tree_gadget(T, k)
                    d = {"n": len(T.vertices), "gadget_vertices": len(lg.graph.vertices),
                         "certificate_nodes": cert.nodes()}
                    if not replay_certificate(lg.graph, cert):
                        d["failed_stage"] = "guided certificate replay"
                        return d
                    if len(T.vertices) <= cfg.exhaustive_n and max(k, default=0) <= cfg.exhaustive_k:
                        out = is_vertex_decomposable(lg.graph)
                        d["exhaustive"] = isinstance(out, Certificate)
                        if not d["exhaustive"]:
                            d["failed_stage"] = "exhaustive checker disagrees"
                    return d
                yield _attempt(f"{name} k={k}", T, k, check)
    return _run("tree-gadgets", asdict(cfg), body)


@dataclass(frozen=True)
class TreePowerConfig:
    n_max: int = 6
    k_max: int = 2
    cross_check_engine: str | None = None  # also run the direct componentwise check with this engine


def suite_tree_powers(cfg: TreePowerConfig = TreePowerConfig()) -> SuiteReport:
    """Powers of tree cover ideals admit linear quotients and are componentwise linear."""
    def body():
        for name, T in tree_pool(cfg.n_max, 2):
            J = cover_ideal(T)
            for k in range(1, cfg.k_max + 1):
                def check(T=T, k=k):
                    I = power(J, k)
                    order = linear_quotients_order(I)
                    d = {"generators": len(I.gens), "lq_order": order is not None}
                    if order is None or not is_linear_quotients_order(I, order):
                        d["failed_stage"] = "linear quotients order"
                        return d
                    ok, report = is_componentwise_linear(I)
                    d["componentwise_linear"] = ok
                    if not ok:
                        d["failed_stage"] = f"componentwise linearity {report}"
                        return d
                    if cfg.cross_check_engine:
                        ok2, _ = is_componentwise_linear(I, cfg.cross_check_engine)
                        if not ok2:
                            d["failed_stage"] = f"componentwise linearity ({cfg.cross_check_engine})"
                    return d
                yield _attempt(f"{name} s={k}", T, k, check)
    return _run("tree-powers", asdict(cfg), body)


@dataclass(frozen=True)
class UnicyclicConfig:
    cycles: tuple[int, ...] = (4, 6)
    k_max: int = 2


def suite_unicyclic_gadgets(cfg: UnicyclicConfig = UnicyclicConfig()) -> SuiteReport:
    """Uniform gadgets of whiskered even cycles are certified by both checkers."""
    def body():
        for name, G in whiskered_cycles(cfg.cycles):
            for k in range(1, cfg.k_max + 1):
                def check(G=G, k=k):
                    lg = build_gadget(G, uniform(G, k))
                    cert = guided_vd_unicyclic(G, k)
                    d = {"gadget_vertices": len(lg.graph.vertices)}
                    if not replay_certificate(lg.graph, cert):
                        d["failed_stage"] = "guided certificate replay"
                        return d
                    out = is_vertex_decomposable(lg.graph)
                    d["exhaustive"] = isinstance(out, Certificate)
                    if not d["exhaustive"]:
                        d["failed_stage"] = "exhaustive checker rejects"
                    elif not replay_certificate(lg.graph, out):
                        d["failed_stage"] = "exhaustive certificate replay"
                    return d
                yield _attempt(f"{name} k={k}", G, k, check)
    return _run("unicyclic-gadgets", asdict(cfg), body)


@dataclass(frozen=True)
class RegularityConfig:
    n_max: int = 6
    s_max: int = 2
    cycles: tuple[int, ...] = (4, 6)
    trees_componentwise: bool = False  # also check componentwise linearity for trees


def suite_regularity(cfg: RegularityConfig = RegularityConfig()) -> SuiteReport:
    """reg(J^s) = s * deg(J) on trees; on whiskered cycles the same for symbolic powers plus componentwise linearity."""
    def body():
        for name, T in tree_pool(cfg.n_max, 2):
            J = cover_ideal(T)
            for s in range(1, cfg.s_max + 1):
                def check(J=J, s=s):
                    I = power(J, s)
                    reg, want = regularity(I), s * max_gen_degree(J)
                    d = {"reg": reg, "expected": want}
                    if reg != want:
                        d["failed_stage"] = "regularity"
                    elif cfg.trees_componentwise and not is_componentwise_linear(I)[0]:
                        d["failed_stage"] = "componentwise linearity"
                    return d
                yield _attempt(f"{name} s={s}", T, s, check)
        for name, G in whiskered_cycles(cfg.cycles):
            J = cover_ideal(G)
            for s in range(1, cfg.s_max + 1):
                def check(G=G, J=J, s=s):
                    I = symbolic_power_cover(G, s)
                    reg, want = regularity(I), s * max_gen_degree(J)
                    ok, report = is_componentwise_linear(I)
                    d = {"reg": reg, "expected": want, "componentwise_linear": ok}
                    if reg != want:
                        d["failed_stage"] = "regularity"
                    elif not ok:
                        d["failed_stage"] = f"componentwise linearity {report}"
                    return d
                yield _attempt(f"{name} s={s}", G, s, check)
    return _run("regularity", asdict(cfg), body)


def suite_counterexamples() -> SuiteReport:
    """Vertex decomposable bases whose weighted gadgets are not vertex decomposable."""
    def body():
        for name, (G, k) in example_graphs().items():
            def check(G=G, k=k, name=name):
                d = {}
                base = is_vertex_decomposable(G)
                if not isinstance(base, Certificate) or not replay_certificate(G, base):
                    d["failed_stage"] = "base graph certificate"
                    return d
                lg = build_gadget(G, k)
                out = is_vertex_decomposable(lg.graph)
                d["gadget_vertices"] = len(lg.graph.vertices)
                if not isinstance(out, Refutation) or not validate_refutation(lg.graph, out):
                    d["failed_stage"] = "gadget refutation"
                    return d
                if name == "bipartite-5":
                    shed = shedding_vertices(lg.graph)
                    d["shedding_vertices"] = shed
                    x = layer_label("x1", 1)
                    if shed != [x]:
                        d["failed_stage"] = "unique shedding vertex"
                        return d
                    cyc = induced_four_cycle(delete_vertices(lg.graph, [x]))
                    d["induced_four_cycle"] = list(cyc) if cyc else None
                    if cyc is None:
                        d["failed_stage"] = "induced 4-cycle after deletion"
                return d
            yield _attempt(name, G, k, check)
    return _run("counterexamples", {}, body)


@dataclass(frozen=True)
class StructuralConfig:
    n_max: int = 6
    k_max: int = 2
    symbolic_k_max: int = 3
    bipartite_n_max: int = 6


def _check_collapse(T: Graph, k) -> str | None:
    G = build_gadget(T, k).graph
    for leaf in T.vertices:
        if T.degree(leaf) != 1:
            continue
        (b,) = T.adjacency[leaf]
        lhs = strip_isolated(delete_vertices(G, [layer_label(b, 1)]))
        _, k2 = leaf_collapse(T, k, leaf)
        rhs = strip_isolated(build_gadget(T, k2).graph)
        if not is_isomorphism(rhs, lhs, collapse_map(T, k, leaf)):
            return f"leaf collapse at {leaf}"
        if not are_isomorphic(rhs, lhs)[0]:
            return f"leaf collapse isomorphism search at {leaf}"
    return None


def _check_link(T: Graph, k) -> str | None:
    G = build_gadget(T, k).graph
    for b in T.vertices:
        if not any(T.degree(y) == 1 for y in T.adjacency[b]):
            continue
        x = layer_label(b, 1)
        lhs = strip_isolated(delete_vertices(G, neighborhood(G, x, closed=True)))
        rhs, f = link_decomposition(T, k, b)
        if not is_isomorphism(rhs, lhs, f):
            return f"link map at {b}"
    return None


def suite_structural(cfg: StructuralConfig = StructuralConfig()) -> SuiteReport:
    """Leaf collapse, link map, gadget/polarization identity, and symbolic = ordinary on bipartite graphs."""
    def body():
        for name, T in tree_pool(cfg.n_max, 2):
            for k in product(range(cfg.k_max + 1), repeat=len(T.edges)):
                def check(T=T, k=k):
                    bad = _check_collapse(T, k) or _check_link(T, k)
                    return {"failed_stage": bad} if bad else {}
                yield _attempt(f"{name} k={k}", T, k, check)
            for k in range(1, cfg.k_max + 1):
                def polarization_identity(T=T, k=k):
                    lhs = cover_ideal(build_gadget(T, uniform(T, k)).graph)
                    rhs = polarize(symbolic_power_cover(T, k))
                    return {} if lhs.same_generators(rhs) else {"failed_stage": "gadget cover ideal vs polarization"}
                yield _attempt(f"{name} polarization k={k}", T, k, polarization_identity)
        for name, G in bipartite_pool(cfg.bipartite_n_max):
            J = cover_ideal(G)
            for k in range(1, cfg.symbolic_k_max + 1):
                def sym(G=G, J=J, k=k):
                    ok = power(J, k).same_generators(symbolic_power_cover(G, k))
                    return {} if ok else {"failed_stage": "symbolic vs ordinary power"}
                yield _attempt(f"{name} symbolic k={k}", G, k, sym)
    return _run("structural", asdict(cfg), body)


def bipartite_pool(n_max: int) -> list[tuple[str, Graph]]:
    """Trees, whiskered even cycles and the bipartite counterexample base, up to ``n_max`` vertices."""
    pool = tree_pool(n_max, 2)
    pool += [(n, G) for n, G in whiskered_cycles((4, 6)) if len(G.vertices) <= n_max]
    pool += [(f"C{n}", cycle_graph(n)) for n in (4, 6) if n <= n_max]
    G, _ = example_graphs()["bipartite-5"]
    pool.append(("bipartite-5", G))
    return [(n, G) for n, G in pool if is_bipartite(G)]


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "tree-gadgets": suite_tree_gadgets,
    "tree-powers": suite_tree_powers,
    "unicyclic-gadgets": suite_unicyclic_gadgets,
    "regularity": suite_regularity,
    "counterexamples": suite_counterexamples,
    "structural": suite_structural,
}

CONFIGS = {
    "tree-gadgets": TreeGadgetConfig,
    "tree-powers": TreePowerConfig,
    "unicyclic-gadgets": UnicyclicConfig,
    "regularity": RegularityConfig,
    "structural": StructuralConfig,
}


def run_suite(name: str, **overrides) -> SuiteReport:
    """Run a suite by name, overriding config fields it actually has (others are ignored)."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    cfg_cls = CONFIGS.get(name)
    if cfg_cls is None:
        return SUITES[name]()
    fields = cfg_cls.__dataclass_fields__
    cfg = cfg_cls(**{k: v for k, v in overrides.items() if k in fields and v is not None})
    return SUITES[name](cfg)
