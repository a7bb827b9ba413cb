"""Vertex cover ideals, weighted gadget graphs and their homological invariants."""

from .betti import (BettiBudgetError, BettiTable, betti_hochster, betti_koszul, betti_table,
                    has_linear_resolution, is_componentwise_linear, reduced_homology, regularity,
                    stanley_reisner)
from .complex import SimplicialComplex, deletion, independence_complex, link
from .gadget import (LayeredGraph, build_gadget, edge_power, leaf_collapse, link_decomposition,
                     polarization_naming, uniform)
from .graph import (Graph, GraphClass, GraphError, add_whisker, are_isomorphic, build_graph,
                    classify, cycle_graph, delete_vertices, enumerate_trees, neighborhood,
                    path_graph, star_graph, strip_isolated)
from .ideal import (IdealError, MonomialIdeal, alexander_dual, component, cover_ideal, edge_ideal,
                    intersect, linear_quotients_order, max_gen_degree, minimal_vertex_covers,
                    polarize, power, symbolic_power_cover)
from .vd import (Certificate, Refutation, dominated_shedding, guided_vd_tree_gadget,
                 guided_vd_unicyclic, is_shedding_vertex, is_vertex_decomposable,
                 replay_certificate, validate_refutation)

__version__ = "0.1.0"
