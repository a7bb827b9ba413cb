"""Print the three non-vertex-decomposable gadgets with their refutations and Betti tables."""

from covergadget.betti import betti_table
from covergadget.gadget import build_gadget
from covergadget.harness import example_graphs
from covergadget.ideal import cover_ideal
from covergadget.vd import Certificate, is_vertex_decomposable, shedding_vertices


def main():
    for name, (G, k) in example_graphs().items():
        gad = build_gadget(G, k).graph
        base_ok = isinstance(is_vertex_decomposable(G), Certificate)
        out = is_vertex_decomposable(gad)
        print(f"== {name}: edges {list(G.edges)}, weights {k}")
        print(f"   base vertex decomposable: {base_ok}")
        print(f"   gadget: {len(gad.vertices)} vertices, {len(gad.edges)} edges, "
              f"vertex decomposable: {isinstance(out, Certificate)}")
        print(f"   shedding vertices of the gadget: {shedding_vertices(gad)}")
        if not isinstance(out, Certificate):
            for a in out.attempts:
                print(f"     {a.vertex}: {a.failure} {list(a.witness)}")
        print("   Betti table of the gadget's cover ideal:")
        print("\n".join("     " + line for line in betti_table(cover_ideal(gad)).text().splitlines()))


if __name__ == "__main__":
    main()
