"""Hypergraphs, Berge cycles, and the incidence correspondence.

A Berge cycle with base v_1..v_l alternates distinct vertices and distinct
hyperedges, each edge containing its two flanking vertices.  In the
incidence bigraph (vertices on the X side, edges on the Y side) that is
precisely a cycle based on the base set, so every bigraph question has a
hypergraph reading.
"""

from supercyclic import (Hypergraph, check_condition, find_based_cycle,
                         hypergraph_of, incidence_graph, is_super_pancyclic,
                         serialize, VertexSet)


def main():
    triangle = Hypergraph(3, [{1, 2}, {2, 3}, {1, 3}])
    print("triangle as a hypergraph:")
    print(serialize(triangle), end="")
    inc = incidence_graph(triangle)
    print("its incidence bigraph:")
    print(serialize(inc), end="")
    assert hypergraph_of(inc) == triangle

    rep = is_super_pancyclic(triangle)
    print(f"super-pancyclic: {'yes' if rep.passed else 'no'}")
    c = find_based_cycle(inc, VertexSet.of("X", [1, 2, 3]))
    print(f"the Berge cycle, read off the incidence graph: {c}\n")

    # two copies of the same big edge: plenty of coverage, no third edge
    doubled = Hypergraph(3, [{1, 2, 3}, {1, 2, 3}])
    rep = is_super_pancyclic(doubled)
    print(f"doubled edge on three vertices: "
          f"{'yes' if rep.passed else 'no'} ({rep.detail})")

    # the condition transfers through the correspondence, too
    fan = Hypergraph(4, [{1, 2}, {1, 3}, {1, 4}, {2, 3, 4}])
    inc = incidence_graph(fan)
    print(f"\nstar-plus-rim on four vertices: "
          f"{check_condition(inc).describe()}")
    print(f"super-pancyclic: "
          f"{'yes' if is_super_pancyclic(fan).passed else 'no'}")


if __name__ == "__main__":
    main()
