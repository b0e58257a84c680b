"""Based cycles and the super-cyclicity hierarchy, on graphs small enough
to eyeball.

A cycle is "based on" an X-subset A when its X-vertices are exactly A.  A
graph is k-cyclic when every k-subset carries such a cycle, super-cyclic
when every subset of size >= 3 does.
"""

from supercyclic import (Bigraph, VertexSet, complete_bipartite,
                         construct_g3, find_based_cycle, is_k_cyclic,
                         is_super_cyclic, longest_cycle_length)


def show(g, label):
    print(f"== {label}: |X|={g.x_count} |Y|={g.y_count} "
          f"edges={g.edge_count}")
    for size in range(3, g.x_count + 1):
        rep = is_k_cyclic(g, size)
        print(f"   {size}-cyclic: {'yes' if rep.passed else 'no'}"
              + (f" (first failure {rep.witness})" if not rep.passed else ""))
    sc = is_super_cyclic(g)
    print(f"   super-cyclic: {'yes' if sc.passed else 'no'}")
    print(f"   longest cycle: {longest_cycle_length(g)} vertices")


def main():
    ring = Bigraph(3, 3, [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (1, 3)])
    show(ring, "hexagon ring")
    c = find_based_cycle(ring, VertexSet.of("X", [1, 2, 3]))
    print(f"   the one based cycle: {c}")
    print()

    show(complete_bipartite(4, 4), "complete K(4,4)")
    print()

    # the three-part construction: one vertex per part kills every cycle
    g = construct_g3(2, 1, 1, 3)
    show(g, "three-part construction (2,1,1) with delta=3")
    bad = VertexSet.of("X", [1, 3, 4])
    print(f"   base {bad}: "
          f"{find_based_cycle(g, bad) or 'no cycle, as designed'}")
    good = VertexSet.of("X", [1, 2, 3])
    print(f"   base {good}: {find_based_cycle(g, good)}")


if __name__ == "__main__":
    main()
