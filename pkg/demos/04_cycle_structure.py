"""Structure around one fixed cycle: successors, crossings, fans.

These are the workhorse quantities in degree-sum arguments: orient the
cycle, track each vertex's neighbors ahead and behind, count chord pairs
that cross, and certify how many disjoint paths an off-cycle vertex can
push onto the cycle.
"""

import random

from supercyclic import (BaseCycle, Bigraph, complete_bipartite,
                         crossing_bound_holds, crossings, max_fan,
                         successor_maps)


def main():
    k33 = complete_bipartite(3, 3)
    hexagon = BaseCycle((1, 2, 3), (1, 2, 3))
    print(f"cycle in K(3,3): {hexagon}")

    maps = successor_maps(hexagon)
    for side, idx in hexagon.sequence():
        v = (side, idx)
        print(f"   {side.lower()}{idx}: next x = x{maps.x_plus[v]}, "
              f"prev x = x{maps.x_minus[v]}, next y = y{maps.y_plus[v]}, "
              f"prev y = y{maps.y_minus[v]}")

    rep = crossings(k33, hexagon, 1, 2)
    print(f"\nchords of (x1, x2) cross at: "
          f"{', '.join(f'x{w}' for w in rep.crossed_at)}")
    print(f"degree-sum bound d_C(u)+d_C(v) <= l+2+crossings: "
          f"{'holds' if crossing_bound_holds(k33, hexagon, 1, 2) else 'NO'}")

    # a fan from an off-cycle vertex, certified maximum by a vertex cut
    square = BaseCycle((1, 2), (1, 2))
    fan = max_fan(k33, 3, square)
    print(f"\nfan from x3 onto {square}: size {fan.size}")
    for p in fan.paths:
        print("   " + " -> ".join(f"{s.lower()}{i}" for s, i in p))

    # sprinkle chords on a bigger ring and watch the bound stay tight
    rng = random.Random(4)
    ring = Bigraph(4, 4, [(1, 1), (2, 1), (2, 2), (3, 2),
                          (3, 3), (4, 3), (4, 4), (1, 4)])
    for x in range(1, 5):
        for y in range(1, 5):
            if not ring.has_edge(x, y) and rng.random() < 0.5:
                ring = ring.with_edge(x, y)
    c8 = BaseCycle((1, 2, 3, 4), (1, 2, 3, 4))
    print(f"\nchorded 8-ring ({ring.edge_count} edges):")
    for u in range(1, 5):
        for v in range(u + 1, 5):
            rep = crossings(ring, c8, u, v)
            ok = crossing_bound_holds(ring, c8, u, v)
            print(f"   (x{u}, x{v}): {rep.count} crossings, bound "
                  f"{'holds' if ok else 'FAILS'}")


if __name__ == "__main__":
    main()
