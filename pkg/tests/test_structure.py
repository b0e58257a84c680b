import random

import pytest
from hypothesis import given, settings, strategies as st

from supercyclic import (
    BaseCycle,
    Bigraph,
    InputError,
    complete_bipartite,
    crossing_bound_holds,
    crossings,
    max_fan,
    successor_maps,
)
from supercyclic.bigraph import SIDE_X, SIDE_Y

from oracles import min_vertex_cut_bruteforce, random_cycle_instance
from strategies import base_cycles_with_graph

K33 = complete_bipartite(3, 3)
C4 = BaseCycle((1, 2), (1, 2))
HEX = BaseCycle((1, 2, 3), (1, 2, 3))


def test_successor_maps_frozen():
    m = successor_maps(HEX)
    assert (m.x_plus[(SIDE_X, 1)], m.x_minus[(SIDE_X, 1)]) == (2, 3)
    assert (m.y_plus[(SIDE_X, 1)], m.y_minus[(SIDE_X, 1)]) == (1, 3)
    assert (m.x_plus[(SIDE_Y, 1)], m.x_minus[(SIDE_Y, 1)]) == (2, 1)
    assert (m.y_plus[(SIDE_Y, 1)], m.y_minus[(SIDE_Y, 1)]) == (2, 3)


@given(st.permutations(range(1, 6)), st.permutations(range(1, 6)),
       st.integers(2, 5))
def test_reversal_swaps_successors(xs, ys, l):
    c = BaseCycle(tuple(xs[:l]), tuple(ys[:l]))
    m = successor_maps(c)
    r = successor_maps(c.reverse())
    assert r.x_plus == m.x_minus and r.x_minus == m.x_plus
    assert r.y_plus == m.y_minus and r.y_minus == m.y_plus


def test_crossings_frozen_plain_ring():
    ring = Bigraph(3, 3, [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (1, 3)])
    rep = crossings(ring, HEX, 1, 2)
    assert rep.crossed_at == () and rep.count == 0
    assert crossing_bound_holds(ring, HEX, 1, 2)


def test_crossings_frozen_k33():
    rep = crossings(K33, HEX, 1, 2)
    assert rep.crossed_at == (3,)
    assert crossings(K33, HEX, 2, 1).crossed_at == (3,)
    # d_C(1) + d_C(2) = 6 <= 3 + 2 + 1: tight
    assert crossing_bound_holds(K33, HEX, 1, 2)


def test_crossings_frozen_chorded_eight_ring():
    c8 = BaseCycle((1, 2, 3, 4), (1, 2, 3, 4))
    g = Bigraph(4, 4, [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3),
                       (4, 4), (1, 4), (1, 2), (3, 1)])
    rep = crossings(g, c8, 1, 3)
    assert rep.crossed_at == (2,)
    # the report ignores orientation and argument order
    assert crossings(g, c8.reverse(), 1, 3).crossed_at == (2,)
    assert crossings(g, c8, 3, 1).crossed_at == (2,)
    assert crossing_bound_holds(g, c8, 1, 3)


def test_crossings_input_errors():
    with pytest.raises(InputError):
        crossings(K33, HEX, 1, 1)
    with pytest.raises(InputError):
        crossings(K33, C4, 1, 3)  # x3 not on this cycle
    with pytest.raises(InputError):
        crossings(complete_bipartite(2, 2), HEX, 1, 2)  # cycle not in graph


@given(base_cycles_with_graph(min_l=2, max_l=4, max_extra=2), st.data())
@settings(max_examples=200)
def test_crossing_symmetry_and_bound(pair, data):
    g, c = pair
    u = data.draw(st.sampled_from(c.xs))
    v = data.draw(st.sampled_from([x for x in c.xs if x != u]))
    a = crossings(g, c, u, v)
    b = crossings(g, c, v, u)
    assert a.crossed_at == b.crossed_at
    assert crossings(g, c.reverse(), u, v).crossed_at == a.crossed_at
    assert crossing_bound_holds(g, c, u, v)


def test_max_fan_frozen_k33():
    f = max_fan(K33, 3, C4)
    assert f.size == 3
    assert f.paths == (((SIDE_X, 3), (SIDE_Y, 1)),
                       ((SIDE_X, 3), (SIDE_Y, 2)),
                       ((SIDE_X, 3), (SIDE_Y, 3), (SIDE_X, 1)))
    assert f.contacts == ((SIDE_Y, 1), (SIDE_Y, 2), (SIDE_X, 1))
    assert f.vertex_count == 5


def test_max_fan_disconnected_root():
    g = Bigraph(4, 3, list(K33.edges()))
    f = max_fan(g, 4, C4)
    assert f.size == 0 and f.paths == () and f.vertex_count == 1


def test_max_fan_single_path():
    g = Bigraph(4, 3, list(K33.edges()) + [(4, 3)])
    f = max_fan(g, 4, C4)
    assert f.paths == (((SIDE_X, 4), (SIDE_Y, 3), (SIDE_X, 1)),)


def test_max_fan_shrinks_detours():
    # x3 can reach the ring through y3-x4-y4 or directly via y4; the fan
    # keeps the two-edge route
    g = Bigraph(4, 4, [(1, 1), (2, 1), (1, 2), (2, 2),
                       (3, 3), (4, 3), (4, 4), (1, 4), (3, 4)])
    f = max_fan(g, 3, C4)
    assert f.paths == (((SIDE_X, 3), (SIDE_Y, 4), (SIDE_X, 1)),)
    assert f.vertex_count == 3


def test_max_fan_input_errors():
    with pytest.raises(InputError):
        max_fan(K33, 1, C4)  # root on the cycle
    with pytest.raises(InputError):
        max_fan(K33, 9, C4)
    with pytest.raises(InputError):
        max_fan(complete_bipartite(2, 2).without_edge(1, 1), 1, C4)


def assert_valid_fan(g, c, root, fan):
    on_cycle = {(SIDE_X, w) for w in c.xs} | {(SIDE_Y, w) for w in c.ys}
    interior_seen = set()
    contacts = set()
    for p in fan.paths:
        assert p[0] == (SIDE_X, root)
        assert p[-1] in on_cycle
        for a, b in zip(p, p[1:]):
            assert a[0] != b[0]
            xi = a[1] if a[0] == SIDE_X else b[1]
            yj = b[1] if a[0] == SIDE_X else a[1]
            assert g.has_edge(xi, yj)
        middle = p[1:-1]
        assert all(v not in on_cycle for v in middle)
        for v in middle:
            assert v not in interior_seen  # internally disjoint
            interior_seen.add(v)
        assert p[-1] not in contacts
        contacts.add(p[-1])


def test_fan_size_matches_min_cut_bruteforce():
    rng = random.Random(501)
    for _ in range(100):
        g, c, root = random_cycle_instance(rng)
        fan = max_fan(g, root, c)
        assert_valid_fan(g, c, root, fan)
        cyc = {(SIDE_X, w) for w in c.xs} | {(SIDE_Y, w) for w in c.ys}
        assert fan.size == min_vertex_cut_bruteforce(g, root, cyc)
