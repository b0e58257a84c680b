import pytest
from hypothesis import given, settings

from supercyclic import (
    Bigraph,
    ConditionReport,
    InputError,
    check_condition,
    complete_bipartite,
    construct_g3,
    degree_hypothesis,
    is_super_cyclic,
    min_deficiency,
)

from oracles import condition_bruteforce
from strategies import bigraphs

C6 = Bigraph(3, 3, [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (1, 3)])
K33 = complete_bipartite(3, 3)

# x1 sees everything, x2 and x3 live in separate 4-rings through x1;
# the size clause holds but x1 is a cut vertex of G[A union N^(A)]
HINGE = Bigraph(3, 4, [(1, 1), (2, 1), (1, 2), (2, 2),
                       (1, 3), (3, 3), (1, 4), (3, 4)])


def test_condition_frozen_pass():
    assert check_condition(K33).passed
    assert check_condition(C6).passed
    assert check_condition(complete_bipartite(4, 4)).passed
    assert check_condition(Bigraph(2, 2, [])).passed  # vacuous below size 3


def test_condition_size_witness():
    rep = check_condition(construct_g3(1, 1, 1, 3))
    assert not rep.passed
    assert str(rep.size_witness) == "X{1,2,3}"
    assert rep.connectivity_witness is None
    assert "|N^(X{1,2,3})| < 3" in rep.describe()


def test_condition_connectivity_witness():
    for mode in ("full", "kim"):
        rep = check_condition(HINGE, mode=mode)
        assert not rep.passed
        assert rep.size_witness is None
        assert str(rep.connectivity_witness) == "X{1,2,3}"
        assert "not 2-connected" in rep.describe()


def test_condition_mode_validation():
    with pytest.raises(InputError):
        check_condition(K33, mode="strict")


def test_condition_report_consistency():
    from supercyclic import VertexSet
    with pytest.raises(InputError):
        ConditionReport(True, "full", size_witness=VertexSet.of("X", [1, 2, 3]))
    with pytest.raises(InputError):
        ConditionReport(False, "full")


@given(bigraphs(max_x=4, max_y=5))
@settings(max_examples=200)
def test_condition_matches_bruteforce_and_kim(g):
    full = check_condition(g, mode="full")
    kim = check_condition(g, mode="kim")
    assert full.passed == condition_bruteforce(g)
    # restricting the connectivity clause to triples accepts the same graphs
    assert kim.passed == full.passed


def test_condition_necessary_for_super_cyclicity(corpus_3_5):
    # over every isomorphism class with |X| = 3, |Y| <= 5
    for g in corpus_3_5:
        if is_super_cyclic(g).passed and g.x_count >= 3:
            assert check_condition(g).passed


def test_min_deficiency_frozen():
    assert min_deficiency(K33) == (0, K33.x_full)
    d, a = min_deficiency(construct_g3(1, 1, 1, 3))
    assert d == -1 and str(a) == "X{1,2,3}"
    d, a = min_deficiency(complete_bipartite(3, 7))
    assert d == 4 and str(a) == "X{1,2,3}"
    # taking all of X beats every triple here: |N^(X)| - 4 = -1
    d, a = min_deficiency(complete_bipartite(4, 3))
    assert d == -1 and str(a) == "X{1,2,3,4}"
    # two disjoint 4-rings: every mixed triple attains -1, ties break
    # to the smallest subset and then lexicographically
    rings = Bigraph(4, 4, [(1, 1), (2, 1), (1, 2), (2, 2),
                           (3, 3), (4, 3), (3, 4), (4, 4)])
    d, a = min_deficiency(rings)
    assert d == -1 and str(a) == "X{1,2,3}"


def test_min_deficiency_requires_three_xs():
    with pytest.raises(InputError):
        min_deficiency(complete_bipartite(2, 5))


@given(bigraphs(min_x=3, max_x=5, max_y=5))
def test_min_deficiency_brackets_condition(g):
    d, a = min_deficiency(g)
    rep = check_condition(g)
    if d < 0:
        assert not rep.passed
    if rep.passed:
        assert d >= 0
    # the witness really attains the reported deficiency
    from oracles import super_neighborhood_naive
    assert len(super_neighborhood_naive(g, a.members)) - len(a) == d


def test_degree_hypothesis_frozen():
    t = degree_hypothesis(complete_bipartite(4, 6))
    assert (t.meets_half_bound, t.meets_third_bound, t.meets_quarter_bound) == \
        (True, True, True)
    # delta 4 with m = 7: the quarter bound is 4*4 >= 17, off by one
    t = degree_hypothesis(Bigraph(4, 7, [(x, y) for x in range(1, 5)
                                         for y in range(1, 5)]))
    assert t.min_x_degree == 4
    assert not t.meets_quarter_bound
    t = degree_hypothesis(complete_bipartite(3, 4))
    assert t.min_x_degree == 4
    assert t.meets_half_bound and t.meets_third_bound and t.meets_quarter_bound
    t = degree_hypothesis(Bigraph(3, 4, [(1, 1)]))
    assert not (t.meets_half_bound or t.meets_third_bound or
                t.meets_quarter_bound)


def test_degree_hypothesis_integer_boundaries():
    # delta = n = 4, m = 6: 2*4 >= 8 exactly
    g = Bigraph(4, 6, [(x, y) for x in range(1, 5) for y in range(1, 5)])
    assert degree_hypothesis(g).meets_half_bound
    # delta 4, m 7: 2*4 >= 9 fails by one
    g2 = g.with_edge(1, 5).with_edge(2, 5).with_edge(3, 5).with_edge(4, 5)
    g2 = Bigraph(4, 7, list(g2.edges()))
    assert degree_hypothesis(g2).min_x_degree == 5
    assert degree_hypothesis(g2).meets_half_bound  # 10 >= 9
