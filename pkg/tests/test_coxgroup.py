from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from brauer_ade.admissible import enumerate_all_orbits, simple_rootset
from brauer_ade.coxgroup import (
    PermutationGroup,
    TypeLabel,
    centralizer_nodes,
    compose,
    identify_components,
    inverse,
    parabolic,
    parabolic_order,
    standard_order,
    stabilizer_order,
    weyl_group,
    weyl_order,
)
from brauer_ade.errors import InvariantViolation
from brauer_ade.rootsys import build_root_system


def test_small_weyl_groups_by_brute_force():
    assert weyl_group("A2").order == 6 == len(weyl_group("A2").elements_brute_force())
    g = weyl_group("D4")
    assert g.order == 192 == len(g.elements_brute_force())


def test_d4_signed_permutation_count():
    # even sign changes times permutations of four coordinates
    count = sum(1 for _ in permutations(range(4))) * sum(
        1 for s in product((1, -1), repeat=4) if s.count(-1) % 2 == 0
    )
    assert count == 192


@pytest.mark.parametrize(
    "spec, order",
    [("E6", 51840), ("E7", 2903040), ("E8", 696729600), ("A8", 362880), ("D8", 5160960), ("D5", 1920)],
)
def test_weyl_orders(spec, order):
    assert weyl_order(spec) == order


def test_centralizer_examples():
    a2 = build_root_system("A2")
    assert centralizer_nodes(a2, ()) == (1, 2)
    assert centralizer_nodes(a2, simple_rootset(a2, [1])) == ()
    d4 = build_root_system("D4")
    assert centralizer_nodes(d4, (d4.index[d4.highest_root],)) == (1, 2, 4)


def test_parabolic_examples():
    assert parabolic("D4", []).order == 1
    g = parabolic("D4", [1, 2, 4])
    assert g.order == 8 == len(g.elements_brute_force())
    assert parabolic("E6", range(1, 7)).order == 51840


def test_identify_components():
    assert identify_components(build_root_system("D4"), [1, 2, 4]) == [TypeLabel("A", 1)] * 3
    assert identify_components(build_root_system("E6"), range(1, 7)) == [TypeLabel("E", 6)]
    assert identify_components(build_root_system("A5"), [1, 3, 5]) == [TypeLabel("A", 1)] * 3
    e8 = build_root_system("E8")
    assert identify_components(e8, [1, 2, 3, 4, 5, 6, 7]) == [TypeLabel("E", 7)]
    assert identify_components(e8, [2, 3, 4, 5, 6]) == [TypeLabel("D", 5)]
    assert identify_components(e8, [1, 3, 4, 5, 6, 7, 8]) == [TypeLabel("A", 7)]


def test_stabilizer_orders():
    assert stabilizer_order(1, 192) == 192
    assert stabilizer_order(3, 6) == 2
    assert stabilizer_order(3, 192) == 64
    with pytest.raises(InvariantViolation):
        stabilizer_order(5, 192)


def test_standard_orders_reproduced():
    for label, spec in [(TypeLabel("A", 4), "A4"), (TypeLabel("D", 6), "D6"), (TypeLabel("E", 7), "E7")]:
        assert standard_order(label) == weyl_group(spec).order
    assert standard_order(TypeLabel("A", 3)) == factorial(4)


@pytest.mark.parametrize("spec", ["A4", "D4", "D5", "E6"])
def test_every_parabolic_small_enough_matches_brute_force(spec):
    sys = build_root_system(spec)
    for mask in range(1 << sys.rank):
        nodes = [i + 1 for i in range(sys.rank) if mask >> i & 1]
        g = parabolic(sys, nodes)
        assert g.order == parabolic_order(sys, nodes)
        if g.order <= 10**4:
            assert g.order == len(g.elements_brute_force())


@pytest.mark.parametrize("spec", ["A4", "D6", "E8"])
def test_generators_commute_with_negation(spec):
    sys = build_root_system(spec)
    N = sys.size
    neg = tuple((x + N) % (2 * N) for x in range(2 * N))
    for i in range(1, sys.rank + 1):
        p = sys.simple_perm(i)
        assert compose(p, neg) == compose(neg, p)
        assert compose(p, p) == tuple(range(2 * N))


def test_membership():
    g = parabolic("A3", [1, 2])
    a3 = build_root_system("A3")
    assert g.contains(compose(a3.simple_perm(1), a3.simple_perm(2)))
    assert not g.contains(a3.simple_perm(3))


@pytest.mark.parametrize("spec", ["A6", "D6", "E6", "E7"])
def test_orbit_stabilizer(spec):
    w = weyl_order(spec)
    for o in enumerate_all_orbits(spec, with_poset=False):
        assert stabilizer_order(o.orbit_size, w) * o.orbit_size == w


def test_bad_generator():
    with pytest.raises(ValueError):
        PermutationGroup([(0, 0, 1)], 3)


@given(st.permutations(list(range(7))), st.permutations(list(range(7))))
def test_random_symmetric_subgroups(p, q):
    g = PermutationGroup([tuple(p), tuple(q)], 7)
    if g.order <= 5040:
        assert g.order == len(g.elements_brute_force())
    assert compose(tuple(p), inverse(tuple(p))) == tuple(range(7))
