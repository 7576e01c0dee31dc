import pytest
from hypothesis import given, strategies as st

from brauer_ade.admissible import (
    admissible_sets,
    as_rootset,
    closure,
    is_admissible,
    orthogonal_subsets,
    simple_rootset,
)
from brauer_ade.braction import (
    Generator,
    RELATIONS,
    act,
    act_word,
    check_relations,
    conjugate_action,
    e_action_all_choices,
    parse_word,
    root_expressions,
)
from brauer_ade.rootsys import build_root_system

SPECS = ["A2", "A3", "A4", "A5", "D4", "D5", "E6"]


def test_act_examples():
    for spec in ("A3", "D4", "E6"):
        sys = build_root_system(spec)
        assert act(sys, "E1", ()) == simple_rootset(sys, [1])
    a2 = build_root_system("A2")
    B = simple_rootset(a2, [1])
    assert act(a2, "E1", B) == B
    assert act(a2, "E2", B) == simple_rootset(a2, [2])


def test_word_examples():
    sys = build_root_system("D4")
    for B in admissible_sets(sys):
        assert act_word(sys, "", B) == B
        for i in range(1, 5):
            assert act_word(sys, f"E{i} E{i}", B) == act(sys, f"E{i}", B)
            assert act_word(sys, f"R{i} R{i}", B) == B


def test_word_reads_right_to_left():
    a2 = build_root_system("A2")
    # E_1 (R_2 {}) = {alpha_1};  R_2 (E_1 {}) = {alpha_1 + alpha_2}
    assert act_word(a2, "E1 R2", ()) == simple_rootset(a2, [1])
    assert act_word(a2, "R2 E1", ()) == as_rootset(a2, [(1, 1)])


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_word("X1")
    with pytest.raises(ValueError):
        act(build_root_system("A2"), "E3", ())
    assert Generator.parse("e_2") == Generator("E", 2)
    assert str(Generator("R", 4)) == "R4"


@pytest.mark.parametrize("spec", ["A3", "A4", "D4", "D5", "E6"])
def test_relations_hold(spec):
    report = check_relations(spec)
    assert report.passed
    assert list(report.summary()) == [k for k in RELATIONS if k in report.summary()]


@pytest.mark.parametrize("spec", SPECS + ["E7"])
def test_beta_choice_invariance(spec):
    sys = build_root_system(spec)
    for B in admissible_sets(sys):
        for node in range(1, sys.rank + 1):
            assert len(e_action_all_choices(sys, node, B)) == 1


@pytest.mark.parametrize("spec", SPECS)
def test_action_stays_admissible_and_idempotent(spec):
    sys = build_root_system(spec)
    sets = admissible_sets(sys)
    universe = set(sets)
    assert all(is_admissible(sys, B) for B in sets)
    for B in sets:
        for node in range(1, sys.rank + 1):
            for kind in "RE":
                assert act(sys, Generator(kind, node), B) in universe
            once = act(sys, Generator("E", node), B)
            assert act(sys, Generator("E", node), once) == once


def test_admissible_sets_are_all_of_them():
    for spec in ("A5", "D5", "E6"):
        sys = build_root_system(spec)
        brute = {B for B in orthogonal_subsets(sys) if is_admissible(sys, B)}
        assert set(admissible_sets(sys)) == brute


def test_conjugate_of_simple_root_is_generator():
    sys = build_root_system("D5")
    for B in admissible_sets(sys):
        for node in range(1, 6):
            alpha = sys.simple_root(node)
            for kind in "RE":
                assert conjugate_action(sys, alpha, kind, B) == act(sys, Generator(kind, node), B)


@pytest.mark.parametrize("spec", ["A4", "D4", "E6"])
def test_conjugate_independent_of_expression(spec):
    sys = build_root_system(spec)
    sets = admissible_sets(sys)
    for beta in sys.positive_roots:
        exprs = root_expressions(sys, beta)
        for B in sets:
            for kind in "RE":
                outs = {conjugate_action(sys, beta, kind, B, e) for e in exprs}
                assert len(outs) == 1


@pytest.mark.parametrize("spec", ["D4", "A5"])
def test_orthogonal_conjugates_commute(spec):
    sys = build_root_system(spec)
    sets = admissible_sets(sys)
    roots = sys.positive_roots
    for b in roots:
        for c in roots:
            if sys.inner(b, c) != 0:
                continue
            for B in sets:
                x = conjugate_action(sys, c, "E", conjugate_action(sys, b, "E", B))
                y = conjugate_action(sys, b, "E", conjugate_action(sys, c, "E", B))
                assert x == y


def test_product_of_conjugates_on_empty_gives_closure():
    sys = build_root_system("D4")
    for X in orthogonal_subsets(sys):
        B = ()
        for k in X:
            B = conjugate_action(sys, sys.positive_roots[k], "E", B)
        assert B == closure(sys, X)


@given(st.sampled_from(["A4", "D5", "E6"]), st.data())
def test_random_words_agree_with_pieces(spec, data):
    sys = build_root_system(spec)
    tokens = st.sampled_from([f"{k}{i}" for k in "RE" for i in range(1, sys.rank + 1)])
    u = data.draw(st.lists(tokens, max_size=6))
    v = data.draw(st.lists(tokens, max_size=6))
    B = data.draw(st.sampled_from(admissible_sets(sys)))
    assert act_word(sys, u + v, B) == act_word(sys, u, act_word(sys, v, B))
