import pytest
from hypothesis import given
from hypothesis import strategies as st

from christoffel_markoff.conjecture import christoffel_numbers_up_to
from christoffel_markoff.errors import DomainError
from christoffel_markoff.markoff import (
    MarkoffTriple,
    check_equation,
    flip_max,
    is_proper,
    markoff_tree,
    neighbors,
    triple_of_word,
    word_of_triple,
)
from christoffel_markoff.words import FactoredWord, christoffel_tree

import oracles

T = MarkoffTriple


@pytest.fixture(scope="module")
def tree_1e6():
    return markoff_tree(10**6)


@pytest.fixture(scope="module")
def brute_200():
    return oracles.brute_force_triples(200)


@pytest.mark.parametrize(
    "abc, ok",
    [((1, 1, 1), True), ((1, 1, 2), True), ((1, 2, 5), True), ((2, 3, 4), False), ((5, 13, 194), True)],
)
def test_check_equation(abc, ok):
    assert check_equation(*abc) is ok


def test_triple_constructor_sorts_and_validates():
    assert T.of(5, 1, 2) == T(1, 2, 5)
    assert str(T.of(5, 1, 2)) == "(1, 2, 5)"
    for bad in [(2, 3, 4), (0, 0, 0), (1, 2), (-1, 1, 1)]:
        with pytest.raises(DomainError):
            T.of(*bad)


def test_is_proper():
    assert not is_proper(T(1, 1, 2))
    assert is_proper(T(1, 2, 5))
    assert not is_proper(T(1, 1, 1))


def test_flip_max_examples():
    assert flip_max(T(1, 2, 5)) == T(1, 1, 2)
    assert flip_max(T(1, 5, 13)) == T(1, 2, 5)
    assert flip_max(T(13, 34, 1325)) == T(1, 13, 34)
    assert 1 + 13**2 + 34**2 == 3 * 1 * 13 * 34
    with pytest.raises(DomainError):
        flip_max(T(1, 1, 2))


def test_neighbors_examples():
    assert neighbors(T(1, 1, 1)) == (T(1, 1, 2),) * 3
    assert neighbors(T(1, 2, 5)) == (T(2, 5, 29), T(1, 5, 13), T(1, 1, 2))
    assert T(5, 13, 194) in neighbors(T(1, 5, 13))


def test_neighbors_stay_on_the_surface(tree_1e6):
    for t in tree_1e6:
        for n in neighbors(t):
            assert check_equation(*n)


def test_flip_decreases_and_descends_to_base(tree_1e6):
    for t in tree_1e6:
        if not is_proper(t):
            continue
        while t != T(1, 2, 5):
            nxt = flip_max(t)
            assert nxt.c == t.b < t.c
            assert check_equation(*nxt)
            t = nxt


def test_triple_of_word_examples():
    prov = triple_of_word(FactoredWord("x", "y"))
    assert prov.triple == T(1, 2, 5) and prov.n == 5 and prov.word.word == "xy"
    prov = triple_of_word(FactoredWord("x", "xy"))
    assert prov.triple == T(1, 5, 13) and prov.n == 13
    # traces 3, 15, 39 straight from sympy
    assert [oracles.sympy_mu(w).trace() for w in ("x", "xy", "xxy")] == [3, 15, 39]
    prov = triple_of_word(FactoredWord("xxxyxxy", "xxy"))
    assert prov.triple == T(13, 1325, 51641)
    assert prov.assignment == {"w1": 1325, "w2": 13, "w": 51641}
    assert flip_max(prov.triple) == T(13, 34, 1325)
    assert 3 * 13 * 1325 - 34 == 51641


def test_word_of_triple_examples():
    assert word_of_triple(T(1, 2, 5)) == ("x", "y")
    assert word_of_triple(T(1, 5, 13)) == ("x", "xy")
    assert word_of_triple(T(2, 5, 29)) == ("xy", "y")
    assert triple_of_word(word_of_triple(T(2, 5, 29))).triple == T(2, 5, 29)


@pytest.mark.parametrize("bad", [T(1, 1, 1), T(1, 1, 2), T(2, 3, 7), T(1, 2, 6)])
def test_word_of_triple_rejects(bad):
    with pytest.raises(DomainError):
        word_of_triple(bad)


def test_round_trip_from_words():
    for fw in christoffel_tree(10):
        prov = triple_of_word(fw)
        t = prov.triple
        assert is_proper(t) and t.c == prov.n and t.a != t.b
        assert word_of_triple(t) == fw


def test_round_trip_from_triples(tree_1e6):
    proper = [t for t in tree_1e6 if is_proper(t)]
    assert len(proper) == len(tree_1e6) - 2
    for t in proper:
        assert triple_of_word(word_of_triple(t)).triple == t


def test_deep_triple_round_trip():
    # 2000 descent steps along the (1, F, F') branch; the lift is iterative
    t = T(1, 2, 5)
    for _ in range(2000):
        t = T(1, t.c, 3 * t.c - t.b)
    fw = word_of_triple(t)
    assert fw == ("x", "x" * 2000 + "y")
    assert triple_of_word(fw).triple == t


def test_square_extensions_are_distinct():
    for fw in christoffel_tree(8):
        u, v = fw
        left = triple_of_word(FactoredWord(u, u + v)).triple  # u u v
        right = triple_of_word(FactoredWord(u + v, v)).triple  # u v v
        assert left != right
        if v.startswith(u):
            assert left.c < right.c
        elif u.endswith(v):
            assert left.c > right.c


def test_markoff_tree_small_bounds(brute_200):
    assert markoff_tree(2) == [T(1, 1, 1), T(1, 1, 2)]
    expected_29 = sorted((t for t in brute_200 if t[2] <= 29), key=lambda t: (t[2], t[1], t[0]))
    assert markoff_tree(29) == expected_29
    assert markoff_tree(29) == [T(1, 1, 1), T(1, 1, 2), T(1, 2, 5), T(1, 5, 13), T(2, 5, 29)]
    t194 = markoff_tree(194)
    assert {tuple(t) for t in t194} == {t for t in brute_200 if t[2] <= 194}
    for t in [T(1, 13, 34), T(5, 13, 194), T(1, 34, 89), T(2, 29, 169)]:
        assert t in t194


def test_markoff_tree_is_sorted_without_duplicates(tree_1e6):
    assert len(set(tree_1e6)) == len(tree_1e6)
    keys = [(t.c, t.b, t.a) for t in tree_1e6]
    assert keys == sorted(keys)
    assert all(t.c <= 10**6 and check_equation(*t) for t in tree_1e6)


def test_markoff_tree_rejects_bad_bound():
    with pytest.raises(DomainError):
        markoff_tree(0)


def test_maxima_equal_word_numbers(tree_1e6):
    maxima = {t.c for t in tree_1e6 if is_proper(t)}
    assert maxima == christoffel_numbers_up_to(10**6)


@given(st.integers(min_value=0, max_value=40), st.sampled_from([0, 1]))
def test_random_walk_round_trip(steps, start):
    # climb by increasing flips chosen from the step count bits
    t = [T(1, 2, 5), T(1, 5, 13)][start]
    for i in range(steps % 12):
        a, b, c = t
        t = T(*sorted((b, c, 3 * b * c - a))) if (steps >> i) & 1 else T(*sorted((a, c, 3 * a * c - b)))
    assert triple_of_word(word_of_triple(t)).triple == t
