import random
from collections import Counter
from itertools import permutations, product
from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import fibonacci_numbers, perm_of_word
from rtilde.closedforms.conjecture import conjecture_scan, factor_modified_fibonacci
from rtilde.closedforms.fibonacci import (
    build_fib_tree,
    clr_degree,
    clr_to_path,
    clr_words,
    fib_paths,
    is_clr_word,
    leaf_to_clr,
    pagliacci_rtilde,
    pagliacci_word,
    power_word_rtilde,
    restricted_fib_paths,
)
from rtilde.closedforms.heaps import (
    ConfigurationError,
    PointConfiguration,
    chain_stats,
    config_is_admissible,
    config_to_word,
    general_rtilde_e,
    heap_of,
    parse_configuration,
)
from rtilde.closedforms.ud import NotUDWordError, is_ud_word, transposition_word, ud_rtilde
from rtilde.coxeter import CoxeterError, SymmetricGroup, group_from_name, is_321_avoiding, pagliacci_perm
from rtilde.hecke import rtilde_recursive
from rtilde.lightleaves import diagrammatic_rtilde, leaves
from rtilde.poly import IntPolynomial, fibonacci, modified_fibonacci, parse_polynomial


def w(*letters):
    """1-based letters to a 0-based word."""
    return tuple(a - 1 for a in letters)


UD_EXAMPLE = w(1, 2, 4, 5, 7, 9, 8, 7, 4, 3, 2, 1)
FINAL_EXAMPLE = w(3, 2, 4, 6, 1, 3, 5, 7, 2, 4, 6, 8, 7, 9, 8)
CHAIN_EXAMPLE = w(8, 10, 12, 7, 9, 11, 13, 6, 8, 10, 9, 2, 4, 1, 3, 5, 2, 4, 3, 18, 17, 19, 16, 18)


def fc2_elements(n):
    G = SymmetricGroup(n)
    out = []
    for p in permutations(range(1, n + 1)):
        if is_321_avoiding(p):
            v = G.from_perm(p)
            if G.is_2_repeating(v):
                out.append(v)
    return G, out


# -- UD words ------------------------------------------------------------------


def test_is_ud_word():
    ud = is_ud_word(UD_EXAMPLE)
    assert ud.peak == 8 and ud.word == UD_EXAMPLE
    empty = is_ud_word(())
    assert empty.peak is None and empty.word == ()
    assert is_ud_word(w(1, 2, 1, 2)) is None
    assert is_ud_word(w(1, 3, 3)) is None


def test_ud_example_table():
    G = SymmetricGroup(10)
    u = G.element(w(7, 9, 8, 3))
    p, table = ud_rtilde(G, u, UD_EXAMPLE)
    assert p == IntPolynomial.monomial(4) * IntPolynomial([1, 0, 1]) ** 2
    assert [(letter, case) for letter, case, _ in table.rows()] == [
        ("s9", "A2"), ("s8", "A2"), ("s7", "C1"), ("s5", "A1"),
        ("s4", "D2"), ("s3", "A2"), ("s2", "D1"), ("s1", "D2"),
    ]  # fmt: skip
    assert (table.c, table.d2_count) == (4, 2)
    assert p == diagrammatic_rtilde(G, u, UD_EXAMPLE)


def test_ud_top_equals_word():
    G = SymmetricGroup(6)
    word = w(1, 3, 4, 5, 2, 1)
    p, table = ud_rtilde(G, G.element(word), word)
    assert p == IntPolynomial([1])
    assert set(table.cases.values()) <= {"A2", "B1"}


def test_ud_rejects_other_words():
    G = SymmetricGroup(4)
    with pytest.raises(NotUDWordError):
        ud_rtilde(G, G.identity, w(1, 2, 1, 2))


def _ud_words(n_letters):
    for peak in range(n_letters):
        for up in product((0, 1), repeat=peak):
            for down in product((0, 1), repeat=peak):
                yield tuple(i for i in range(peak) if up[i]) + (peak,) + tuple(
                    i for i in reversed(range(peak)) if down[i]
                )


def test_ud_matches_leaves_exhaustively_on_s6():
    G = SymmetricGroup(6)
    els = G.elements()
    words = list(_ud_words(5))
    assert len(words) == 341
    for word in words:
        for u in els:
            p, table = ud_rtilde(G, u, word)
            assert p == diagrammatic_rtilde(G, u, word)
            if not p.is_zero():
                assert len(word) - u.length == table.c + 2 * table.d2_count


def test_transpositions():
    G = SymmetricGroup(6)
    for a in range(1, 6):
        for b in range(a + 1, 7):
            word = transposition_word(a, b)
            expected = tuple(b if x == a else a if x == b else x for x in range(1, 7))
            assert perm_of_word(word, 6) == expected
            v = G.element(word)
            assert v.length == len(word)
            for u in G.bruhat_interval(G.identity, v):
                assert ud_rtilde(G, u, word)[0] == rtilde_recursive(G, u, v)


# -- power words and Fibonacci trees ---------------------------------------------------


def test_power_word_examples():
    G = SymmetricGroup(3)
    s = G.generator(0)
    assert power_word_rtilde(G, G.identity, 3, 0) == parse_polynomial("t^3 + 2t")
    assert power_word_rtilde(G, s, 3, 0) == parse_polynomial("t^2 + 1")
    assert power_word_rtilde(G, G.element([0, 1]), 4, 0).is_zero()


@pytest.mark.parametrize("name", ["A1", "A2", "I2(inf)"])
def test_power_word_matches_leaves(name):
    G = group_from_name(name)
    s = G.generator(0)
    for n in range(11):
        for u in (G.identity, s):
            assert power_word_rtilde(G, u, n, 0) == diagrammatic_rtilde(G, u, (0,) * n)


def test_fib_tree_sizes():
    assert len(fib_paths(1)) == 2
    assert [len(fib_paths(n)) for n in range(1, 5)] == [2, 3, 5, 8]


def test_fib_tree_shape():
    tree = build_fib_tree(5)
    for prefix, kids in tree.children.items():
        if not prefix or len(prefix) == 5:
            continue
        assert kids == (["C"] if prefix.endswith("L") else ["L", "R"])


@pytest.mark.parametrize("n", range(1, 13))
def test_fibonacci_path_identities(n):
    restricted = Counter(p.rho for p in restricted_fib_paths(n))
    assert IntPolynomial.from_terms(restricted) == fibonacci(n)
    full = Counter(2 * (n - p.lam) for p in fib_paths(n))
    assert IntPolynomial.from_terms(full) == modified_fibonacci(n)


# -- the family 3 4 ... n 1 2 -----------------------------------------------------------


def test_pagliacci_values():
    assert pagliacci_rtilde(7) == parse_polynomial("t^10 + 4t^8 + 3t^6")
    assert pagliacci_rtilde(3) == IntPolynomial.monomial(2)
    with pytest.raises(CoxeterError):
        pagliacci_word(2)


@pytest.mark.parametrize("n", range(3, 10))
def test_pagliacci_matches_leaves(n):
    G = SymmetricGroup(n)
    word = pagliacci_word(n)
    assert G.element(word) == G.from_perm(pagliacci_perm(n))
    assert len(word) == G.element(word).length
    assert diagrammatic_rtilde(G, G.identity, word) == pagliacci_rtilde(n)


def test_clr_words_n7():
    words = clr_words(7)
    assert sorted(words) == sorted(["RRRR", "RRLC", "RLCR", "LCRR", "RRRL", "RLCL", "LCRL", "LCLC"])
    degs = {x: clr_degree(x) for x in words}
    assert degs["RRRR"] == 10
    assert sorted(degs.values(), reverse=True) == [10, 8, 8, 8, 8, 6, 6, 6]


def test_clr_validity():
    assert is_clr_word("RL") and is_clr_word("LCL")
    assert not is_clr_word("CR") and not is_clr_word("LR") and not is_clr_word("RC")
    assert clr_to_path("LCR").lam == 1
    with pytest.raises(ValueError):
        clr_to_path("LL")


@pytest.mark.parametrize("n", range(3, 13))
def test_clr_counts_and_degrees(n):
    words = clr_words(n)
    assert len(words) == fibonacci(n - 2)(1) == fibonacci_numbers(n)[n - 2]
    assert IntPolynomial.from_terms(Counter(clr_degree(x) for x in words)) == pagliacci_rtilde(n)


@pytest.mark.parametrize("n", range(4, 9))
def test_leaves_biject_with_clr_words(n):
    G = SymmetricGroup(n)
    lvs = leaves(G, pagliacci_word(n), G.identity)
    got = [(leaf_to_clr(lf, n), lf.degree) for lf in lvs]
    assert sorted(x for x, _ in got) == clr_words(n)
    assert all(clr_degree(x) == d for x, d in got)


# -- configurations and heaps ------------------------------------------------------------


def test_cone_and_admissibility():
    assert config_is_admissible(PointConfiguration([]))
    with pytest.raises(ConfigurationError):
        PointConfiguration([(1, 0)])
    with pytest.raises(ConfigurationError):
        PointConfiguration([(0, 1)])
    far = PointConfiguration([(-2, -4), (2, -4), (-1, -3), (1, -3), (-1, -5), (1, -5), (0, -4)])
    assert not config_is_admissible(PointConfiguration([(-2, -4), (2, -4)]))
    assert not config_is_admissible(far)
    assert config_is_admissible(PointConfiguration([(-1, -3), (1, -3), (0, -2), (0, -4)]))
    assert not config_is_admissible(PointConfiguration([(-1, -3), (1, -3), (0, -2)]))


def test_single_point():
    assert config_to_word(PointConfiguration([(0, 0)])) == (0,)
    G = SymmetricGroup(3)
    assert heap_of(G, G.generator(0)).points == frozenset({(0, 0)})
    st1 = chain_stats(G, G.generator(0))
    assert (st1.n1, st1.kappa) == (1, 0)


def test_configuration_file_format():
    conf = parse_configuration("# heap\n0 0\n\n-1 -1  # left\n1 -1\n")
    assert len(conf) == 3
    assert parse_configuration(conf.to_text()) == conf
    with pytest.raises(ConfigurationError):
        parse_configuration("0\n")


def test_final_example_heap():
    G = SymmetricGroup(10)
    v = G.element(FINAL_EXAMPLE)
    conf = heap_of(G, v)
    # frozen after checking the drawing by hand: columns -2..3
    assert sorted(conf.points) == sorted([
        (-2, -2), (-1, -1), (-1, -3), (-1, -5), (0, 0), (0, -2), (0, -4), (0, -6),
        (1, -1), (1, -3), (1, -5), (1, -7), (2, -6), (2, -8), (3, -7),
    ])  # fmt: skip
    assert G.element(config_to_word(conf)) == v
    st_ = chain_stats(G, v)
    assert (st_.n1, st_.kappa, st_.lambdas) == (3, 2, (3, 3))
    assert general_rtilde_e(G, v) == parse_polynomial("t^15 + 6t^13 + 11t^11 + 6t^9 + t^7")


def test_chain_example():
    G = SymmetricGroup(20)
    v = G.element(CHAIN_EXAMPLE)
    assert v.length == len(CHAIN_EXAMPLE)
    chains = [tuple(a + 1 for a in c) for c in chain_stats(G, v).chains]
    assert chains == [(2, 3, 4), (8, 9, 10), (18,)]
    conf = heap_of(G, v)
    assert config_is_admissible(conf)
    assert G.element(config_to_word(conf)) == v


def test_shifted_permutation_heap():
    G = SymmetricGroup(9)
    v9 = G.from_perm(pagliacci_perm(9))
    conf = heap_of(G, v9)
    assert config_is_admissible(conf)
    assert G.element(config_to_word(conf)) == v9


@pytest.mark.parametrize("n", range(4, 10))
def test_general_formula_on_shifted_permutations(n):
    G = SymmetricGroup(n)
    v = G.from_perm(pagliacci_perm(n))
    st_ = chain_stats(G, v)
    assert (st_.n1, st_.lambdas) == (2, (n - 3,))
    assert general_rtilde_e(G, v) == pagliacci_rtilde(n)


def test_general_formula_s6():
    G, els = fc2_elements(6)
    assert len(els) == 131
    for v in els:
        assert general_rtilde_e(G, v) == rtilde_recursive(G, G.identity, v)


def test_heap_round_trip_s8():
    G, els = fc2_elements(8)
    for v in random.Random(8).sample(els, 100):
        conf = heap_of(G, v)
        assert config_is_admissible(conf)
        assert G.element(config_to_word(conf)) == v


def test_heap_rejects_bad_input():
    G = SymmetricGroup(6)
    with pytest.raises(CoxeterError):
        heap_of(G, G.from_perm((3, 2, 1, 4, 5, 6)))
    with pytest.raises(CoxeterError):
        chain_stats(G, G.from_perm((4, 5, 6, 1, 2, 3)))


# -- conjecture scan ----------------------------------------------------------------------


def test_factorization_examples():
    assert factor_modified_fibonacci(IntPolynomial([1])) == (0, ())
    assert factor_modified_fibonacci(parse_polynomial("t^15 + 6t^13 + 11t^11 + 6t^9 + t^7")) == (3, (3, 3))
    assert factor_modified_fibonacci(IntPolynomial([1, 1])) is None
    assert factor_modified_fibonacci(IntPolynomial()) is None


@given(st.integers(0, 4), st.lists(st.integers(1, 6), max_size=4))
def test_factorization_recovers_products(a, cs):
    p = prod((modified_fibonacci(c) for c in cs), start=IntPolynomial([1])).shift(a)
    found = factor_modified_fibonacci(p)
    assert found is not None
    a2, cs2 = found
    assert list(cs2) == sorted(cs2, reverse=True)
    assert prod((modified_fibonacci(c) for c in cs2), start=IntPolynomial([1])).shift(a2) == p


def test_scan_small():
    G = SymmetricGroup(6)
    v6 = G.from_perm(pagliacci_perm(6))
    records = conjecture_scan(G, v6)
    by_pair = {(r.u, r.v): r for r in records}
    for x in G.bruhat_interval(G.identity, v6):
        r = by_pair[x, x]
        assert (r.a, r.cs) == (0, ())
    r = by_pair[G.identity, v6]
    assert (r.a, r.cs) == (2, (3,))
    assert r.line() == "u=e v=2-1-3-2-4-3-5-4 poly=[0, 0, 0, 0, 1, 0, 3, 0, 1] status=factored a=2 cs=[3]"
    assert all(r.status == "factored" for r in records)
    with pytest.raises(CoxeterError):
        conjecture_scan(G, G.from_perm((3, 2, 1, 4, 5, 6)))
