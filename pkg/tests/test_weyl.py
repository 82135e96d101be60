from __future__ import annotations

import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import WEYL_ORDERS, group_closure
from schubert_aut.rootsys import build
from schubert_aut.weyl import (
    EnumerationTooLarge,
    all_reduced_words,
    apply,
    coset_decompose,
    diagram_automorphism,
    from_word,
    identity,
    inversion_set,
    is_min_rep,
    length,
    longest_element,
    min_reps,
    reduced_word,
    reflection,
)

TYPES = ["A1", "A2", "A3", "A5", "B2", "D4", "D5", "E6", "E7", "E8"]


def _braid_order(c_ij: int, c_ji: int) -> int:
    return {0: 2, 1: 3, 2: 4, 3: 6}[c_ij * c_ji]


@pytest.mark.parametrize("name", TYPES)
def test_braid_relations(name):
    rs = build(name)
    for i in range(1, rs.rank + 1):
        s = reflection(rs, i)
        assert (s * s).is_identity()
        for j in range(i + 1, rs.rank + 1):
            m = _braid_order(int(rs.cartan[i - 1, j - 1]), int(rs.cartan[j - 1, i - 1]))
            left = from_word(rs, [i, j] * m)
            assert left.is_identity()
            alt_i = [i if k % 2 == 0 else j for k in range(m)]
            alt_j = [j if k % 2 == 0 else i for k in range(m)]
            assert from_word(rs, alt_i) == from_word(rs, alt_j)


def test_word_convention_right_to_left():
    rs = build("A2")
    w = from_word(rs, [1, 2])
    # s_1 s_2 (alpha_1) = s_1(alpha_1 + alpha_2) = alpha_2
    assert apply(w, (1, 0)) == (0, 1)
    assert w == reflection(rs, 1) * reflection(rs, 2)
    assert w.inverse() == from_word(rs, [2, 1])


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "D4"])
def test_group_order_matches_closure(name):
    rs = build(name)
    closure = group_closure(np.asarray(rs.cartan))
    assert len(closure) == WEYL_ORDERS[name]
    assert sum(1 for _ in min_reps(rs, set())) == WEYL_ORDERS[name]


def test_e6_group_order():
    assert sum(1 for _ in min_reps(build("E6"), set())) == 51840


@pytest.mark.parametrize("name", ["A3", "B2", "D4"])
def test_length_equals_shortest_word(name):
    rs = build(name)
    closure = group_closure(np.asarray(rs.cartan))
    for word in closure.values():
        w = from_word(rs, word)
        assert length(w) == len(word) == len(inversion_set(w)) == len(reduced_word(w))


@pytest.mark.parametrize("name", TYPES)
def test_random_elements_length_consistency(name):
    rs = build(name)
    rng = random.Random(1234)
    for _ in range(150):
        word = [rng.randint(1, rs.rank) for _ in range(rng.randint(0, 40))]
        w = from_word(rs, word)
        red = reduced_word(w)
        assert from_word(rs, red) == w
        assert length(w) == len(red) == len(inversion_set(w))
        assert length(w) <= len(word)
        assert (len(word) - length(w)) % 2 == 0


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["A4", "D5", "E6", "B2"]), st.data())
def test_inverse_and_product(name, data):
    rs = build(name)
    word = data.draw(st.lists(st.integers(1, rs.rank), max_size=25))
    other = data.draw(st.lists(st.integers(1, rs.rank), max_size=25))
    w, v = from_word(rs, word), from_word(rs, other)
    assert (w * w.inverse()).is_identity()
    assert w * v == from_word(rs, word + other)
    assert (w * v).inverse() == v.inverse() * w.inverse()
    assert length(w) == length(w.inverse())
    for beta in rs.positives[:6]:
        assert w.act_inverse(w.act(beta)) == beta


@pytest.mark.parametrize("name,N", [("A3", 6), ("D4", 12), ("E6", 36), ("E7", 63), ("E8", 120), ("B2", 4)])
def test_longest_element(name, N):
    rs = build(name)
    w0 = longest_element(rs, rs.simples)
    assert length(w0) == N
    for beta in rs.positives:
        assert sum(w0.act(beta)) < 0


@pytest.mark.parametrize(
    "name,sigma",
    [
        ("A2", {1: 2, 2: 1}),
        ("A3", {1: 3, 2: 2, 3: 1}),
        ("D4", {1: 1, 2: 2, 3: 3, 4: 4}),
        ("D5", {1: 1, 2: 2, 3: 3, 4: 5, 5: 4}),
        ("E6", {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}),
        ("E7", {i: i for i in range(1, 8)}),
    ],
)
def test_diagram_automorphism(name, sigma):
    assert diagram_automorphism(build(name)) == sigma


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_parabolic_factorisation_counts(name):
    rs = build(name)
    order = WEYL_ORDERS[name]
    for k in range(rs.rank + 1):
        for J in combinations(range(1, rs.rank + 1), k):
            reps = list(min_reps(rs, J))
            levi = longest_element(rs, J)
            # |W_J| by closure of the Levi generators
            sub = {identity(rs)}
            frontier = [identity(rs)]
            while frontier:
                nxt = []
                for w in frontier:
                    for j in J:
                        u = w * reflection(rs, j)
                        if u not in sub:
                            sub.add(u)
                            nxt.append(u)
                frontier = nxt
            assert len(reps) * len(sub) == order
            assert all(is_min_rep(w, J) for w in reps)
            assert length(levi) == len(rs.positive_in(J))


@pytest.mark.parametrize("name", ["A3", "D4", "B2"])
def test_coset_decompose(name):
    rs = build(name)
    closure = group_closure(np.asarray(rs.cartan))
    J = {1} if name == "B2" else {1, 2}
    for word in closure.values():
        w = from_word(rs, word)
        u, v = coset_decompose(w, J)
        assert u * v == w
        assert is_min_rep(u, J)
        assert length(u) + length(v) == length(w)
        assert set(reduced_word(v)) <= J


def test_min_reps_ordering_and_cap():
    rs = build("D4")
    reps = list(min_reps(rs, {2}))
    lengths = [length(w) for w in reps]
    assert lengths == sorted(lengths)
    assert len(set(reps)) == len(reps)
    with pytest.raises(EnumerationTooLarge) as info:
        list(min_reps(rs, {2}, cap=10))
    assert info.value.cap == 10 and "D4" in info.value.label


def test_e8_maximal_parabolic_reps():
    assert sum(1 for _ in min_reps(build("E8"), set(range(1, 8)))) == 240


def test_all_reduced_words_small():
    rs = build("A2")
    w0 = longest_element(rs, rs.simples)
    assert all_reduced_words(w0) == [(1, 2, 1), (2, 1, 2)]


def test_act_weight_matches_root_action():
    rs = build("E6")
    w = from_word(rs, [2, 4, 5, 3, 1])
    for beta in rs.positives[:10]:
        assert w.act_weight(rs.to_weight(beta)) == rs.to_weight(w.act(beta))
