from __future__ import annotations

import numpy as np
import pytest

from oracles import d_roots, reflection_matrices
from schubert_aut.classify import PreconditionError
from schubert_aut.constructions import (
    D_RANKS,
    E_DATA,
    build_dn,
    build_e,
    dn_u,
    dn_v_word,
    e_v,
    list_suites,
    verify_lemma_suite,
)
from schubert_aut.extremal import minimal_negator
from schubert_aut.rootsys import build, sub
from schubert_aut.schubert import verify_witness
from schubert_aut.weyl import from_word, is_min_rep, length


def _oracle_word(cartan, word) -> np.ndarray:
    mats = reflection_matrices(np.asarray(cartan))
    M = np.eye(len(mats), dtype=np.int64)
    for i in word:
        M = M @ mats[i - 1]
    return M


def _eps_to_simple(n: int, eps: dict) -> tuple:
    # alpha_k = e_k - e_{k+1} (k < n), alpha_n = e_{n-1} + e_n
    basis = np.zeros((n, n))
    for k in range(n - 1):
        basis[k, k], basis[k + 1, k] = 1, -1
    basis[n - 2, n - 1] = basis[n - 1, n - 1] = 1
    v = np.array([eps.get(k, 0) for k in range(1, n + 1)], dtype=float)
    return tuple(int(round(x)) for x in np.linalg.solve(basis, v))


def test_build_dn_examples():
    rs = build("D4")
    J, w = build_dn(4, 2)
    assert J == {2}
    assert w == from_word(rs, [2, 3, 4, 2, 1])
    d5 = build("D5")
    _, w3 = build_dn(5, 3)
    assert w3.act_inverse(d5.simple_root(2)) == (1, 0, 0, 0, 0)
    _, w4 = build_dn(6, 4)
    assert w4.act((0, 0, 0, 1, 0, 0)) == (1, 1, 1, 1, 0, 0)


def test_build_dn_rejects_bad_indices():
    for n, i in [(4, 1), (4, 3), (6, 5), (3, 1)]:
        with pytest.raises(IndexError):
            build_dn(n, i)


def test_dn_u_matches_oracle_matrices():
    for n in (4, 6, 8):
        rs = build(f"D{n}")
        for i in range(1, n - 1):
            word = list(range(i, n - 1)) + [n - 1, n] + list(range(n - 2, i - 1, -1))
            assert np.array_equal(dn_u(n, i).matrix, _oracle_word(rs.cartan, word))


def test_closed_form_v_words():
    for n in (5, 7, 9):
        rs = build(f"D{n}")
        for i in range(1, n - 2):
            v = from_word(rs, dn_v_word(n, i))
            assert v == minimal_negator(rs, i).element
            assert length(v) == 2 * n - 3


def test_build_e_degenerate_cases():
    for name, i, ambient in [("E6", 2, {4}), ("E7", 1, {3}), ("E8", 8, {7})]:
        J, w = build_e(name, i)
        assert J == ambient
        assert w == e_v(name)


def test_build_e_rejects_minuscule_targets():
    with pytest.raises(PreconditionError, match="minuscule"):
        build_e("E6", 1)
    with pytest.raises(PreconditionError, match="minuscule"):
        build_e("E7", 7)
    with pytest.raises(PreconditionError):
        build_e("D5", 2)


@pytest.mark.parametrize("n", list(D_RANKS))
def test_every_dn_witness_verifies(n):
    rs = build(f"D{n}")
    for i in range(2, n - 1):
        J, w = build_dn(n, i)
        rep = verify_witness(rs, i, J, w)
        assert rep.verdict, rep.reasons
        image = w.act(rs.simple_root(i))
        assert sum(image) > 1 and min(image) >= 0


@pytest.mark.parametrize("k", [6, 7, 8])
def test_every_e_witness_verifies(k):
    name = f"E{k}"
    rs = build(name)
    data = E_DATA[k]
    for i in data.targets:
        J, w = build_e(name, i)
        assert is_min_rep(w, J)
        rep = verify_witness(rs, i, J, w)
        assert rep.verdict, (i, rep.reasons)
        image = w.act(rs.simple_root(data.ambient))
        assert sum(image) > 1 and min(image) >= 0
        assert sum(w.act_inverse(rs.highest)) < 0


def test_registry():
    ids = [k for k, _ in list_suites()]
    assert len(ids) == len(set(ids)) == 18
    assert ids[0].startswith("D.") and "adjoint.w0.images" in ids
    with pytest.raises(KeyError):
        verify_lemma_suite("no.such.suite")
    with pytest.raises(PreconditionError):
        verify_lemma_suite("E6.v2.images", 6)


@pytest.mark.parametrize(
    "suite,n",
    [("E6.v2.images", None), ("D.u.images", 7), ("E8.w.signs", None), ("D.w.signs", None), ("E6.w.signs", None),
     ("E7.w.signs", None), ("D.w.images", None), ("E8.v6.images", None), ("adjoint.w0.images", None)],
)
def test_suites_that_pass(suite, n):
    res = verify_lemma_suite(suite, n)
    assert res.all_pass, [c.description for c in res.checks if not c.passed]


def test_d_v_images_reports_the_v1_display_as_data():
    res = verify_lemma_suite("D.v.images")
    failing = [c for c in res.checks if not c.passed]
    assert [c.description for c in failing] == [f"D{n}: v_1^-1(alpha_2)" for n in D_RANKS]
    for c, n in zip(failing, D_RANKS):
        # independent value: v_1^-1(alpha_2) = -(e_1 + e_3) in the coordinate model
        target = _eps_to_simple(n, {1: 1, 3: 1})
        assert target in d_roots(n)
        assert c.computed == [-x for x in target]
        assert c.expected != c.computed
    rest = verify_lemma_suite("D.v.images", 6)
    assert sum(not c.passed for c in rest.checks) == 1


def test_e7_display_mismatch_is_reported_with_the_correct_value():
    res = verify_lemma_suite("E7.v4.images")
    failing = [c for c in res.checks if not c.passed]
    assert [c.description for c in failing] == ["w0(S-{1}) v_4(alpha_3)"]
    rs = build("E7")
    beta = _oracle_word(rs.cartan, E_DATA[7].v_word) @ np.array([0, 0, 1, 0, 0, 0, 0])
    # w_{0,S-{1}} fixes alpha_1 up to alpha_0 - alpha_1 and negates every other simple root
    image = beta[0] * np.array(sub(rs.highest, rs.simple_root(1))) - np.concatenate(([0], beta[1:]))
    assert failing[0].computed == [int(x) for x in image] == [1, 1, 2, 2, 1, 1, 0]
    assert failing[0].expected == [1, 1, 2, 1, 1, 1, 0]


def test_proof_notes_are_kept_apart():
    res = verify_lemma_suite("D.v.images", 5)
    assert res.proof_notes
    assert all(c.level == "proof" for c in res.proof_notes)
    assert {c.expected for c in res.proof_notes} == {"alpha_(j-2)"}
    js = res.to_json()
    assert js["all_pass"] is False and len(js["proof_notes"]) == len(res.proof_notes)
