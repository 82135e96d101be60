from __future__ import annotations

import numpy as np
import pytest

from oracles import weight_orbit
from schubert_aut.classify import (
    PreconditionError,
    check_minimal_negative_rep,
    classify,
    is_cominuscule,
    is_minuscule,
    minuscule_set,
    parabolic_longest_image,
)
from schubert_aut.rootsys import build, sub

EXPECTED = {
    **{f"A{n}": set(range(1, n + 1)) for n in range(1, 9)},
    **{f"D{n}": {1, n - 1, n} for n in range(4, 11)},
    "E6": {1, 6},
    "E7": {7},
    "E8": set(),
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_minuscule_table(name):
    assert minuscule_set(build(name)) == EXPECTED[name]


@pytest.mark.parametrize("name", ["A1", "A3", "A4", "B2", "D4", "D5", "E6"])
def test_minuscule_matches_orbit_oracle(name):
    # omega_r is minuscule iff every weight in its orbit pairs into {-1, 0, 1}
    rs = build(name)
    C = np.asarray(rs.cartan)
    for r in range(1, rs.rank + 1):
        fw = tuple(1 if k == r - 1 else 0 for k in range(rs.rank))
        orbit = weight_orbit(C, fw)
        oracle = all(abs(c) <= 1 for lam in orbit for c in lam)
        assert is_minuscule(rs, r) == oracle, (name, r)


@pytest.mark.parametrize("name", ["A5", "D6", "E6", "E7", "E8"])
def test_simply_laced_minuscule_equals_cominuscule(name):
    rs = build(name)
    for r in range(1, rs.rank + 1):
        assert is_minuscule(rs, r) == is_cominuscule(rs, r)


def test_b2_distinguishes_the_two_notions():
    rs = build("B2")
    # alpha_1 long: omega_2 is the spin-type minuscule weight, omega_1 cominuscule
    assert minuscule_set(rs) == {2}
    assert {r for r in (1, 2) if is_cominuscule(rs, r)} == {1}
    # off the simply-laced world the image at the minuscule node is the highest short root
    assert parabolic_longest_image(rs, 2) == (1, 1)


@pytest.mark.parametrize("name", ["A1", "A4", "D4", "D5", "D7", "E6", "E7", "E8"])
def test_image_is_alpha0_exactly_on_minuscule(name):
    rs = build(name)
    for r in range(1, rs.rank + 1):
        assert (parabolic_longest_image(rs, r) == rs.highest) == is_minuscule(rs, r), (name, r)


@pytest.mark.parametrize("name,s", [("D4", 2), ("D5", 2), ("D8", 2), ("E6", 2), ("E7", 1), ("E8", 8)])
def test_adjoint_node_image(name, s):
    rs = build(name)
    assert parabolic_longest_image(rs, s) == sub(rs.highest, rs.simple_root(s))


def test_classify_report_fields():
    rs = build("E7")
    reps = classify(rs)
    assert [r.index for r in reps] == list(range(1, 8))
    assert [r.index for r in reps if r.minuscule] == [7]
    assert reps[6].to_json()["w0J_image"] == [2, 2, 3, 4, 3, 2, 1]


@pytest.mark.parametrize("name,r", [("A3", 2), ("D4", 1), ("D5", 5), ("E6", 1), ("E6", 6), ("E7", 7)])
def test_minimal_negative_rep_is_unique(name, r):
    assert check_minimal_negative_rep(build(name), r)


def test_minimal_negative_rep_rejects_non_minuscule():
    with pytest.raises(PreconditionError):
        check_minimal_negative_rep(build("D4"), 2)
