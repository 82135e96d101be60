"""The end-to-end verification pipeline behind ``schubert-aut verify-all``.

Each step returns a :class:`StepResult`; the pipeline passes iff every step
does.  Reference tables below are the published values the engine is
checked against (minuscule sets, highest roots, dual Coxeter numbers).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .classify import classify, minuscule_set
from .constructions import D_RANKS, E_DATA, build_dn, build_e, list_suites, verify_lemma_suite
from .demazure import adjoint_character, h0_module_character, module_character
from .extremal import dual_coxeter, minimal_negator, minimal_transporter
from .rootsys import build, height
from .schubert import minuscule_obstruction, search_witnesses, verify_witness
from .weyl import DEFAULT_CAP, from_word

__all__ = [
    "HIGHEST_ROOTS",
    "StepResult",
    "expected_minuscule",
    "run_all",
]

HIGHEST_ROOTS = {
    "E6": (1, 2, 2, 3, 2, 1),
    "E7": (2, 2, 3, 4, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
}

DUAL_COXETER_E = {"E6": 12, "E7": 18, "E8": 30}


def expected_minuscule(name: str) -> set[int]:
    rs = build(name)
    n = rs.rank
    fam = rs.ctype.family
    if fam == "A":
        return set(range(1, n + 1))
    if fam == "D":
        return {1, n - 1, n}
    if fam == "B":
        return {2}
    return {6: {1, 6}, 7: {7}, 8: set()}[n]


def _expected_highest(name: str) -> tuple:
    rs = build(name)
    n = rs.rank
    if rs.ctype.family == "A":
        return (1,) * n
    if rs.ctype.family == "D":
        return (1,) + (2,) * (n - 3) + (1, 1)
    if rs.ctype.family == "B":
        return (1, 2)
    return HIGHEST_ROOTS[name]


def _expected_g(name: str) -> int:
    rs = build(name)
    n = rs.rank
    return {"A": n + 1, "D": 2 * n - 2, "B": 3}.get(rs.ctype.family) or DUAL_COXETER_E[name]


@dataclass
class StepResult:
    name: str
    passed: bool = True
    failures: list = field(default_factory=list)
    count: int = 0

    def check(self, ok: bool, what: str):
        self.count += 1
        if not ok:
            self.passed = False
            self.failures.append(what)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checks": self.count, "failures": self.failures}


CLASSIFY_TYPES = [f"A{n}" for n in range(1, 9)] + [f"D{n}" for n in range(4, 9)] + ["E6", "E7", "E8", "B2"]
TRANSPORT_TYPES = [f"A{n}" for n in range(1, 7)] + [f"D{n}" for n in range(4, 7)] + ["E6", "E7", "E8"]


def step_classify() -> StepResult:
    st = StepResult("minuscule classification")
    for name in CLASSIFY_TYPES:
        rs = build(name)
        got = minuscule_set(rs)
        st.check(got == expected_minuscule(name), f"{name}: minuscule set {sorted(got)}")
        for rep in classify(rs):
            if rs.ctype.simply_laced:
                st.check(rep.minuscule == rep.cominuscule, f"{name}: node {rep.index} minuscule/cominuscule disagree")
    return st


def step_highest() -> StepResult:
    st = StepResult("highest roots")
    for name in CLASSIFY_TYPES + ["D9", "D10"]:
        rs = build(name)
        st.check(rs.highest == _expected_highest(name), f"{name}: highest root {list(rs.highest)}")
    return st


def step_transporters() -> StepResult:
    st = StepResult("minimal transporters and negators")
    for name in TRANSPORT_TYPES:
        rs = build(name)
        g = dual_coxeter(rs)
        st.check(g == _expected_g(name), f"{name}: dual Coxeter number {g}")
        for i in range(1, rs.rank + 1):
            t = minimal_transporter(rs, rs.simple_root(i))
            v = minimal_negator(rs, i)
            st.check(t.length == g - 2 and t.unique, f"{name}: transporter for alpha_{i}")
            st.check(v.length == height(rs, rs.highest) and v.unique, f"{name}: negator for alpha_{i}")
    return st


def step_lemmas(max_rank: int | None = None) -> StepResult:
    st = StepResult("lemma suites")
    ranks = D_RANKS if max_rank is None else range(4, max_rank + 1)
    for sid, _ in list_suites():
        if sid.startswith("D."):
            for n in ranks:
                res = verify_lemma_suite(sid, n)
                st.check(res.all_pass, f"{sid} n={n}: " + "; ".join(c.description for c in res.checks if not c.passed))
        else:
            res = verify_lemma_suite(sid)
            st.check(res.all_pass, f"{sid}: " + "; ".join(c.description for c in res.checks if not c.passed))
    return st


def step_witnesses(max_rank: int | None = None) -> StepResult:
    st = StepResult("witness verdicts")
    top = 10 if max_rank is None else max_rank
    for n in range(4, top + 1):
        rs = build(f"D{n}")
        for i in range(2, n - 1):
            J, w = build_dn(n, i)
            st.check(verify_witness(rs, i, J, w).verdict, f"D{n}: w_{i}")
    for k, data in E_DATA.items():
        rs = build(f"E{k}")
        for i in data.targets:
            J, w = build_e(f"E{k}", i)
            st.check(verify_witness(rs, i, J, w).verdict, f"E{k}: w_{i}")
    return st


def _construction(name: str, i: int):
    rs = build(name)
    if rs.ctype.family == "D":
        return build_dn(rs.rank, i)
    if rs.ctype.family == "E" and i in E_DATA[rs.rank].targets:
        return build_e(name, i)
    return None


def step_oracle(deep: bool = False, cap: int = DEFAULT_CAP) -> StepResult:
    st = StepResult("exhaustive witness search")
    names = ["A2", "A3", "D4"] + (["D5", "E6"] if deep else [])
    for name in names:
        rs = build(name)
        mins = minuscule_set(rs)
        for r in range(1, rs.rank + 1):
            found = search_witnesses(rs, r, cap)
            if r in mins:
                st.check(not found, f"{name}: {len(found)} witnesses for minuscule target {r}")
                continue
            st.check(bool(found), f"{name}: no witness for target {r}")
            ref = _construction(name, r)
            if ref is not None:
                st.check(ref in [(J, w) for J, w in found], f"{name}: construction for {r} not rediscovered")
    return st


def step_obstruction() -> StepResult:
    st = StepResult("minuscule obstruction")
    names = [f"A{n}" for n in range(1, 9)] + [f"D{n}" for n in range(4, 11)] + ["E6", "E7", "E8"]
    for name in names:
        rs = build(name)
        for r in sorted(minuscule_set(rs)):
            st.check(minuscule_obstruction(rs, r), f"{name}: omega_{r}")
    return st


def step_b2() -> StepResult:
    st = StepResult("B2 Demazure character")
    rs = build("B2")
    st.check(
        module_character(rs, {2}).terms == {rs.to_weight(b): 1 for b in [(1, 0), (1, 1), (1, 2)]},
        "filtration weights of g/p_2",
    )
    h = h0_module_character(rs, from_word(rs, [2, 1]), {2}, strict=True)
    st.check(h == adjoint_character(rs), "H^0 character differs from the adjoint character")
    st.check(h.dimension == 10, f"dimension {h.dimension}")
    return st


def run_all(deep: bool = False, cap: int = DEFAULT_CAP, max_rank: int | None = None) -> list[StepResult]:
    return [
        step_classify(),
        step_highest(),
        step_transporters(),
        step_lemmas(max_rank),
        step_witnesses(max_rank),
        step_oracle(deep, cap),
        step_obstruction(),
        step_b2(),
    ]
