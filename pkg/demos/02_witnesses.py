"""Schubert varieties whose automorphism group is a given minimal parabolic.

For each non-minuscule node the package builds an explicit pair (J, w) and
checks that the stabilizer of X_{P_J}(w) is exactly P_i and that
w^{-1}(alpha_0) is negative, which is the faithfulness criterion.
"""
from __future__ import annotations

from schubert_aut import build
from schubert_aut.constructions import E_DATA, build_dn, build_e
from schubert_aut.schubert import search_witnesses, verify_witness
from schubert_aut.weyl import length, reduced_word

rs = build("D7")
print("D7 witnesses, ambient parabolic P_i:")
for i in range(2, 6):
    J, w = build_dn(7, i)
    rep = verify_witness(rs, i, J, w)
    print(f"  w_{i}: length {length(w):2d}, stabilizer {sorted(rep.stabilizer)}, verdict {rep.verdict}")

for k, data in E_DATA.items():
    rs = build(f"E{k}")
    ok = [i for i in data.targets if verify_witness(rs, i, *build_e(f"E{k}", i)).verdict]
    print(f"E{k}: ambient {{{data.ambient}}}, verified targets {ok}")

# The small cases can be settled by brute force over every nonempty J.
rs = build("D4")
for r in range(1, 5):
    found = search_witnesses(rs, r)
    sample = reduced_word(found[0][1]) if found else None
    print(f"D4 target {r}: {len(found)} witnesses" + (f", first word {sample}" if sample else ""))
