"""Why minuscule nodes have no witness, and a non-simply-laced contrast.

For minuscule omega_r the only candidate element is pinned down, so a
finite scan over ambient sets J settles the question even in E7 where
listing W is impractical.  In B2, where alpha_1 is long, the Demazure
character of H^0(s_2 s_1, g/p_2) turns out to be the character of g
itself.
"""
from __future__ import annotations

from schubert_aut import build
from schubert_aut.classify import minuscule_set
from schubert_aut.demazure import adjoint_character, h0_module_character, module_character
from schubert_aut.schubert import minuscule_obstruction
from schubert_aut.weyl import from_word

for name in ("A5", "D8", "E6", "E7"):
    rs = build(name)
    print(name, {r: minuscule_obstruction(rs, r) for r in sorted(minuscule_set(rs))})

rs = build("B2")
print("\nweights of g/p_2:", module_character(rs, {2}).to_json())
h = h0_module_character(rs, from_word(rs, [2, 1]), {2}, strict=True)
print("H^0(s_2 s_1, g/p_2) has dimension", h.dimension)
print("equal to the adjoint character:", h == adjoint_character(rs))
