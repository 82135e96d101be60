"""Minuscule nodes, highest roots and the shortest elements that move alpha_0.

Run with ``python3 demos/01_minuscule_and_extremal.py``.
"""
from __future__ import annotations

from schubert_aut import build
from schubert_aut.classify import classify
from schubert_aut.extremal import dual_coxeter, minimal_negator, minimal_transporter

for name in ("A4", "D6", "E6", "E7", "E8"):
    rs = build(name)
    reports = classify(rs)
    mins = [r.index for r in reports if r.minuscule]
    print(f"{name}: highest root {list(rs.highest)}, minuscule nodes {mins or 'none'}, g = {dual_coxeter(rs)}")

# In a simply-laced type every simple root is reached from alpha_0 by a
# unique shortest element, and the length is always g - 2.
rs = build("E7")
print("\nE7 transporters (u^-1(alpha_0) = alpha_i) and negators (v^-1(alpha_0) = -alpha_i):")
for i in range(1, rs.rank + 1):
    t = minimal_transporter(rs, rs.simple_root(i))
    v = minimal_negator(rs, i)
    print(f"  i={i}: len(u)={t.length:2d} unique={t.unique}  len(v)={v.length:2d}  v = s{'s'.join(map(str, v.element.to_json()['word']))}")
