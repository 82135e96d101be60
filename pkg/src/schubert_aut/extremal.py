"""Dual Coxeter number and minimal-length elements moving the highest root.

The searches run on the *root graph* (vertices are roots, ``beta`` is
joined to ``s_i(beta)``) rather than on the Weyl group.  A walk
``alpha_0 -> s_{i_1} alpha_0 -> ... -> beta`` of length ``d`` yields the
element ``y = s_{i_d} ... s_{i_1}`` with ``y(alpha_0) = beta``, and every
reduced word of such an element gives a walk, so BFS distance equals the
minimal length.  All shortest walks are folded into a set of distinct
elements per vertex, which is how uniqueness is tested rather than assumed.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .classify import PreconditionError
from .rootsys import Root, RootSystem, height, neg
from .weyl import WeylElement, identity, length, reduced_word, reflection

__all__ = [
    "TransporterResult",
    "dual_coxeter",
    "minimal_negator",
    "minimal_transporter",
    "root_graph_distances",
]


@dataclass(frozen=True)
class TransporterResult:
    target: Root
    element: WeylElement
    length: int
    unique: bool

    def to_json(self) -> dict:
        return {
            "target": list(self.target),
            "element": self.element.to_json(),
            "length": self.length,
            "unique": self.unique,
        }


def dual_coxeter(rs: RootSystem) -> int:
    """``1 + sum`` of the coefficients of the highest coroot."""
    top = rs.norm(rs.highest)
    total = 1 + sum(Fraction(c * rs.root_norms[i], top) for i, c in enumerate(rs.highest))
    assert total.denominator == 1
    return int(total)


def root_graph_distances(rs: RootSystem, source: Root | None = None) -> dict[Root, int]:
    """BFS distances from ``source`` (default the highest root) in the root graph."""
    source = rs.highest if source is None else rs.check_root(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        beta = queue.popleft()
        for i in range(1, rs.rank + 1):
            k = rs.pair_root(beta, i)
            if k == 0:
                continue
            gamma = tuple(c - k if j == i - 1 else c for j, c in enumerate(beta))
            if gamma not in dist:
                dist[gamma] = dist[beta] + 1
                queue.append(gamma)
    return dist


def _shortest_movers(rs: RootSystem, target: Root) -> list[WeylElement]:
    """Distinct ``y`` of minimal length with ``y(alpha_0) = target``."""
    dist = root_graph_distances(rs)
    if target not in dist:
        raise PreconditionError(f"{list(target)} is not in the W-orbit of the highest root")
    layers: dict[int, list[Root]] = {}
    for beta, d in dist.items():
        layers.setdefault(d, []).append(beta)
    movers: dict[Root, dict[bytes, WeylElement]] = {rs.highest: {b"": identity(rs)}}
    for d in range(1, dist[target] + 1):
        for gamma in layers[d]:
            found: dict[bytes, WeylElement] = {}
            for i in range(1, rs.rank + 1):
                k = rs.pair_root(gamma, i)
                if k == 0:
                    continue
                parent = tuple(c - k if j == i - 1 else c for j, c in enumerate(gamma))
                if dist.get(parent) != d - 1:
                    continue
                s = reflection(rs, i)
                for y in movers[parent].values():
                    z = s * y
                    found.setdefault(z.matrix.tobytes(), z)
            movers[gamma] = found
    return sorted(movers[target].values(), key=WeylElement.sort_key)


def _transport(rs: RootSystem, target: Root) -> TransporterResult:
    ys = _shortest_movers(rs, target)
    # the transporter u satisfies u^{-1}(alpha_0) = target, so u = y^{-1}
    us = sorted((y.inverse() for y in ys), key=WeylElement.sort_key)
    u = us[0]
    u = type(u)(rs, u.matrix, u.inverse_matrix, reduced_word(u))
    return TransporterResult(target=target, element=u, length=length(u), unique=len(us) == 1)


def minimal_transporter(rs: RootSystem, alpha) -> TransporterResult:
    """Minimal-length ``u`` with ``u^{-1}(alpha_0) = alpha`` for a long root ``alpha``."""
    alpha = rs.check_root(alpha)
    if not rs.is_long(alpha):
        raise PreconditionError(f"{list(alpha)} is a short root of {rs.ctype}")
    res = _transport(rs, alpha)
    if sum(alpha) == 1:
        assert res.length == dual_coxeter(rs) - 2, (rs.ctype, alpha, res.length)
    return res


def minimal_negator(rs: RootSystem, i: int) -> TransporterResult:
    """Minimal-length ``v`` with ``v^{-1}(alpha_0) = -alpha_i``."""
    i = rs.check_index(i)
    res = _transport(rs, neg(rs.simple_root(i)))
    if rs.ctype.simply_laced:
        assert res.length == height(rs, rs.highest), (rs.ctype, i, res.length)
    return res
