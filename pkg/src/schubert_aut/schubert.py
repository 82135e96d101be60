"""Stabilizers of Schubert varieties and the automorphism criterion.

For ``w`` in ``W^J`` the Schubert variety ``X_{P_J}(w)`` is stabilized by
the parabolic generated by ``B`` and the simple reflections ``s_i`` with
``s_i w W_J <= w W_J``.  In root terms that is ``w^{-1}(alpha_i) < 0`` or
``w^{-1}(alpha_i)`` a positive root of the Levi of ``J``.  The connected
automorphism group is that parabolic exactly when ``w^{-1}(alpha_0) < 0``
(simply-laced types).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .classify import PreconditionError, is_minuscule
from .rootsys import RootSystem
from .weyl import (
    DEFAULT_CAP,
    WeylElement,
    coset_decompose,
    diagram_automorphism,
    longest_element,
    min_reps,
)

__all__ = [
    "WitnessReport",
    "is_faithful",
    "minuscule_obstruction",
    "nonempty_subsets",
    "search_witnesses",
    "stabilizer_simples",
    "verify_witness",
]


@dataclass(frozen=True)
class WitnessReport:
    target: int
    ambient: frozenset
    element: WeylElement
    stabilizer: frozenset
    faithful: bool
    verdict: bool
    reasons: tuple = field(default=())

    def to_json(self) -> dict:
        return {
            "type": str(self.element.rs.ctype),
            "target": self.target,
            "ambient": sorted(self.ambient),
            "element": self.element.to_json(),
            "stabilizer": sorted(self.stabilizer),
            "faithful": self.faithful,
            "verdict": self.verdict,
            "reasons": list(self.reasons),
        }


def _parabolic(rs: RootSystem, J: Iterable[int]) -> frozenset:
    return frozenset(rs.check_index(j) for j in J)


def _stabilizer(rs: RootSystem, w: WeylElement, J: frozenset) -> frozenset:
    inv = w.inverse_matrix
    heights = inv.sum(axis=0)
    outside = [k for k in range(rs.rank) if (k + 1) not in J]
    # column i is w^{-1}(alpha_i); it lies in R_J exactly when it vanishes off J
    in_levi = ~inv[outside, :].any(axis=0) if outside else np.ones(rs.rank, dtype=bool)
    mask = (heights < 0) | ((heights > 0) & in_levi)
    return frozenset(int(k) + 1 for k in np.flatnonzero(mask))


def stabilizer_simples(rs: RootSystem, w: WeylElement, J: Iterable[int]) -> frozenset:
    """Simple indices ``i`` whose minimal parabolic stabilizes ``X_{P_J}(w)``."""
    J = _parabolic(rs, J)
    heights = w.matrix.sum(axis=0)
    for j in sorted(J):
        if heights[j - 1] < 0:
            raise PreconditionError(
                f"element is not a minimal representative for J={sorted(J)}: "
                f"w(alpha_{j}) is negative"
            )
    return _stabilizer(rs, w, J)


def is_faithful(rs: RootSystem, w: WeylElement) -> bool:
    """True iff ``w^{-1}(alpha_0)`` is a negative root."""
    return sum(w.act_inverse(rs.highest)) < 0


def verify_witness(rs: RootSystem, target: int, J: Iterable[int], w: WeylElement) -> WitnessReport:
    """Check that ``X_{P_J}(w)`` has connected automorphism group ``P_target``.

    Never raises on a failed condition; each failure is recorded in ``reasons``.
    """
    target = rs.check_index(target)
    J = _parabolic(rs, J)
    reasons = []
    heights = w.matrix.sum(axis=0)
    bad = [j for j in sorted(J) if heights[j - 1] < 0]
    if bad:
        reasons.append(f"not in W^J: w(alpha_{bad[0]}) is negative")
        # report the stabilizer of the variety the coset actually names
        stab = _stabilizer(rs, coset_decompose(w, J)[0], J)
    else:
        stab = _stabilizer(rs, w, J)
    if stab != {target}:
        reasons.append(f"stabilizer is {sorted(stab)}, expected [{target}]")
    faithful = is_faithful(rs, w)
    if not faithful:
        reasons.append("w^{-1}(alpha_0) is positive")
    return WitnessReport(
        target=target,
        ambient=J,
        element=w,
        stabilizer=stab,
        faithful=faithful,
        verdict=not reasons,
        reasons=tuple(reasons),
    )


def nonempty_subsets(rs: RootSystem) -> list[frozenset]:
    """Nonempty subsets of the simple indices by size, then lexicographically."""
    idx = range(1, rs.rank + 1)
    return [frozenset(c) for k in range(1, rs.rank + 1) for c in combinations(idx, k)]


def search_witnesses(
    rs: RootSystem, target: int, cap: int = DEFAULT_CAP, include_empty: bool = False
) -> list[tuple[frozenset, WeylElement]]:
    """Exhaustively list every ``(J, w)`` with ``verify_witness`` true.

    Subsets run in :func:`nonempty_subsets` order (``J`` empty first when
    ``include_empty``) and elements in :func:`min_reps` order, so the
    result is deterministic.  ``cap`` bounds each ``W^J`` enumeration.
    """
    target = rs.check_index(target)
    subsets = ([frozenset()] if include_empty else []) + nonempty_subsets(rs)
    alpha0 = np.asarray(rs.highest, dtype=np.int64)
    found = []
    for J in subsets:
        for w in min_reps(rs, J, cap):
            if (w.inverse_matrix @ alpha0).sum() >= 0:
                continue
            if _stabilizer(rs, w, J) == {target}:
                found.append((J, w))
    return found


def minuscule_obstruction(rs: RootSystem, r: int) -> bool:
    """Show that no proper parabolic admits a witness for a minuscule ``omega_r``.

    A witness ``(J, w)`` would force ``w^{-1}`` into ``W^{S - {r}}`` (every
    other simple root stays positive) with ``w^{-1}(alpha_0) < 0``, and for
    minuscule ``omega_r`` the only such element is ``w_0^{S - {r}}``.  So
    ``w`` is pinned to its inverse, ``w_0^{S - {sigma(r)}}``, and it is
    enough to scan the subsets ``J`` for which ``w`` lies in ``W^J``.
    """
    r = rs.check_index(r)
    if not is_minuscule(rs, r):
        raise PreconditionError(f"omega_{r} is not minuscule in {rs.ctype}")
    S = rs.simples
    w0 = longest_element(rs, S)
    sigma = diagram_automorphism(rs)
    w = coset_decompose(w0, S - {sigma[r]})[0]
    assert w.inverse() == coset_decompose(w0, S - {r})[0]
    heights = w.matrix.sum(axis=0)
    for J in nonempty_subsets(rs):
        if any(heights[j - 1] < 0 for j in J):
            continue
        if _stabilizer(rs, w, J) == {r}:
            return False
    return True

