"""Minuscule and cominuscule fundamental weights."""
from __future__ import annotations

from dataclasses import dataclass

from .rootsys import Root, RootSystem, is_positive
from .weyl import DEFAULT_CAP, apply, coset_decompose, longest_element, min_reps

__all__ = [
    "MinusculeReport",
    "PreconditionError",
    "check_minimal_negative_rep",
    "classify",
    "is_cominuscule",
    "is_minuscule",
    "minuscule_set",
    "parabolic_longest_image",
]


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


@dataclass(frozen=True)
class MinusculeReport:
    index: int
    minuscule: bool
    cominuscule: bool
    w0J_image: Root

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "minuscule": self.minuscule,
            "cominuscule": self.cominuscule,
            "w0J_image": list(self.w0J_image),
        }


def is_minuscule(rs: RootSystem, r: int) -> bool:
    """True when ``<omega_r, beta^vee> <= 1`` for every positive root ``beta``.

    Scans the whole positive system instead of reading off the highest
    root, so that the comparison with :func:`is_cominuscule` is a real check.
    """
    r = rs.check_index(r)
    return all(rs.coroot_coords(beta)[r - 1] <= 1 for beta in rs.positives)


def is_cominuscule(rs: RootSystem, r: int) -> bool:
    r = rs.check_index(r)
    return rs.highest[r - 1] == 1


def minuscule_set(rs: RootSystem) -> set[int]:
    return {r for r in range(1, rs.rank + 1) if is_minuscule(rs, r)}


def parabolic_longest_image(rs: RootSystem, r: int) -> Root:
    """``w_{0, S - {r}}(alpha_r)``."""
    r = rs.check_index(r)
    w = longest_element(rs, rs.simples - {r})
    return apply(w, rs.simple_root(r))


def check_minimal_negative_rep(rs: RootSystem, r: int, cap: int = DEFAULT_CAP) -> bool:
    """Confirm ``w_0^{S - {r}}`` is the only ``v`` in ``W^{S - {r}}`` with ``v(alpha_0) < 0``."""
    r = rs.check_index(r)
    if not is_minuscule(rs, r):
        raise PreconditionError(f"omega_{r} is not minuscule in {rs.ctype}")
    J = rs.simples - {r}
    negators = [v for v in min_reps(rs, J, cap) if not is_positive(v.act(rs.highest))]
    expected = coset_decompose(longest_element(rs, rs.simples), J)[0]
    return negators == [expected]


def classify(rs: RootSystem) -> list[MinusculeReport]:
    return [
        MinusculeReport(
            index=r,
            minuscule=is_minuscule(rs, r),
            cominuscule=is_cominuscule(rs, r),
            w0J_image=parabolic_longest_image(rs, r),
        )
        for r in range(1, rs.rank + 1)
    ]
