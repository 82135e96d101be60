"""Characters over the weight lattice and Demazure operators.

A :class:`Character` is a finite formal sum of exponentials ``e^lambda``
with integer multiplicities, keyed by fundamental-weight coordinates so
that every pairing ``<lambda, alpha_i^vee>`` is a coordinate read.
"""
from __future__ import annotations

from typing import Iterable, Mapping

from .classify import PreconditionError
from .rootsys import RootSystem, Weight
from .weyl import WeylElement, from_word, is_min_rep, length, reduced_word

__all__ = [
    "Character",
    "adjoint_character",
    "demazure_apply",
    "demazure_step",
    "dot_action",
    "h0_module_character",
    "module_character",
    "reflect_weight",
]


class Character:
    """Finite map from :class:`Weight` to nonzero integer multiplicity."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, int] = {}
        for lam, m in items:
            if not isinstance(lam, Weight):
                lam = Weight(tuple(lam))
            acc[lam] = acc.get(lam, 0) + int(m)
        self.terms = {lam: m for lam, m in acc.items() if m != 0}

    @classmethod
    def monomial(cls, lam, mult: int = 1) -> "Character":
        return cls([(lam, mult)])

    @classmethod
    def zero(cls) -> "Character":
        return cls()

    def __eq__(self, other):
        return isinstance(other, Character) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Character") -> "Character":
        return Character(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "Character":
        return Character({lam: -m for lam, m in self.terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def mult(self, lam) -> int:
        if not isinstance(lam, Weight):
            lam = Weight(tuple(lam))
        return self.terms.get(lam, 0)

    @property
    def dimension(self) -> int:
        return sum(self.terms.values())

    def is_nonnegative(self) -> bool:
        return all(m > 0 for m in self.terms.values())

    def sorted_terms(self) -> list[tuple[Weight, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0].fwcoords)

    def to_json(self) -> list[dict]:
        return [{"weight": list(lam.fwcoords), "mult": m} for lam, m in self.sorted_terms()]

    def __repr__(self):
        body = " + ".join(f"{m}*e{list(lam.fwcoords)}" for lam, m in self.sorted_terms())
        return f"Character({body or '0'})"


def _shift(rs: RootSystem, lam: Weight, i: int, k: int) -> Weight:
    """``lam + k*alpha_i``."""
    col = rs.cartan[:, i - 1]
    return Weight(tuple(x + k * int(c) for x, c in zip(lam.fwcoords, col)))


def reflect_weight(rs: RootSystem, i: int, lam: Weight) -> Weight:
    i = rs.check_index(i)
    return _shift(rs, lam, i, -lam.fwcoords[i - 1])


def dot_action(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """``s_i . lam = s_i(lam + rho) - rho``."""
    return reflect_weight(rs, i, lam + rs.rho) - rs.rho


def demazure_step(rs: RootSystem, i: int, chi: Character) -> Character:
    """Apply ``D_i`` term by term.

    With ``k = <lam, alpha_i^vee>``: ``k >= 0`` gives
    ``e^lam + e^{lam - alpha_i} + ... + e^{lam - k alpha_i}``, ``k = -1``
    gives 0, and ``k <= -2`` gives
    ``-(e^{lam + alpha_i} + ... + e^{lam + (-k-1) alpha_i})``.
    """
    i = rs.check_index(i)
    out: list[tuple[Weight, int]] = []
    for lam, m in chi.terms.items():
        k = lam.fwcoords[i - 1]
        if k >= 0:
            out.extend((_shift(rs, lam, i, -j), m) for j in range(k + 1))
        elif k <= -2:
            out.extend((_shift(rs, lam, i, j), -m) for j in range(1, -k))
    return Character(out)


def demazure_apply(rs: RootSystem, word: Iterable[int], chi: Character) -> Character:
    """``D_{i_1} ... D_{i_k}`` applied to ``chi``, rightmost operator first.

    Non-reduced words are rejected: only for reduced words does the result
    depend on the element alone.
    """
    word = [rs.check_index(i) for i in word]
    if length(from_word(rs, word)) != len(word):
        raise PreconditionError(f"word {word} is not reduced in {rs.ctype}")
    for i in reversed(word):
        chi = demazure_step(rs, i, chi)
    return chi


def module_character(rs: RootSystem, J: Iterable[int]) -> Character:
    """Weights of ``g/p_J``: one ``e^beta`` for each positive root outside ``R_J``."""
    Js = {rs.check_index(j) for j in J}
    levi = set(rs.positive_in(Js))
    return Character((rs.to_weight(b), 1) for b in rs.positives if b not in levi)


def h0_module_character(
    rs: RootSystem, w: WeylElement, J: Iterable[int], strict: bool = False
) -> Character:
    """Character of ``H^0`` over ``X(w)`` of the filtration quotients of ``g/p_J``.

    Additivity over the filtration relies on higher cohomology of each
    positive-root line vanishing.  ``strict`` checks ``w`` lies in ``W^J``
    and that the result is a genuine (nonnegative) character.
    """
    J = [rs.check_index(j) for j in J]
    if strict and not is_min_rep(w, J):
        raise PreconditionError(f"element is not a minimal representative for J={sorted(J)}")
    word = reduced_word(w)
    total = Character()
    for lam, m in module_character(rs, J).terms.items():
        total = total + demazure_apply(rs, word, Character.monomial(lam, m))
    if strict and not total.is_nonnegative():
        raise AssertionError(f"virtual character {total!r} where a module was expected")
    return total


def adjoint_character(rs: RootSystem) -> Character:
    """``sum over all roots of e^beta`` plus ``rank * e^0``."""
    terms = [(rs.to_weight(b), 1) for b in rs.roots_all]
    terms.append((Weight((0,) * rs.rank), rs.rank))
    return Character(terms)
