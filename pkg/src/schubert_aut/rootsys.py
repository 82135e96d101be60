"""Finite crystallographic root systems built exactly from Cartan data.

Roots are tuples of integers in the simple-root basis; weights are
:class:`Weight` values holding fundamental-weight coordinates.  Simple
indices are 1-based throughout the public API so that node labels read
exactly as on the Dynkin diagrams:

* ``A_n``: chain ``1 - 2 - ... - n``
* ``D_n``: chain ``1 - ... - (n-2)`` with ``n-1`` and ``n`` both attached
  to ``n-2``
* ``E_6, E_7, E_8``: chain ``1 - 3 - 4 - 5 - 6 (- 7 (- 8))`` with ``2``
  attached to ``4``
* ``B_2``: ``alpha_1`` long, ``<alpha_1, alpha_2^vee> = -2``
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

Root = tuple  # tuple[int, ...] of simple-root coordinates

__all__ = [
    "CartanType",
    "NotARootError",
    "Root",
    "RootSystem",
    "UnsupportedTypeError",
    "Weight",
    "build",
    "height",
    "in_subsystem",
    "pair",
    "parse_type",
    "support",
]


class UnsupportedTypeError(ValueError):
    """Raised for Cartan types outside A_n, D_n (n>=4), E6-E8 and B2."""


class NotARootError(ValueError):
    """Raised when a vector is not a root of the system at hand."""


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        family = self.family.upper()
        object.__setattr__(self, "family", family)
        ok = (
            (family == "A" and self.rank >= 1)
            or (family == "D" and self.rank >= 4)
            or (family == "E" and self.rank in (6, 7, 8))
            or (family == "B" and self.rank == 2)
        )
        if not ok:
            raise UnsupportedTypeError(
                f"unsupported Cartan type {family}{self.rank}: admitted types are "
                "A_n (n>=1), D_n (n>=4), E6, E7, E8 and B2"
            )

    @property
    def simply_laced(self) -> bool:
        return self.family in ("A", "D", "E")

    def __str__(self):
        return f"{self.family}{self.rank}"


_TYPE_RE = re.compile(r"^\s*([A-Za-z])(\d+)\s*$")


def parse_type(text: str | CartanType) -> CartanType:
    """Parse identifiers such as ``"E6"``, ``"d5"`` or ``"B2"``."""
    if isinstance(text, CartanType):
        return text
    m = _TYPE_RE.match(text)
    if m is None:
        raise UnsupportedTypeError(f"cannot parse root-system identifier {text!r}")
    return CartanType(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class Weight:
    """Integral weight in the fundamental-weight basis.

    Entry ``i`` (0-based) of ``fwcoords`` is the pairing with the coroot of
    the simple root ``alpha_{i+1}``.
    """

    fwcoords: tuple

    def __post_init__(self):
        object.__setattr__(self, "fwcoords", tuple(int(x) for x in self.fwcoords))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.fwcoords, other.fwcoords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.fwcoords, other.fwcoords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.fwcoords))


def _edges(ctype: CartanType) -> list[tuple[int, int]]:
    n = ctype.rank
    if ctype.family == "A" or ctype.family == "B":
        return [(i, i + 1) for i in range(1, n)]
    if ctype.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    # E-types
    chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
    return list(zip(chain, chain[1:])) + [(2, 4)]


def cartan_matrix(ctype: CartanType) -> np.ndarray:
    """Cartan matrix with ``C[i][j] = <alpha_j, alpha_i^vee>`` (0-based)."""
    n = ctype.rank
    C = 2 * np.eye(n, dtype=np.int64)
    for a, b in _edges(ctype):
        C[a - 1, b - 1] = C[b - 1, a - 1] = -1
    if ctype.family == "B":
        # alpha_1 long: <alpha_1, alpha_2^vee> = -2, <alpha_2, alpha_1^vee> = -1
        C[1, 0] = -2
    return C


class RootSystem:
    """Immutable root system of one admitted Cartan type.

    Use :func:`build` rather than calling the constructor directly; it
    caches one instance per type.
    """

    def __init__(self, ctype: CartanType):
        self.ctype = ctype
        self.rank = ctype.rank
        cartan = cartan_matrix(ctype)
        cartan.setflags(write=False)
        self.cartan = cartan
        # half squared lengths (alpha_i, alpha_i)/2, short roots normalised to 1
        self.root_norms = (2, 1) if ctype.family == "B" else (1,) * self.rank
        self.positives: list[Root] = self._close_positives()
        self.roots_all: list[Root] = self.positives + [neg(b) for b in self.positives]
        self._index = {b: k for k, b in enumerate(self.roots_all)}
        self.highest: Root = self._find_highest()
        self.rho = Weight((1,) * self.rank)

        P = np.array(self.positives, dtype=np.int64)
        P.setflags(write=False)
        self.positive_array = P

    def __repr__(self):
        return f"RootSystem({self.ctype})"

    # -- construction -------------------------------------------------

    def _close_positives(self) -> list[Root]:
        n = self.rank
        simple = [unit(n, i) for i in range(1, n + 1)]
        known = set(simple)
        layer = list(simple)
        while layer:
            nxt = set()
            for beta in layer:
                for i in range(1, n + 1):
                    # p = how far the alpha_i-string extends downward from beta
                    p = 0
                    down = beta
                    while True:
                        down = _shift(down, i, -1)
                        if down in known:
                            p += 1
                        else:
                            break
                    q = p - self.pair_root(beta, i)
                    if q > 0:
                        nxt.add(_shift(beta, i, 1))
            known.update(nxt)
            layer = sorted(nxt)
        return sorted(known, key=lambda b: (sum(b), b))

    def _find_highest(self) -> Root:
        tops = [
            b
            for b in self.positives
            if all(_shift(b, i, 1) not in self._index for i in range(1, self.rank + 1))
        ]
        assert len(tops) == 1, tops
        return tops[0]

    # -- queries --------------------------------------------------------

    def is_root(self, beta: Iterable[int]) -> bool:
        return tuple(int(x) for x in beta) in self._index

    def check_root(self, beta: Iterable[int]) -> Root:
        b = tuple(int(x) for x in beta)
        if b not in self._index:
            raise NotARootError(f"{list(b)} is not a root of {self.ctype}")
        return b

    def check_index(self, i: int) -> int:
        if not 1 <= int(i) <= self.rank:
            raise IndexError(f"simple index {i} out of range 1..{self.rank} for {self.ctype}")
        return int(i)

    def simple_root(self, i: int) -> Root:
        return unit(self.rank, self.check_index(i))

    def pair_root(self, beta: Sequence[int], i: int) -> int:
        row = self.cartan[i - 1]
        return int(sum(int(row[j]) * int(beta[j]) for j in range(self.rank)))

    def to_weight(self, beta: Sequence[int]) -> Weight:
        """Fundamental-weight coordinates of a root-lattice vector."""
        return Weight(tuple(self.pair_root(beta, i) for i in range(1, self.rank + 1)))

    def from_weight(self, lam: Weight) -> Root:
        """Inverse of :meth:`to_weight`; fails if ``lam`` is not in the root lattice."""
        C = [[Fraction(int(x)) for x in row] for row in self.cartan.tolist()]
        rhs = [Fraction(x) for x in lam.fwcoords]
        sol = _solve(C, rhs)
        if any(x.denominator != 1 for x in sol):
            raise ValueError(f"{lam} is not in the root lattice of {self.ctype}")
        return tuple(int(x) for x in sol)

    def simple_weight(self, i: int) -> Weight:
        """Weight of ``alpha_i``: column ``i`` of the Cartan matrix."""
        return self.to_weight(self.simple_root(i))

    def norm(self, beta: Sequence[int]) -> int:
        """Half squared length ``(beta, beta)/2`` in units of the short norm."""
        total = Fraction(0)
        for i in range(self.rank):
            for j in range(self.rank):
                # (alpha_i, alpha_j) = norm_i * C[i][j]
                total += Fraction(beta[i] * beta[j] * self.root_norms[i] * int(self.cartan[i, j]))
        total /= 2
        assert total.denominator == 1
        return int(total)

    def coroot_coords(self, beta: Sequence[int]) -> tuple:
        """Coordinates of ``beta^vee`` in the simple-coroot basis."""
        nb = self.norm(beta)
        out = []
        for i in range(self.rank):
            c = Fraction(beta[i] * self.root_norms[i], nb)
            assert c.denominator == 1
            out.append(int(c))
        return tuple(out)

    def is_long(self, beta: Sequence[int]) -> bool:
        return self.norm(beta) == max(self.root_norms)

    def positive_in(self, J: Iterable[int]) -> list[Root]:
        """Positive roots of the Levi subsystem spanned by ``J``."""
        Js = set(J)
        return [b for b in self.positives if all(b[k] == 0 or (k + 1) in Js for k in range(self.rank))]

    @property
    def simples(self) -> frozenset:
        return frozenset(range(1, self.rank + 1))

    @cached_property
    def num_positive(self) -> int:
        return len(self.positives)


_CACHE: dict[CartanType, RootSystem] = {}


def build(ctype: CartanType | str) -> RootSystem:
    """Construct (or fetch the cached) root system of ``ctype``.

    >>> build("A2").positives
    [(1, 0), (0, 1), (1, 1)]
    """
    ctype = parse_type(ctype)
    rs = _CACHE.get(ctype)
    if rs is None:
        rs = _CACHE[ctype] = RootSystem(ctype)
    return rs


# -- module-level operations ----------------------------------------------


def height(rs: RootSystem, beta) -> int:
    return sum(rs.check_root(beta))


def support(rs: RootSystem, beta) -> set[int]:
    b = rs.check_root(beta)
    return {k + 1 for k, c in enumerate(b) if c != 0}


def pair(rs: RootSystem, lam, i: int) -> int:
    """Exact pairing ``<lam, alpha_i^vee>`` for a root or a :class:`Weight`."""
    i = rs.check_index(i)
    if isinstance(lam, Weight):
        return lam.fwcoords[i - 1]
    return rs.pair_root(tuple(lam), i)


def in_subsystem(rs: RootSystem, beta, J: Iterable[int]) -> bool:
    return support(rs, beta) <= set(J)


# -- small vector helpers ---------------------------------------------------


def unit(n: int, i: int) -> Root:
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def neg(beta: Sequence[int]) -> Root:
    return tuple(-x for x in beta)


def add(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def is_positive(beta: Sequence[int]) -> bool:
    return sum(beta) > 0


def _shift(beta: Root, i: int, k: int) -> Root:
    return tuple(c + k if j == i - 1 else c for j, c in enumerate(beta))


def _solve(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(A)
    M = [row[:] + [b[r]] for r, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col] / M[col][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] / M[r][r] for r in range(n)]
