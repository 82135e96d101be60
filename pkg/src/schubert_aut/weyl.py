"""Weyl group elements as exact integer matrices on root coordinates.

An element ``w`` is stored as the matrix whose column ``j`` holds the
simple-root coordinates of ``w(alpha_j)``, together with the matrix of
``w^{-1}``.  Words compose right to left: ``from_word(rs, [1, 2])`` is the
product ``s_1 s_2``, which applies ``s_2`` first.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from .rootsys import Root, RootSystem, Weight, is_positive

__all__ = [
    "EnumerationTooLarge",
    "WeylElement",
    "all_reduced_words",
    "apply",
    "coset_decompose",
    "diagram_automorphism",
    "from_word",
    "identity",
    "inversion_set",
    "is_min_rep",
    "length",
    "longest_element",
    "min_reps",
    "reduced_word",
    "reflection",
]

DEFAULT_CAP = 200_000


class EnumerationTooLarge(RuntimeError):
    """An enumeration would produce more elements than its cap allows."""

    def __init__(self, label: str, count: int, cap: int):
        super().__init__(f"enumeration {label} exceeds cap {cap} (stopped after {count} elements)")
        self.label = label
        self.count = count
        self.cap = cap


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class WeylElement:
    """An element of the Weyl group of ``rs``.

    Equality and hashing use the matrix only; ``word`` is an optional
    cache of whatever word the element was built from.
    """

    __slots__ = ("rs", "matrix", "inverse_matrix", "word", "_key")

    def __init__(self, rs: RootSystem, matrix: np.ndarray, inverse_matrix: np.ndarray, word=None):
        self.rs = rs
        self.matrix = _frozen(np.asarray(matrix, dtype=np.int64))
        self.inverse_matrix = _frozen(np.asarray(inverse_matrix, dtype=np.int64))
        self.word = tuple(word) if word is not None else None
        self._key = self.matrix.tobytes()

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        word = self.word + other.word if self.word is not None and other.word is not None else None
        return WeylElement(
            self.rs,
            self.matrix @ other.matrix,
            other.inverse_matrix @ self.inverse_matrix,
            word,
        )

    def inverse(self) -> "WeylElement":
        word = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElement(self.rs, self.inverse_matrix, self.matrix, word)

    def sort_key(self) -> tuple:
        return tuple(self.matrix.ravel().tolist())

    def is_identity(self) -> bool:
        return bool((self.matrix == np.eye(self.rs.rank, dtype=np.int64)).all())

    def act(self, v: Sequence[int]) -> Root:
        """Image of an arbitrary root-lattice vector (no membership check)."""
        return tuple(int(x) for x in self.matrix @ np.asarray(v, dtype=np.int64))

    def act_inverse(self, v: Sequence[int]) -> Root:
        return tuple(int(x) for x in self.inverse_matrix @ np.asarray(v, dtype=np.int64))

    def act_weight(self, lam: Weight) -> Weight:
        """Image of a weight; fundamental-weight coordinates transform by ``C M C^{-1}``."""
        rs = self.rs
        out = np.asarray(lam.fwcoords, dtype=np.int64)
        for i in reversed(reduced_word(self)):
            out = out - out[i - 1] * rs.cartan[:, i - 1]
        return Weight(tuple(int(x) for x in out))

    def to_json(self) -> dict:
        return {"word": list(reduced_word(self)), "matrix": self.matrix.tolist()}

    def __repr__(self):
        return f"WeylElement({self.rs.ctype}, word={list(reduced_word(self))})"


# -- construction --------------------------------------------------------


def identity(rs: RootSystem) -> WeylElement:
    eye = np.eye(rs.rank, dtype=np.int64)
    return WeylElement(rs, eye, eye, ())


def _reflection_matrix(rs: RootSystem, i: int) -> np.ndarray:
    # s_i(v) = v - <v, alpha_i^vee> alpha_i
    S = np.eye(rs.rank, dtype=np.int64)
    S[i - 1, :] -= rs.cartan[i - 1, :]
    return S


def reflection(rs: RootSystem, i: int) -> WeylElement:
    i = rs.check_index(i)
    S = _reflection_matrix(rs, i)
    return WeylElement(rs, S, S, (i,))


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """Product ``s_{i_1} s_{i_2} ... s_{i_k}`` of the letters in order."""
    letters = tuple(rs.check_index(i) for i in word)
    M = np.eye(rs.rank, dtype=np.int64)
    for i in letters:
        M = M @ _reflection_matrix(rs, i)
    Minv = np.eye(rs.rank, dtype=np.int64)
    for i in reversed(letters):
        Minv = Minv @ _reflection_matrix(rs, i)
    return WeylElement(rs, M, Minv, letters)


# -- basic queries ---------------------------------------------------------


def apply(w: WeylElement, beta) -> Root:
    rs = w.rs
    beta = rs.check_root(beta)
    image = w.act(beta)
    if not rs.is_root(image):
        raise AssertionError(f"{w!r} maps root {list(beta)} to non-root {list(image)}")
    return image


def length(w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    heights = w.matrix.sum(axis=0)
    return int(np.count_nonzero(w.rs.positive_array @ heights < 0))


def inversion_set(w: WeylElement) -> list[Root]:
    heights = w.matrix.sum(axis=0)
    mask = w.rs.positive_array @ heights < 0
    return [b for b, m in zip(w.rs.positives, mask) if m]


def reduced_word(w: WeylElement) -> tuple:
    """A reduced word for ``w``, peeling right descents with the smallest index first."""
    rs = w.rs
    M = w.matrix.copy()
    letters = []
    while True:
        heights = M.sum(axis=0)
        neg = np.flatnonzero(heights < 0)
        if neg.size == 0:
            break
        i = int(neg[0]) + 1
        letters.append(i)
        M = M @ _reflection_matrix(rs, i)
    return tuple(reversed(letters))


def all_reduced_words(w: WeylElement) -> list[tuple]:
    """Every reduced word of ``w`` (exponential; meant for short elements)."""
    if w.is_identity():
        return [()]
    out = []
    heights = w.matrix.sum(axis=0)
    for k in np.flatnonzero(heights < 0):
        i = int(k) + 1
        shorter = w * reflection(w.rs, i)
        out.extend(word + (i,) for word in all_reduced_words(shorter))
    return sorted(out)


def is_min_rep(w: WeylElement, J: Iterable[int]) -> bool:
    """Whether ``w(alpha) > 0`` for every ``alpha`` in ``J``."""
    heights = w.matrix.sum(axis=0)
    return all(heights[j - 1] > 0 for j in J)


# -- parabolic machinery ---------------------------------------------------


def longest_element(rs: RootSystem, J: Iterable[int]) -> WeylElement:
    J = sorted(rs.check_index(j) for j in set(J))
    w = identity(rs)
    while True:
        heights = w.matrix.sum(axis=0)
        ascent = next((j for j in J if heights[j - 1] > 0), None)
        if ascent is None:
            return w
        w = w * reflection(rs, ascent)


def coset_decompose(w: WeylElement, J: Iterable[int]) -> tuple[WeylElement, WeylElement]:
    """Split ``w = w^J * w_J`` with ``w^J`` minimal in its coset ``w W_J``."""
    rs = w.rs
    J = sorted(rs.check_index(j) for j in set(J))
    u = w
    while True:
        heights = u.matrix.sum(axis=0)
        descent = next((j for j in J if heights[j - 1] < 0), None)
        if descent is None:
            break
        u = u * reflection(rs, descent)
    u = WeylElement(rs, u.matrix, u.inverse_matrix)
    wJ = u.inverse() * w
    wJ = WeylElement(rs, wJ.matrix, wJ.inverse_matrix)
    return u, wJ


def min_reps(rs: RootSystem, J: Iterable[int], cap: int = DEFAULT_CAP) -> Iterator[WeylElement]:
    """Stream the minimal coset representatives ``W^J`` by increasing length.

    Within one length the order is lexicographic in the flattened matrix.
    Raises :class:`EnumerationTooLarge` once more than ``cap`` elements
    would be produced.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    J = frozenset(rs.check_index(j) for j in J)
    n = rs.rank
    label = f"W^J for {rs.ctype}, J={sorted(J)}"
    refl = [None] + [_reflection_matrix(rs, i) for i in range(1, n + 1)]
    layer = [identity(rs)]
    count = 0
    while layer:
        nxt: dict[bytes, WeylElement] = {}
        for w in layer:
            count += 1
            if count > cap:
                raise EnumerationTooLarge(label, count - 1, cap)
            yield w
            inv = w.inverse_matrix
            for i in range(1, n + 1):
                col = inv[:, i - 1]  # w^{-1}(alpha_i)
                if col.sum() <= 0:
                    continue
                # s_i w leaves W^J exactly when w^{-1}(alpha_i) is a simple root in J
                if col.sum() == 1 and (int(np.argmax(col)) + 1) in J:
                    continue
                M = refl[i] @ w.matrix
                key = M.tobytes()
                if key not in nxt:
                    nxt[key] = WeylElement(rs, M, inv @ refl[i])
        layer = sorted(nxt.values(), key=WeylElement.sort_key)


def diagram_automorphism(rs: RootSystem) -> dict[int, int]:
    """The permutation ``sigma`` with ``alpha_{sigma(i)} = -w_0(alpha_i)``."""
    w0 = longest_element(rs, rs.simples)
    sigma = {}
    for i in range(1, rs.rank + 1):
        img = w0.act(rs.simple_root(i))
        j = next(k for k in range(1, rs.rank + 1) if img == tuple(-x for x in rs.simple_root(k)))
        sigma[i] = j
    return sigma


def is_negative_image(w: WeylElement, beta) -> bool:
    return not is_positive(w.act(beta))
