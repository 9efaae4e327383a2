"""The extended affine Weyl group of type E6^(1) acting on the Picard lattice.

Generators are the seven simple reflections w0..w6 in the symmetry roots,

    w_i(C) = C + (C.a_i) a_i,

together with the five nontrivial diagram automorphisms m0, m1, m2, r, r2
(the dihedral group of the triangle of surface roots).  Every generator is a
Cremona isometry: it preserves the intersection form and fixes the canonical
class.  Words are finite sequences of generator symbols; the sequence
(g1, g2, ..., gk) denotes the composition g1 o g2 o ... o gk, with gk applied
first, so that word_to_picmap is the left-to-right matrix product.

Translations: an element m is a translation when m(a_i) = a_i + n_i * delta
for all i.  The defining vector alpha of the translation (with
(alpha . a_i) = n_i) lives in Q tensor QQ and is unique modulo delta; its
norm -(alpha . alpha) is a conjugation invariant used to search for
conjugating words.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .piclattice import (
    CARTAN,
    DELTA_WEIGHTS,
    RANK,
    DivisorClass,
    NotInSymmetryLattice,
    RationalRootVector,
    anticanonical,
    exceptional,
    gram_matrix,
    H_F,
    H_G,
    intersection,
    solve_linear_system,
    symmetry_root,
    to_alpha_coords,
)

SYMBOLS = ("w0", "w1", "w2", "w3", "w4", "w5", "w6", "m0", "m1", "m2", "r", "r2")
REFLECTION_SYMBOLS = SYMBOLS[:7]
AUTOMORPHISM_SYMBOLS = SYMBOLS[7:]

#: Inverse of each generator symbol (reflections and m_i are involutions).
SYMBOL_INVERSE = {s: s for s in SYMBOLS} | {"r": "r2", "r2": "r"}

#: Action of each diagram automorphism on the symmetry-root indices,
#: as a mapping i -> sigma(i) read off the surface-root permutations:
#: m0 = (d1 d2), m1 = (d0 d2), m2 = (d0 d1), r = (d0 d1 d2).
ALPHA_PERMUTATIONS = {
    "m0": {0: 0, 1: 1, 2: 2, 3: 5, 4: 6, 5: 3, 6: 4},
    "m1": {0: 4, 1: 3, 2: 2, 3: 1, 4: 0, 5: 5, 6: 6},
    "m2": {0: 6, 1: 5, 2: 2, 3: 3, 4: 4, 5: 1, 6: 0},
    "r": {0: 6, 1: 5, 2: 2, 3: 1, 4: 0, 5: 3, 6: 4},
    "r2": {0: 4, 1: 3, 2: 2, 3: 5, 4: 6, 5: 1, 6: 0},
}

Word = tuple[str, ...]


class NotTranslation(ValueError):
    """The lattice map does not act on the symmetry roots as a translation."""


class NormMismatch(ValueError):
    """Translation norms differ, so no conjugating element can exist."""


def parse_word(symbols: Iterable[str]) -> Word:
    word = tuple(symbols)
    for s in word:
        if s not in SYMBOLS:
            raise ValueError(f"unknown generator symbol {s!r}")
    return word


@dataclass(frozen=True)
class PicMap:
    """Lattice automorphism as a 10x10 integer matrix on column vectors."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != RANK or any(len(r) != RANK for r in self.rows):
            raise ValueError("PicMap requires a 10x10 integer matrix")

    @classmethod
    def identity(cls) -> "PicMap":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(RANK)) for i in range(RANK)))

    @classmethod
    def from_images(cls, images: Sequence[DivisorClass]) -> "PicMap":
        """Build the matrix whose j-th column is the image of the j-th basis class."""
        if len(images) != RANK:
            raise ValueError("need images of all 10 basis classes")
        return cls(tuple(tuple(images[j].coeffs[i] for j in range(RANK)) for i in range(RANK)))

    def __matmul__(self, other: "PicMap") -> "PicMap":
        rows = tuple(
            tuple(
                sum(self.rows[i][k] * other.rows[k][j] for k in range(RANK))
                for j in range(RANK)
            )
            for i in range(RANK)
        )
        return PicMap(rows)

    def __call__(self, c: DivisorClass) -> DivisorClass:
        return DivisorClass(
            tuple(sum(self.rows[i][j] * c.coeffs[j] for j in range(RANK)) for i in range(RANK))
        )

    def inverse(self) -> "PicMap":
        # For an isometry M of the form J: M^-1 = J M^T J, and J is an involution.
        j = gram_matrix()
        jm = tuple(
            tuple(sum(j[i][k] * self.rows[j_][k] for k in range(RANK)) for j_ in range(RANK))
            for i in range(RANK)
        )
        rows = tuple(
            tuple(sum(jm[i][k] * j[k][j_] for k in range(RANK)) for j_ in range(RANK))
            for i in range(RANK)
        )
        inv = PicMap(rows)
        if inv @ self != PicMap.identity():
            raise ValueError("matrix is not an isometry; cannot invert via the form")
        return inv

    def is_cremona_isometry(self) -> bool:
        """Check M^T J M = J and that the canonical class is fixed."""
        j = gram_matrix()
        for a in range(RANK):
            for b in range(RANK):
                lhs = sum(
                    self.rows[i][a] * j[i][k] * self.rows[k][b]
                    for i in range(RANK)
                    for k in range(RANK)
                )
                if lhs != j[a][b]:
                    return False
        k_class = -1 * anticanonical()
        return self(k_class) == k_class

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _reflection_picmap(i: int) -> PicMap:
    alpha = symmetry_root(i)
    images = []
    for k in range(RANK):
        basis = DivisorClass(tuple(1 if idx == k else 0 for idx in range(RANK)))
        images.append(basis + intersection(basis, alpha) * alpha)
    return PicMap.from_images(images)


def _automorphism_picmap(symbol: str) -> PicMap:
    e = exceptional
    hf, hg = H_F, H_G
    tables = {
        "m0": (hg, hf, e(1), e(2), e(3), e(4), e(7), e(8), e(5), e(6)),
        "m1": (
            hf,
            hf + hg - e(1) - e(2),
            hf - e(2),
            hf - e(1),
            e(7),
            e(8),
            e(5),
            e(6),
            e(3),
            e(4),
        ),
        "m2": (
            hf + hg - e(1) - e(2),
            hg,
            hg - e(2),
            hg - e(1),
            e(5),
            e(6),
            e(3),
            e(4),
            e(7),
            e(8),
        ),
        "r": (
            hg,
            hf + hg - e(1) - e(2),
            hg - e(2),
            hg - e(1),
            e(5),
            e(6),
            e(7),
            e(8),
            e(3),
            e(4),
        ),
        "r2": (
            hf + hg - e(1) - e(2),
            hf,
            hf - e(2),
            hf - e(1),
            e(7),
            e(8),
            e(3),
            e(4),
            e(5),
            e(6),
        ),
    }
    return PicMap.from_images(tables[symbol])


@lru_cache(maxsize=None)
def generator_picmap(symbol: str) -> PicMap:
    """The Picard-lattice matrix of a single generator."""
    if symbol not in SYMBOLS:
        raise ValueError(f"unknown generator symbol {symbol!r}")
    if symbol in REFLECTION_SYMBOLS:
        return _reflection_picmap(int(symbol[1]))
    return _automorphism_picmap(symbol)


def word_to_picmap(word: Iterable[str]) -> PicMap:
    """Product of generator matrices; the rightmost symbol acts first."""
    result = PicMap.identity()
    for symbol in word:
        result = result @ generator_picmap(symbol)
    return result


def invert_word(word: Iterable[str]) -> Word:
    """Reverse the word and invert each symbol."""
    return tuple(SYMBOL_INVERSE[s] for s in reversed(tuple(word)))


def translation_delta_vector(m: PicMap) -> tuple[int, ...]:
    """The vector (n_0..n_6) with m(a_i) = a_i + n_i * delta.

    Raises NotTranslation when the element has a nontrivial finite part.
    """
    ns = []
    for i in range(7):
        try:
            coords = to_alpha_coords(m(symmetry_root(i)))
        except NotInSymmetryLattice as exc:
            raise NotTranslation(f"image of a_{i} is outside the symmetry lattice") from exc
        diff = tuple(c - (1 if j == i else 0) for j, c in enumerate(coords.coeffs))
        n, rem = divmod(diff[0], DELTA_WEIGHTS[0])
        if rem != 0 or any(diff[j] != n * DELTA_WEIGHTS[j] for j in range(7)):
            raise NotTranslation(f"image of a_{i} is not a_{i} plus a multiple of delta")
        ns.append(n)
    return tuple(ns)


def bullet(x: RationalRootVector, y: RationalRootVector) -> Fraction:
    """Intersection pairing on Q tensor QQ in simple-root coordinates."""
    return sum(
        x.coeffs[i] * CARTAN[i][j] * y.coeffs[j] for i in range(7) for j in range(7)
    )


def canonicalize_mod_delta(x: RationalRootVector) -> RationalRootVector:
    """Normalize the delta-ambiguity by zeroing the a0-coordinate."""
    t = x.coeffs[0]
    return RationalRootVector(tuple(c - t * w for c, w in zip(x.coeffs, DELTA_WEIGHTS)))


def kac_vector(m: PicMap) -> RationalRootVector:
    """Defining vector of a translation: (alpha . a_i) = n_i for all i.

    The solution is unique modulo delta; the representative returned has
    a0-coordinate zero.  Raises NotTranslation when m is not a translation.
    """
    ns = translation_delta_vector(m)
    rows = [[Fraction(CARTAN[i][j]) for j in range(7)] for i in range(7)]
    rhs = [Fraction(n) for n in ns]
    solution = solve_linear_system(rows, rhs)
    if solution is None:
        raise NotTranslation("inconsistent translation vector")
    return canonicalize_mod_delta(RationalRootVector(solution))


def translation_norm(m: PicMap) -> Fraction:
    """Conjugation-invariant norm -(alpha . alpha) of a translation."""
    alpha = kac_vector(m)
    return -bullet(alpha, alpha)


def reflect_coords(i: int, x: RationalRootVector) -> RationalRootVector:
    """Simple reflection w_i on Q tensor QQ in root coordinates."""
    pairing = sum(CARTAN[i][j] * x.coeffs[j] for j in range(7))
    coeffs = list(x.coeffs)
    coeffs[i] += pairing
    return RationalRootVector(tuple(coeffs))


def permute_coords(symbol: str, x: RationalRootVector) -> RationalRootVector:
    """Diagram automorphism on Q tensor QQ in root coordinates."""
    perm = ALPHA_PERMUTATIONS[symbol]
    coeffs = [Fraction(0)] * 7
    for i in range(7):
        coeffs[perm[i]] = x.coeffs[i]
    return RationalRootVector(tuple(coeffs))


def apply_word_coords(word: Iterable[str], x: RationalRootVector) -> RationalRootVector:
    """Apply a word to a symmetry-lattice vector (rightmost symbol first)."""
    for symbol in reversed(tuple(word)):
        if symbol in REFLECTION_SYMBOLS:
            x = reflect_coords(int(symbol[1]), x)
        else:
            x = permute_coords(symbol, x)
    return x


def find_conjugator(
    src: RationalRootVector,
    dst: RationalRootVector,
    max_len: int,
    include_automorphisms: bool = False,
) -> Word | None:
    """Breadth-first search for a word w with w(src) = dst modulo delta.

    The search runs over reflection words only (set include_automorphisms to
    widen the generator set); levels are explored in increasing length and,
    within a level, in lexicographic symbol order, so the result is
    deterministic.  Returns None when no word of length <= max_len works.
    Raises NormMismatch immediately when the invariant norms differ.
    """
    if -bullet(src, src) != -bullet(dst, dst):
        raise NormMismatch("translation norms differ; vectors cannot be conjugate")
    generators = list(REFLECTION_SYMBOLS)
    if include_automorphisms:
        generators += list(AUTOMORPHISM_SYMBOLS)

    def key(x: RationalRootVector) -> tuple[Fraction, ...]:
        return canonicalize_mod_delta(x).coeffs

    target = key(dst)
    start = canonicalize_mod_delta(src)
    if key(start) == target:
        return ()
    seen = {key(start)}
    frontier: list[tuple[RationalRootVector, Word]] = [(start, ())]
    for _ in range(max_len):
        next_frontier: list[tuple[RationalRootVector, Word]] = []
        # Prepending the new symbol keeps lexicographic enumeration per level.
        for symbol in generators:
            for vec, word in frontier:
                new_vec = apply_word_coords((symbol,), vec)
                k = key(new_vec)
                if k == target:
                    return (symbol,) + word
                if k not in seen:
                    seen.add(k)
                    next_frontier.append((new_vec, (symbol,) + word))
        frontier = next_frontier
    return None
