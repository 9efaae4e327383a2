"""Rewriting lattice automorphisms as words in the Weyl-group generators.

The algorithm tracks the images of the seven symmetry simple roots under the
running element.  While some image is a negative root, right-multiplying by
the corresponding simple reflection shortens the element (length drops
exactly when the image of the reflecting root is negative), and the image
vector updates cheaply: multiplying on the right by w_i replaces each image
v_j by v_j + c_ij * v_i, where c_ij are the Cartan pairings.  Once every
image is a positive root, an element of the extended group must send simple
roots to simple roots, and the residual permutation is matched against the
diagram automorphisms.  Undoing the accumulated cancellation gives the word.

The returned word is verified against the input by exact matrix equality;
anything that fails to reduce or to match an automorphism is rejected as
outside the group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .piclattice import CARTAN, NotInSymmetryLattice, RootVector, Sign, root_sign, symmetry_root, to_alpha_coords
from .weylgroup import ALPHA_PERMUTATIONS, PicMap, Word, word_to_picmap

#: Hard cap on reduction steps; generous for every element handled here
#: (the built-in dynamics reduce in 16 steps).
MAX_REDUCTION_STEPS = 4096


class NotInGroup(ValueError):
    """The matrix is not an element of the extended affine Weyl group."""


class NoAutomorphismMatch(ValueError):
    """Simple-root images do not realize a diagram automorphism."""


SimpleRootImages = tuple[RootVector, ...]


@dataclass(frozen=True)
class ReductionStep:
    """One reduction step: the chosen reflection index and the images after it."""

    index: int
    images: SimpleRootImages


def _simple_root_index(v: RootVector) -> int | None:
    """Index i when v equals the simple root a_i, else None."""
    ones = [j for j, c in enumerate(v.coeffs) if c == 1]
    if len(ones) == 1 and all(c == 0 for j, c in enumerate(v.coeffs) if j != ones[0]):
        return ones[0]
    return None


def match_automorphism(images: SimpleRootImages) -> str:
    """Identify the diagram automorphism realized by simple-root images.

    Returns the generator symbol, or the empty string for the identity.
    Raises NoAutomorphismMatch when the images are not the permutation of
    simple roots induced by any diagram automorphism.
    """
    perm: dict[int, int] = {}
    for i, img in enumerate(images):
        j = _simple_root_index(img)
        if j is None:
            raise NoAutomorphismMatch(f"image of a_{i} is not a simple root")
        perm[i] = j
    if len(set(perm.values())) != 7:
        raise NoAutomorphismMatch("images are not a permutation of the simple roots")
    if all(perm[i] == i for i in range(7)):
        return ""
    for symbol, sigma in ALPHA_PERMUTATIONS.items():
        if perm == sigma:
            return symbol
    raise NoAutomorphismMatch("permutation is not a diagram automorphism")


def _apply_right_reflection(images: SimpleRootImages, i: int) -> SimpleRootImages:
    pivot = images[i]
    return tuple(img + CARTAN[i][j] * pivot for j, img in enumerate(images))


def simple_root_images(m: PicMap) -> SimpleRootImages:
    """Images of a0..a6 under m, in symmetry-root coordinates."""
    try:
        return tuple(to_alpha_coords(m(symmetry_root(i))) for i in range(7))
    except NotInSymmetryLattice as exc:
        raise NotInGroup("map does not preserve the symmetry sublattice") from exc


def decompose(m: PicMap, trace: bool = False):
    """Express a lattice map as a word in the group generators.

    Returns the word, or a (word, steps) pair when trace is requested.  The
    word reproduces m exactly (checked by matrix equality).  Raises
    NotInGroup for maps outside the extended affine Weyl group.
    """
    images = simple_root_images(m)
    cancellation: list[int] = []
    steps: list[ReductionStep] = []
    for _ in range(MAX_REDUCTION_STEPS):
        pivot = next(
            (i for i in range(7) if root_sign(images[i]) is Sign.NEGATIVE), None
        )
        if pivot is None:
            break
        images = _apply_right_reflection(images, pivot)
        cancellation.append(pivot)
        if trace:
            steps.append(ReductionStep(pivot, images))
    else:
        raise NotInGroup("reduction did not terminate; map is outside the group")
    try:
        residual = match_automorphism(images)
    except NoAutomorphismMatch as exc:
        raise NotInGroup(str(exc)) from exc
    symbols = ([residual] if residual else []) + [f"w{i}" for i in reversed(cancellation)]
    word: Word = tuple(symbols)
    if word_to_picmap(word) != m:
        raise NotInGroup("reduced word does not reproduce the map on the full lattice")
    return (word, tuple(steps)) if trace else word
