"""The period map: root variables from parameters and their evolution.

The period map is a linear functional on the symmetry sublattice, fixed by
residue computations on the components of the anticanonical divisor; its
values on the simple roots are the root variables

    a0 = b4 - b3,  a1 = b3 - b2,  a2 = b2 - b1,  a3 = b1 + b7,
    a4 = b8 - b7,  a5 = b1 + b5,  a6 = b6 - b5.

Together with b4 this is a linear bijection with the parameter vector, which
gives the inverse parameterization.  A word w of generators moves the root
variables by the *inverse* of its action on the roots: the new value of a_i
is the period of w^{-1}(a_i), expanded linearly in the old values.  No
normalization is imposed on the period of delta (the parameter sum); it is
carried exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .birational import ParamVector
from .piclattice import DELTA_WEIGHTS, symmetry_root, to_alpha_coords
from .weylgroup import invert_word, word_to_picmap


@dataclass(frozen=True)
class RootVariables:
    """The seven root variables (a0, ..., a6), exact rationals."""

    a: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.a) != 7:
            raise ValueError(f"expected 7 root variables, got {len(self.a)}")
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))

    @classmethod
    def of(cls, *values) -> "RootVariables":
        return cls(tuple(Fraction(v) for v in values))

    def chi_delta(self) -> Fraction:
        """Period of the null root: a0 + 2a1 + 3a2 + 2a3 + a4 + 2a5 + a6."""
        return sum((w * x for w, x in zip(DELTA_WEIGHTS, self.a)), Fraction(0))

    def to_json(self) -> list[str]:
        return [str(x) for x in self.a]


def root_variables(b: ParamVector) -> RootVariables:
    """Root variables of a parameter vector."""
    b1, b2, b3, b4, b5, b6, b7, b8 = b.b
    return RootVariables(
        (b4 - b3, b3 - b2, b2 - b1, b1 + b7, b8 - b7, b1 + b5, b6 - b5)
    )


def params_from_root_variables(a: RootVariables, b4) -> ParamVector:
    """Exact right-inverse of root_variables with the stated b4."""
    a0, a1, a2, a3, a4, a5, a6 = a.a
    b4 = Fraction(b4)
    return ParamVector(
        (
            b4 - a0 - a1 - a2,
            b4 - a0 - a1,
            b4 - a0,
            b4,
            a0 + a1 + a2 + a5 - b4,
            a0 + a1 + a2 + a5 + a6 - b4,
            a0 + a1 + a2 + a3 - b4,
            a0 + a1 + a2 + a3 + a4 - b4,
        )
    )


def root_variable_evolution(word: Iterable[str], a: RootVariables) -> RootVariables:
    """Root variables after applying a word of generators.

    The new a_i is the period of the image of a_i under the inverse word,
    evaluated linearly on the old root variables.
    """
    m = word_to_picmap(invert_word(word))
    new = []
    for i in range(7):
        coords = to_alpha_coords(m(symmetry_root(i)))
        new.append(sum((Fraction(c) * x for c, x in zip(coords.coeffs, a.a)), Fraction(0)))
    return RootVariables(tuple(new))
