"""Exact integer model of the Picard lattice of an 8-point blowup of P1 x P1.

The lattice has rank 10 with basis (Hf, Hg, E1, ..., E8), where Hf and Hg are
the classes of vertical and horizontal lines and Ei are the exceptional
classes of the blowup points.  It carries the intersection form

    Hf.Hg = 1,   Hf.Hf = Hg.Hg = Hf.Ei = Hg.Ei = 0,   Ei.Ej = -delta_ij,

of signature (1, 9).  The anticanonical class 2Hf + 2Hg - E1 - ... - E8
decomposes into three surface roots d0, d1, d2 (an affine A2 configuration),
and the orthogonal complement of their span is the symmetry sublattice Q,
spanned by seven simple roots a0, ..., a6 forming an affine E6 diagram:

        a0 - a1 - a2 - a3 - a4
                  |
                  a5
                  |
                  a6

All computations are exact: integer vectors, and rational Gaussian
elimination for changes of basis.  Every value is immutable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

RANK = 10
BASIS_LABELS = ("Hf", "Hg", "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8")

#: Coefficients of the null root delta on the symmetry simple roots.
DELTA_WEIGHTS = (1, 2, 3, 2, 1, 2, 1)

#: Edges of the affine E6 diagram on indices 0..6.
E6_EDGES = frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)})


class NotInSymmetryLattice(ValueError):
    """The class does not lie in the span of the symmetry simple roots."""


@dataclass(frozen=True)
class DivisorClass:
    """Integer vector in the basis (Hf, Hg, E1, ..., E8)."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != RANK:
            raise ValueError(f"expected {RANK} coefficients, got {len(self.coeffs)}")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise TypeError("divisor class coefficients must be integers")

    @classmethod
    def of(cls, *coeffs: int) -> "DivisorClass":
        return cls(tuple(int(c) for c in coeffs))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_json(self) -> list[int]:
        return list(self.coeffs)


ZERO_CLASS = DivisorClass((0,) * RANK)
H_F = DivisorClass.of(1, 0, 0, 0, 0, 0, 0, 0, 0, 0)
H_G = DivisorClass.of(0, 1, 0, 0, 0, 0, 0, 0, 0, 0)


def exceptional(i: int) -> DivisorClass:
    """Exceptional class E_i of the blowup point p_i, 1 <= i <= 8."""
    if not 1 <= i <= 8:
        raise IndexError(f"exceptional index must be 1..8, got {i}")
    return DivisorClass(tuple(1 if k == i + 1 else 0 for k in range(RANK)))


def intersection(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection number a.b (symmetric, signature (1,9))."""
    x, y = a.coeffs, b.coeffs
    return x[0] * y[1] + x[1] * y[0] - sum(x[k] * y[k] for k in range(2, RANK))


def gram_matrix() -> tuple[tuple[int, ...], ...]:
    """Gram matrix of the intersection form in the standard basis."""
    rows = [[0] * RANK for _ in range(RANK)]
    rows[0][1] = rows[1][0] = 1
    for k in range(2, RANK):
        rows[k][k] = -1
    return tuple(tuple(r) for r in rows)


def anticanonical() -> DivisorClass:
    """The anticanonical class 2Hf + 2Hg - E1 - ... - E8."""
    return DivisorClass.of(2, 2, -1, -1, -1, -1, -1, -1, -1, -1)


_SYMMETRY_ROOTS = (
    DivisorClass.of(0, 0, 0, 0, 1, -1, 0, 0, 0, 0),   # a0 = E3 - E4
    DivisorClass.of(0, 0, 0, 1, -1, 0, 0, 0, 0, 0),   # a1 = E2 - E3
    DivisorClass.of(0, 0, 1, -1, 0, 0, 0, 0, 0, 0),   # a2 = E1 - E2
    DivisorClass.of(1, 0, -1, 0, 0, 0, 0, 0, -1, 0),  # a3 = Hf - E1 - E7
    DivisorClass.of(0, 0, 0, 0, 0, 0, 0, 0, 1, -1),   # a4 = E7 - E8
    DivisorClass.of(0, 1, -1, 0, 0, 0, -1, 0, 0, 0),  # a5 = Hg - E1 - E5
    DivisorClass.of(0, 0, 0, 0, 0, 0, 1, -1, 0, 0),   # a6 = E5 - E6
)

_SURFACE_ROOTS = (
    DivisorClass.of(1, 1, -1, -1, -1, -1, 0, 0, 0, 0),  # d0 = Hf + Hg - E1..E4
    DivisorClass.of(1, 0, 0, 0, 0, 0, -1, -1, 0, 0),    # d1 = Hf - E5 - E6
    DivisorClass.of(0, 1, 0, 0, 0, 0, 0, 0, -1, -1),    # d2 = Hg - E7 - E8
)


def symmetry_root(i: int) -> DivisorClass:
    """Simple root a_i of the symmetry sublattice Q, 0 <= i <= 6."""
    if not 0 <= i <= 6:
        raise IndexError(f"symmetry root index must be 0..6, got {i}")
    return _SYMMETRY_ROOTS[i]


def surface_root(i: int) -> DivisorClass:
    """Simple root d_i of the surface sublattice, 0 <= i <= 2."""
    if not 0 <= i <= 2:
        raise IndexError(f"surface root index must be 0..2, got {i}")
    return _SURFACE_ROOTS[i]


def cartan_matrix() -> tuple[tuple[int, ...], ...]:
    """Matrix [a_i.a_j] of the symmetry roots.

    Sign convention: diagonal entries are -2 and diagram edges carry +1
    (the opposite of the usual Cartan sign), so the table can be read
    directly off the intersection form.
    """
    return tuple(
        tuple(intersection(_SYMMETRY_ROOTS[i], _SYMMETRY_ROOTS[j]) for j in range(7))
        for i in range(7)
    )


CARTAN = cartan_matrix()


@dataclass(frozen=True)
class RootVector:
    """Integer coordinates on the symmetry simple roots a0..a6."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 7:
            raise ValueError(f"expected 7 coefficients, got {len(self.coeffs)}")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise TypeError("root vector coefficients must be integers")

    @classmethod
    def of(cls, *coeffs: int) -> "RootVector":
        return cls(tuple(int(c) for c in coeffs))

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> "RootVector":
        return RootVector(tuple(k * a for a in self.coeffs))

    def to_json(self) -> list[int]:
        return list(self.coeffs)


@dataclass(frozen=True)
class RationalRootVector:
    """Rational coordinates on the symmetry simple roots (element of Q tensor QQ)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 7:
            raise ValueError(f"expected 7 coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs) -> "RationalRootVector":
        return cls(tuple(Fraction(c) for c in coeffs))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


#: The null root delta in symmetry-root coordinates.
DELTA_ROOT = RootVector(DELTA_WEIGHTS)


class Sign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    ZERO = "zero"
    MIXED = "mixed"


def root_sign(v: RootVector) -> Sign:
    """Sign of a symmetry-lattice vector in the simple-root cone."""
    has_pos = any(c > 0 for c in v.coeffs)
    has_neg = any(c < 0 for c in v.coeffs)
    if has_pos and has_neg:
        return Sign.MIXED
    if has_pos:
        return Sign.POSITIVE
    if has_neg:
        return Sign.NEGATIVE
    return Sign.ZERO


def solve_linear_system(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> tuple[Fraction, ...] | None:
    """Solve A x = rhs exactly by Gaussian elimination.

    Returns one solution with all free variables set to zero, or None when
    the system is inconsistent.  A may be rectangular and rank-deficient.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[r])] for r, row in enumerate(rows)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n_cols):
        sel = next((r for r in range(row, n_rows) if aug[r][col] != 0), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        pivot = aug[row][col]
        aug[row] = [x / pivot for x in aug[row]]
        for r in range(n_rows):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
    for r in range(row, n_rows):
        if aug[r][n_cols] != 0:
            return None
    solution = [Fraction(0)] * n_cols
    for r, c in pivots:
        solution[c] = aug[r][n_cols]
    return tuple(solution)


def _alpha_coordinates(c: DivisorClass) -> tuple[Fraction, ...]:
    rows = [
        [Fraction(_SYMMETRY_ROOTS[j].coeffs[r]) for j in range(7)] for r in range(RANK)
    ]
    rhs = [Fraction(x) for x in c.coeffs]
    solution = solve_linear_system(rows, rhs)
    if solution is None:
        raise NotInSymmetryLattice(f"{c} is not in the span of the symmetry roots")
    return solution


def to_alpha_coords(c: DivisorClass) -> RootVector:
    """Express a class in symmetry-root coordinates.

    Raises NotInSymmetryLattice when the class is outside the integer span
    of a0..a6 (membership decided by an exact linear solve).
    """
    solution = _alpha_coordinates(c)
    if not all(x.denominator == 1 for x in solution):
        raise NotInSymmetryLattice(f"{c} has non-integral symmetry coordinates")
    return RootVector(tuple(int(x) for x in solution))


def from_alpha_coords(v: RootVector) -> DivisorClass:
    """Inverse of to_alpha_coords: the class sum_i v_i a_i."""
    result = ZERO_CLASS
    for i, c in enumerate(v.coeffs):
        result = result + c * _SYMMETRY_ROOTS[i]
    return result
