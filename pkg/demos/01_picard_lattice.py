#!/usr/bin/env python3
"""Tour of the Picard lattice: intersection form, root bases, coordinates.

The surface is an 8-point blowup of P1 x P1.  Its divisor classes form a
rank-10 lattice spanned by the two line classes Hf, Hg and the exceptional
classes E1..E8.  The anticanonical class splits into three "surface roots"
forming an affine A2 triangle, and the orthogonal complement of that triangle
is spanned by seven "symmetry roots" forming an affine E6 diagram.
"""

from e6painleve import (
    anticanonical,
    cartan_matrix,
    exceptional,
    from_alpha_coords,
    intersection,
    root_sign,
    surface_root,
    symmetry_root,
    to_alpha_coords,
)
from e6painleve.piclattice import BASIS_LABELS, H_F, H_G, NotInSymmetryLattice, RootVector


def show(label, value):
    print(f"  {label:<38} {value}")


print("Basis and intersection form")
show("basis order", ", ".join(BASIS_LABELS))
show("Hf . Hg", intersection(H_F, H_G))
show("E3 . E3", intersection(exceptional(3), exceptional(3)))
show("Hf . E1", intersection(H_F, exceptional(1)))

print("\nAnticanonical class and its triangle of components")
k = anticanonical()
show("-K coefficients", k.coeffs)
show("(-K) . (-K)", intersection(k, k))
show("d0 + d1 + d2 == -K", surface_root(0) + surface_root(1) + surface_root(2) == k)
for i in range(3):
    show(f"d{i} self-intersection", intersection(surface_root(i), surface_root(i)))

print("\nSymmetry roots (affine E6) and their Cartan pairings")
for i in range(7):
    show(f"a{i}", symmetry_root(i).coeffs)
print("  Cartan matrix [ai . aj]:")
for row in cartan_matrix():
    print("   ", row)

print("\nCoordinates on the symmetry sublattice")
delta = to_alpha_coords(k)
show("-K in root coordinates (null root)", delta.coeffs)
show("round trip back to divisor", from_alpha_coords(delta) == k)
show("sign of the null root", root_sign(delta).value)
show("sign of its negative", root_sign(RootVector(tuple(-c for c in delta.coeffs))).value)
try:
    to_alpha_coords(H_F)
except NotInSymmetryLattice:
    show("Hf in root coordinates", "not in the symmetry sublattice (as it must be)")
