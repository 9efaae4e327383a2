#!/usr/bin/env python3
"""Translation elements and their decomposition into generator words.

A discrete Painleve step is a translation in the extended affine Weyl group:
it shifts every symmetry root by an integer multiple of the null root.  The
shift vector, the defining rational root ("Kac vector"), and its norm are
conjugation invariants.  The reduction procedure rewrites any group element
as an explicit word in the twelve generators; on the two built-in dynamics
it recovers seventeen-letter words.
"""

from e6painleve import (
    PHI_PIC_ACTION,
    PSI_PIC_ACTION,
    decompose,
    kac_vector,
    translation_delta_vector,
    translation_norm,
    word_to_picmap,
)
from e6painleve.decompose import NotInGroup
from e6painleve.weylgroup import PicMap

for name, action in (("qrt step (phi)", PHI_PIC_ACTION), ("schlesinger step (psi)", PSI_PIC_ACTION)):
    print(f"{name}")
    print("  shift vector:", translation_delta_vector(action))
    print("  kac vector:  ", [str(c) for c in kac_vector(action).coeffs])
    print("  norm:        ", translation_norm(action))
    word = decompose(action)
    print("  word:        ", " ".join(word), f" ({len(word)} letters)")
    print("  word reproduces the matrix exactly:", word_to_picmap(word) == action)
    print()

print("The reduction trace shows each pivot choice")
word, steps = decompose(PHI_PIC_ACTION, trace=True)
pivots = [s.index for s in steps]
print("  pivot sequence:", pivots)
print("  (each pivot is a simple root whose image had gone negative)")

print("\nMaps outside the group are rejected")
rows = [[1 if i == j else 0 for j in range(10)] for i in range(10)]
rows[9][9] = -1  # negate E8: an isometry of the form, but it moves -K
try:
    decompose(PicMap(tuple(tuple(r) for r in rows)))
except NotInGroup as exc:
    print("  NotInGroup:", exc)
