"""Lattice arithmetic, root bases, and coordinate conversions."""

import random

import pytest

from e6painleve.piclattice import (
    CARTAN,
    DELTA_WEIGHTS,
    DivisorClass,
    E6_EDGES,
    H_F,
    H_G,
    NotInSymmetryLattice,
    RootVector,
    Sign,
    anticanonical,
    exceptional,
    from_alpha_coords,
    intersection,
    root_sign,
    surface_root,
    symmetry_root,
    to_alpha_coords,
)


def test_intersection_on_basis():
    assert intersection(H_F, H_G) == 1
    assert intersection(H_F, H_F) == 0
    assert intersection(H_G, H_G) == 0
    assert intersection(exceptional(3), exceptional(3)) == -1
    assert intersection(exceptional(3), exceptional(5)) == 0
    assert intersection(H_F, exceptional(2)) == 0


def test_anticanonical_class():
    k = anticanonical()
    assert k.coeffs == (2, 2, -1, -1, -1, -1, -1, -1, -1, -1)
    # Expanding (2Hf + 2Hg - sum Ei)^2 by bilinearity gives 8 - 8 = 0.
    assert intersection(k, k) == 0
    for i in range(3):
        assert intersection(k, surface_root(i)) == 0
    for j in range(7):
        assert intersection(k, symmetry_root(j)) == 0


def test_symmetry_roots():
    assert symmetry_root(0) == exceptional(3) - exceptional(4)
    assert symmetry_root(3) == H_F - exceptional(1) - exceptional(7)
    assert symmetry_root(5) == H_G - exceptional(1) - exceptional(5)
    for i in range(7):
        assert intersection(symmetry_root(i), symmetry_root(i)) == -2
    with pytest.raises(IndexError):
        symmetry_root(7)


def test_surface_roots():
    assert surface_root(1) == H_F - exceptional(5) - exceptional(6)
    assert surface_root(0).coeffs == (1, 1, -1, -1, -1, -1, 0, 0, 0, 0)
    assert surface_root(0) + surface_root(1) + surface_root(2) == anticanonical()
    for i in range(3):
        assert intersection(surface_root(i), surface_root(i)) == -2
    with pytest.raises(IndexError):
        surface_root(3)


def test_sublattices_orthogonal():
    for i in range(7):
        for j in range(3):
            assert intersection(symmetry_root(i), surface_root(j)) == 0


def test_cartan_matrix_matches_diagram():
    for i in range(7):
        for j in range(7):
            if i == j:
                expected = -2
            elif (i, j) in E6_EDGES or (j, i) in E6_EDGES:
                expected = 1
            else:
                expected = 0
            assert CARTAN[i][j] == expected


def test_intersection_bilinear_symmetric():
    rng = random.Random(0)
    for _ in range(1000):
        a = DivisorClass(tuple(rng.randint(-9, 9) for _ in range(10)))
        b = DivisorClass(tuple(rng.randint(-9, 9) for _ in range(10)))
        c = DivisorClass(tuple(rng.randint(-9, 9) for _ in range(10)))
        assert intersection(a, b) == intersection(b, a)
        assert intersection(a + b, c) == intersection(a, c) + intersection(b, c)


def test_to_alpha_coords():
    assert to_alpha_coords(symmetry_root(4)) == RootVector.of(0, 0, 0, 0, 1, 0, 0)
    assert to_alpha_coords(anticanonical()) == RootVector(DELTA_WEIGHTS)
    with pytest.raises(NotInSymmetryLattice):
        to_alpha_coords(H_F)


def test_alpha_roundtrip_on_integers():
    rng = random.Random(1)
    for _ in range(200):
        v = RootVector(tuple(rng.randint(-20, 20) for _ in range(7)))
        assert to_alpha_coords(from_alpha_coords(v)) == v


def test_root_sign():
    assert root_sign(RootVector.of(0, 0, 0, 0, 1, 0, 0)) is Sign.POSITIVE
    assert root_sign(RootVector.of(-1, -2, -3, -2, -1, -2, -1)) is Sign.NEGATIVE
    assert root_sign(RootVector.of(1, -1, 0, 0, 0, 0, 0)) is Sign.MIXED
    assert root_sign(RootVector.of(0, 0, 0, 0, 0, 0, 0)) is Sign.ZERO


def test_divisor_class_validation():
    with pytest.raises(ValueError):
        DivisorClass((1, 2, 3))
    with pytest.raises(TypeError):
        DivisorClass((1.0,) * 10)
