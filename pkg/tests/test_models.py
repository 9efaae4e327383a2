"""The two dynamics, the parameter dictionaries, and the equivalence checks."""

import random
from fractions import Fraction

import pytest

from e6painleve.birational import (
    Indeterminate,
    ParamVector,
    SurfacePoint,
    eval_word,
    maps_equal,
    sample_fraction,
    word_map,
)
from e6painleve.models import (
    CONJUGATOR_WORD,
    PHI_PIC_ACTION,
    PHI_WORD,
    PSI_PIC_ACTION,
    PSI_WORD,
    SchlesingerParams,
    b_from_schlesinger_chart,
    b_from_schlesinger_matched,
    change_of_variables,
    change_of_variables_inverse,
    orbit,
    phi_orbit,
    phi_step,
    psi_orbit,
    psi_step,
    sample_schlesinger,
    verify_equivalence,
)
from e6painleve.periodmap import root_variable_evolution, root_variables
from e6painleve.weylgroup import word_to_picmap

from oracles import qrt_oracle, qrt_relations_hold, schlesinger_oracle


def _random_params(rng, bound=60):
    return ParamVector(tuple(sample_fraction(rng, bound) for _ in range(8)))


def _theta_tuple(t: SchlesingerParams):
    return (t.theta01, t.theta02, t.theta11, t.theta12, t.kappa1, t.kappa2, t.kappa3)


def test_pic_actions_match_words():
    assert word_to_picmap(PHI_WORD) == PHI_PIC_ACTION
    assert word_to_picmap(PSI_WORD) == PSI_PIC_ACTION


def test_phi_step_against_oracle():
    rng = random.Random(13)
    checked = 0
    while checked < 20:
        b = _random_params(rng)
        f, g = sample_fraction(rng, 60), sample_fraction(rng, 60)
        try:
            expected_b, expected_f, expected_g = qrt_oracle(b.b, f, g)
        except ZeroDivisionError:
            continue
        new_b, new_p = phi_step(b, SurfacePoint.affine(f, g))
        assert new_b.b == expected_b
        assert new_p.f.as_fraction() == expected_f
        assert new_p.g.as_fraction() == expected_g
        assert qrt_relations_hold(b.b, f, g, expected_f, expected_g)
        checked += 1


def test_phi_autonomous_when_parameter_sum_vanishes():
    b = ParamVector.of(1, 2, 3, 4, -1, -2, -3, -4)
    assert b.chi_delta() == 0
    new_b, _ = phi_step(b, SurfacePoint.affine(Fraction(7, 3), Fraction(5, 2)))
    assert new_b == b


def test_phi_formula_equals_generator_word():
    assert maps_equal(phi_step, word_map(PHI_WORD), trials=25, seed=14).equal


def test_psi_step_against_oracle():
    rng = random.Random(15)
    checked = 0
    while checked < 20:
        t = sample_schlesinger(rng)
        x, y = sample_fraction(rng, 60), sample_fraction(rng, 60)
        try:
            expected_t, expected_x, expected_y = schlesinger_oracle(_theta_tuple(t), x, y)
        except ZeroDivisionError:
            continue
        try:
            new_t, new_x, new_y = psi_step(t, x, y)
        except Indeterminate:
            continue
        assert _theta_tuple(new_t) == expected_t
        assert (new_x, new_y) == (expected_x, expected_y)
        checked += 1


def test_psi_preserves_fuchs_relation():
    t = SchlesingerParams(*(Fraction(k) for k in (2, -1, 3, -2, 1, 4, -7)))
    assert t.fuchs_sum() == 0
    new_t, _, _ = psi_step(t, Fraction(5, 3), Fraction(7, 9))
    assert new_t.fuchs_sum() == 0
    assert new_t.theta01 == t.theta01 - 1
    assert new_t.theta11 == t.theta11 + 1


def test_schlesinger_params_validate_fuchs():
    with pytest.raises(ValueError):
        SchlesingerParams(*(Fraction(1),) * 7)


def test_psi_formula_equals_generator_word():
    rng = random.Random(16)
    checked = 0
    while checked < 20:
        t = sample_schlesinger(rng)
        x, y = sample_fraction(rng, 60), sample_fraction(rng, 60)
        try:
            new_t, new_x, new_y = psi_step(t, x, y)
            word_b, word_p = eval_word(
                PSI_WORD, b_from_schlesinger_chart(t), SurfacePoint.affine(x, y)
            )
        except Indeterminate:
            continue
        if not word_p.is_finite:
            continue
        assert word_p.f.as_fraction() == new_x
        assert word_p.g.as_fraction() == new_y
        assert word_b == b_from_schlesinger_chart(new_t)
        checked += 1


def test_chart_dictionary():
    rng = random.Random(17)
    for _ in range(10):
        t = sample_schlesinger(rng)
        b = b_from_schlesinger_chart(t)
        assert b.chi_delta() == -1
        assert b.b[3] == 0
    # kappa1 = -theta02 makes b1 vanish
    t = SchlesingerParams(
        Fraction(2), Fraction(3), Fraction(1), Fraction(-4), Fraction(-3), Fraction(5), Fraction(-4)
    )
    assert b_from_schlesinger_chart(t).b[0] == 0


def test_chart_root_variable_evolution():
    rng = random.Random(18)
    for _ in range(5):
        t = sample_schlesinger(rng)
        a = root_variables(b_from_schlesinger_chart(t))
        d = a.chi_delta()
        assert d == -1
        evolved = root_variable_evolution(PSI_WORD, a)
        assert evolved.a == (
            a.a[0], a.a[1], a.a[2], a.a[3] + d, a.a[4] - d, a.a[5] - d, a.a[6] + d,
        )


def test_matched_dictionary():
    rng = random.Random(19)
    for _ in range(10):
        t = sample_schlesinger(rng)
        b = b_from_schlesinger_matched(t)
        assert b.b[3] == 0
        # one Schlesinger step moves the b-parameters by the unit shifts
        shifted = b_from_schlesinger_matched(t.shifted())
        assert shifted.b[0] == b.b[0]
        assert shifted.b[1] == b.b[1]
        assert shifted.b[2] == b.b[2]
        assert shifted.b[3] == b.b[3]
        assert shifted.b[4] == b.b[4] - 1
        assert shifted.b[5] == b.b[5] - 1
        assert shifted.b[6] == b.b[6] + 1
        assert shifted.b[7] == b.b[7] + 1
        # the dictionary is the conjugator's parameter action on the first one
        conj_b, _ = eval_word(
            CONJUGATOR_WORD, b_from_schlesinger_chart(t), SurfacePoint.affine(0, 1)
        )
        assert conj_b == b


def test_change_of_variables_matches_conjugator_coordinates():
    rng = random.Random(20)
    checked = 0
    while checked < 25:
        t = sample_schlesinger(rng)
        x, y = sample_fraction(rng, 60), sample_fraction(rng, 60)
        try:
            f, g = change_of_variables(t, x, y)
            _, p = eval_word(
                CONJUGATOR_WORD, b_from_schlesinger_chart(t), SurfacePoint.affine(x, y)
            )
        except Indeterminate:
            continue
        if not p.is_finite:
            continue
        assert (p.f.as_fraction(), p.g.as_fraction()) == (f, g)
        checked += 1


def test_change_of_variables_round_trip():
    rng = random.Random(21)
    checked = 0
    while checked < 25:
        t = sample_schlesinger(rng)
        x, y = sample_fraction(rng, 60), sample_fraction(rng, 60)
        try:
            f, g = change_of_variables(t, x, y)
            back = change_of_variables_inverse(t, f, g)
        except Indeterminate:
            continue
        assert back == (x, y)
        checked += 1


def test_barred_change_of_variables_is_shifted_parameters():
    # the (f~, g~) formulas are the plain formulas at the stepped indices
    t = SchlesingerParams(
        Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), Fraction(1, 7),
        Fraction(2, 3), Fraction(3, 5), Fraction(-171, 70),
    )
    x, y = Fraction(17, 5), Fraction(23, 9)
    t_new, x_new, y_new = psi_step(t, x, y)
    f_bar, g_bar = change_of_variables(t_new, x_new, y_new)
    shifted = t.shifted()
    den_f = y_new + shifted.kappa1 + shifted.theta02
    f_direct = (
        x_new * (y_new - (t.theta11 + 1)) - (t.kappa1 + t.theta02 + t.theta11 + 1) * y_new
    ) / den_f
    den_g = x_new - shifted.kappa1 - shifted.theta02
    g_direct = (
        x_new * (y_new + t.kappa1 + t.theta01 - 1) + (t.theta01 - 1 - t.theta02) * y_new
    ) / den_g
    assert (f_bar, g_bar) == (f_direct, g_direct)


def test_verify_equivalence_passes():
    report = verify_equivalence(trials=10, seed=22)
    assert report.passed
    names = [c.name for c in report.checks]
    assert names == ["conjugation", "transported_dynamics"]
    assert all(c.samples == 10 for c in report.checks)


def test_verify_equivalence_zero_trials_is_flagged():
    report = verify_equivalence(trials=0)
    assert report.passed
    assert all(c.note == "no samples" and c.samples == 0 for c in report.checks)


def test_verify_equivalence_detects_perturbed_dictionary():
    def perturbed(t: SchlesingerParams) -> ParamVector:
        b = b_from_schlesinger_matched(t)
        values = list(b.b)
        values[0] += 1
        return ParamVector(tuple(values))

    report = verify_equivalence(trials=5, seed=23, matched_dictionary=perturbed)
    transported = report.checks[1]
    assert not transported.passed
    assert transported.counterexample is not None


def test_orbit_lengths_and_invariants():
    trace = phi_orbit(
        ParamVector.of(1, 2, 3, 4, 5, 6, 7, 8), SurfacePoint.affine(2, 3), 0
    )
    assert len(trace) == 1

    b0 = ParamVector.of(1, 2, 3, 4, 5, 6, 7, 8)
    trace = phi_orbit(b0, SurfacePoint.affine(2, 3), 4)
    assert len(trace) == 5
    for entry in trace.entries:
        assert entry.params.chi_delta() == b0.chi_delta()


def test_psi_orbit_root_variable_drift():
    t = SchlesingerParams(
        Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), Fraction(1, 7),
        Fraction(2, 3), Fraction(3, 5), Fraction(-171, 70),
    )
    trace = psi_orbit(t, Fraction(17, 5), Fraction(23, 9), 3)
    assert len(trace) == 4
    a0 = root_variables(b_from_schlesinger_chart(t)).a
    for entry in trace.entries:
        assert entry.params.fuchs_sum() == 0
        a_k = root_variables(b_from_schlesinger_chart(entry.params)).a
        assert a_k[3] == a0[3] - entry.step  # a3 drifts by d = -1 per step


def test_orbit_dispatch():
    b = ParamVector.of(1, 2, 3, 4, 5, 6, 7, 8)
    assert orbit("phi", (b, SurfacePoint.affine(2, 3)), 1).kind == "phi"
    t = SchlesingerParams(
        Fraction(1), Fraction(2), Fraction(3), Fraction(4), Fraction(5), Fraction(6), Fraction(-21)
    )
    assert orbit("psi", (t, Fraction(1, 2), Fraction(1, 3)), 1).kind == "psi"
    with pytest.raises(ValueError):
        orbit("sigma", (b,), 1)


def test_phi_orbit_partial_trace_on_indeterminate():
    b = ParamVector.of(1, 2, 3, 4, 5, 6, 7, 8)
    # f + g = 0 at the start: the very first step is indeterminate
    with pytest.raises(Indeterminate) as info:
        phi_orbit(b, SurfacePoint.affine(2, -2), 3)
    assert len(info.value.partial_trace) == 1
