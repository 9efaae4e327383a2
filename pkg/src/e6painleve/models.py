"""The two built-in discrete dynamics and their exact equivalence.

phi is the deautonomized QRT map on the canonical chart (f, g) with
parameters b1..b8.  Writing d for the parameter sum, one step solves

    (f + g)(f~ + g)   = (g + b1)(g + b2)(g + b3)(g + b4) / ((g - b5)(g - b6)),
    (f~ + g)(f~ + g~) = (f~ - b1~)...(f~ - b4~) / ((f~ + b7~)(f~ + b8~)),

in that order (each relation is explicit in its unknown), with parameters
moving by b5, b6 -> +d and b7, b8 -> -d.

psi is an elementary two-point Schlesinger transformation, realized as a
closed-form birational map in isomonodromic coordinates (x, y) whose
parameters are characteristic indices (theta and kappa values constrained by
the Fuchs relation); one step shifts one index at 0 down and one index at 1
up by one.

Two parameter dictionaries translate the indices into canonical
b-parameters: one straight from psi's own blowup-point positions, and one
(the first composed with the conjugating reflection pair w5, w3) under which
psi becomes phi exactly; the same conjugation produces the explicit change
of variables (x, y) -> (f, g).  verify_equivalence checks both identities
pointwise at seeded generic rational samples, exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .birational import (
    Indeterminate,
    MapComparison,
    ParamVector,
    ProjectiveCoord,
    SurfacePoint,
    TooManyDegenerateSamples,
    eval_word,
    maps_equal,
    sample_fraction,
    word_map,
)
from .weylgroup import PicMap, Word, parse_word

#: Generator word of the QRT-deautonomization step (rightmost symbol first).
PHI_WORD: Word = parse_word(
    "r w5 w2 w6 w5 w3 w2 w4 w3 w1 w2 w5 w0 w1 w2 w6 w5".split()
)

#: Generator word of the Schlesinger step (rightmost symbol first).
PSI_WORD: Word = parse_word(
    "r w1 w2 w6 w5 w3 w2 w4 w3 w1 w2 w5 w0 w1 w2 w6 w3".split()
)

#: The pair of commuting reflections conjugating psi into phi.
CONJUGATOR_WORD: Word = ("w5", "w3")

#: Push-forward of phi on the Picard lattice (entry [i][j] = coefficient of
#: basis class i in the image of basis class j).
PHI_PIC_ACTION = PicMap(
    (
        (6, 3, 2, 2, 2, 2, 3, 3, 1, 1),
        (3, 1, 1, 1, 1, 1, 1, 1, 0, 0),
        (-2, -1, 0, -1, -1, -1, -1, -1, 0, 0),
        (-2, -1, -1, 0, -1, -1, -1, -1, 0, 0),
        (-2, -1, -1, -1, 0, -1, -1, -1, 0, 0),
        (-2, -1, -1, -1, -1, 0, -1, -1, 0, 0),
        (-1, 0, 0, 0, 0, 0, 0, -1, 0, 0),
        (-1, 0, 0, 0, 0, 0, -1, 0, 0, 0),
        (-3, -1, -1, -1, -1, -1, -1, -1, 0, -1),
        (-3, -1, -1, -1, -1, -1, -1, -1, -1, 0),
    )
)

#: Push-forward of psi on the Picard lattice, same convention.
PSI_PIC_ACTION = PicMap(
    (
        (2, 3, 1, 1, 1, 1, 0, 2, 2, 0),
        (3, 5, 2, 2, 2, 2, 0, 2, 3, 1),
        (-1, -2, 0, -1, -1, -1, 0, -1, -1, 0),
        (-1, -2, -1, 0, -1, -1, 0, -1, -1, 0),
        (-1, -2, -1, -1, 0, -1, 0, -1, -1, 0),
        (-1, -2, -1, -1, -1, 0, 0, -1, -1, 0),
        (-2, -3, -1, -1, -1, -1, 0, -2, -2, -1),
        (0, -1, 0, 0, 0, 0, 0, 0, -1, 0),
        (0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
        (-2, -2, -1, -1, -1, -1, 0, -1, -2, 0),
    )
)


@dataclass(frozen=True)
class SchlesingerParams:
    """Characteristic indices of the rank-3 Fuchsian system.

    theta01, theta02 are the nonzero indices at the pole z = 0, theta11,
    theta12 those at z = 1, and kappa1..kappa3 the indices at infinity.
    The seven values must satisfy the Fuchs relation (sum zero).
    """

    theta01: Fraction
    theta02: Fraction
    theta11: Fraction
    theta12: Fraction
    kappa1: Fraction
    kappa2: Fraction
    kappa3: Fraction

    def __post_init__(self) -> None:
        for name in ("theta01", "theta02", "theta11", "theta12", "kappa1", "kappa2", "kappa3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.fuchs_sum() != 0:
            raise ValueError("Fuchs relation violated: the seven indices must sum to zero")

    def fuchs_sum(self) -> Fraction:
        return (
            self.theta01 + self.theta02 + self.theta11 + self.theta12
            + self.kappa1 + self.kappa2 + self.kappa3
        )

    def shifted(self) -> "SchlesingerParams":
        """Index evolution of one Schlesinger step: theta01 - 1, theta11 + 1."""
        return SchlesingerParams(
            self.theta01 - 1, self.theta02, self.theta11 + 1, self.theta12,
            self.kappa1, self.kappa2, self.kappa3,
        )

    def to_json(self) -> dict[str, str]:
        return {
            "theta01": str(self.theta01), "theta02": str(self.theta02),
            "theta11": str(self.theta11), "theta12": str(self.theta12),
            "kappa1": str(self.kappa1), "kappa2": str(self.kappa2),
            "kappa3": str(self.kappa3),
        }


def phi_step(b: ParamVector, p: SurfacePoint) -> tuple[ParamVector, SurfacePoint]:
    """One step of the deautonomized QRT dynamics on (b; f, g).

    The second defining relation is evaluated at the already-updated
    parameters.  Raises Indeterminate on base points (e.g. f + g = 0).
    """
    b1, b2, b3, b4, b5, b6, b7, b8 = b.b
    d = b.chi_delta()
    c = ProjectiveCoord.finite
    f, g = p.f, p.g
    try:
        rhs1 = (
            (g + c(b1)) * (g + c(b2)) * (g + c(b3)) * (g + c(b4))
            / ((g - c(b5)) * (g - c(b6)))
        )
        f_new = rhs1 / (f + g) - g
        new_b = ParamVector((b1, b2, b3, b4, b5 + d, b6 + d, b7 - d, b8 - d))
        n1, n2, n3, n4, _, _, n7, n8 = new_b.b
        rhs2 = (
            (f_new - c(n1)) * (f_new - c(n2)) * (f_new - c(n3)) * (f_new - c(n4))
            / ((f_new + c(n7)) * (f_new + c(n8)))
        )
        g_new = rhs2 / (f_new + g) - f_new
    except Indeterminate as exc:
        raise Indeterminate("phi hit a base point", symbol="phi") from exc
    return new_b, SurfacePoint(f_new, g_new)


def psi_step(t: SchlesingerParams, x, y) -> tuple[SchlesingerParams, Fraction, Fraction]:
    """One elementary Schlesinger step on the indices and the point (x, y).

    Raises Indeterminate when any denominator of the closed-form map
    vanishes at the sample.
    """
    x, y = Fraction(x), Fraction(y)
    t01, t02, t11, t12 = t.theta01, t.theta02, t.theta11, t.theta12
    k1, k2, k3 = t.kappa1, t.kappa2, t.kappa3

    r1 = (
        k1 * k2 + k2 * k3 + k3 * k1
        - (y - t12) * (x - t02)
        - t01 * (y + t02)
        - t11 * (t01 + t02 + t12)
    )
    r2 = k1 * k2 * k3 + t11 * ((y - t12) * (x - t02) + t01 * (y + t02))

    den_shared = (x + y) * (t11 - t12)
    if den_shared == 0 or x + t01 - t02 == 0:
        raise Indeterminate("psi hit a base point", symbol="psi")
    alpha = (y * r1 + x * (t01 * r1 + r2) / (x + t01 - t02)) / den_shared
    beta = ((y + t02) * r1 + r2) / den_shared

    dab = alpha - beta
    den_x = dab * (x * (y - t12) + (t01 - t02) * y) - alpha * (t11 + 1) * (t01 - t02)
    den_y = alpha * (t01 - t02)
    if den_x == 0 or den_y == 0:
        raise Indeterminate("psi hit a base point", symbol="psi")
    x_new = (
        dab * (alpha * x * (t11 - t12) + (1 + t02) * (x * (y - t12) + y * (t01 - t02)))
        / den_x
    )
    y_new = dab * (y * (x + t01 - t02) - t12 * x) / den_y
    return t.shifted(), x_new, y_new


def b_from_schlesinger_chart(t: SchlesingerParams) -> ParamVector:
    """Canonical parameters read off psi's own blowup-point positions.

    The parameter sum is always -1 (one Schlesinger step is a unit shift).
    """
    return ParamVector(
        (
            t.theta02 + t.kappa1,
            t.theta02 + t.kappa2,
            t.theta02 + t.kappa3,
            Fraction(0),
            t.theta11,
            t.theta12,
            t.theta01 - t.theta02,
            -t.theta02 - 1,
        )
    )


def b_from_schlesinger_matched(t: SchlesingerParams) -> ParamVector:
    """Canonical parameters under which psi becomes phi on the nose.

    This is the first dictionary transported by the conjugating pair of
    reflections w5, w3.
    """
    return ParamVector(
        (
            -t.kappa1 - t.theta01 - t.theta11,
            t.kappa2 + t.theta02,
            t.kappa3 + t.theta02,
            Fraction(0),
            t.theta01 - t.theta02,
            t.kappa1 + t.theta01 + t.theta12,
            t.theta11,
            t.kappa1 + t.theta11 - 1,
        )
    )


def change_of_variables(t: SchlesingerParams, x, y) -> tuple[Fraction, Fraction]:
    """The explicit coordinate change (x, y) -> (f, g) transporting psi to phi.

    After one psi step, the same formulas at the shifted indices map
    (x~, y~) to (f~, g~).
    """
    x, y = Fraction(x), Fraction(y)
    den_f = y + t.kappa1 + t.theta02
    den_g = x - t.kappa1 - t.theta02
    if den_f == 0 or den_g == 0:
        raise Indeterminate("change of variables undefined at the sample")
    f = (x * (y - t.theta11) - (t.kappa1 + t.theta02 + t.theta11) * y) / den_f
    g = (x * (y + t.kappa1 + t.theta01) + (t.theta01 - t.theta02) * y) / den_g
    return f, g


def change_of_variables_inverse(t: SchlesingerParams, f, g) -> tuple[Fraction, Fraction]:
    """Inverse coordinate change (f, g) -> (x, y).

    The conjugating pair w5, w3 is an involution of the family, so the
    inverse is the same pair evaluated at the transported parameters.
    """
    b = b_from_schlesinger_matched(t)
    _, point = eval_word(CONJUGATOR_WORD, b, SurfacePoint.affine(f, g))
    if not point.is_finite:
        raise Indeterminate("inverse change of variables is infinite at the sample")
    return point.f.as_fraction(), point.g.as_fraction()


def sample_schlesinger(rng: random.Random, bound: int = 100) -> SchlesingerParams:
    """Random indices satisfying the Fuchs relation (kappa3 balances the sum)."""
    vals = [sample_fraction(rng, bound) for _ in range(6)]
    kappa3 = -sum(vals, Fraction(0))
    return SchlesingerParams(vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], kappa3)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    samples: int
    rejected: int = 0
    note: str = ""
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out: dict = {
            "name": self.name,
            "passed": self.passed,
            "samples": self.samples,
            "rejected": self.rejected,
        }
        if self.note:
            out["note"] = self.note
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class EquivalenceReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def _comparison_check(name: str, comparison: MapComparison) -> CheckResult:
    counterexample = None
    if comparison.counterexample is not None:
        b, p = comparison.counterexample
        counterexample = {"b": b.to_json(), "point": p.to_json()}
    return CheckResult(
        name, comparison.equal, comparison.samples, comparison.rejected,
        counterexample=counterexample,
    )


def verify_equivalence(
    trials: int = 25,
    seed: int = 0,
    matched_dictionary: Callable[[SchlesingerParams], ParamVector] = b_from_schlesinger_matched,
) -> EquivalenceReport:
    """Pointwise verification that the two dynamics are the same map.

    Two checks, both exact at seeded generic rational samples:

    1. conjugation: phi equals w5 o w3 o psi o (w5 o w3)^-1, with psi
       realized as its generator word on the canonical chart;
    2. transported dynamics: the change of variables intertwines one psi
       step (in (x, y)) with one phi step (in (f, g)) under the matched
       dictionary, including the parameter evolution.

    With trials = 0 both checks pass vacuously and are flagged.
    """
    if trials == 0:
        return EquivalenceReport(
            (
                CheckResult("conjugation", True, 0, note="no samples"),
                CheckResult("transported_dynamics", True, 0, note="no samples"),
            )
        )

    conjugated = CONJUGATOR_WORD + PSI_WORD + tuple(reversed(CONJUGATOR_WORD))
    conj_result = _comparison_check(
        "conjugation", maps_equal(phi_step, word_map(conjugated), trials=trials, seed=seed)
    )

    accepted = 0
    rejected = 0
    index = 0
    failure: dict | None = None
    while accepted < trials and failure is None:
        index += 1
        if rejected > 9 * (accepted + 1) and rejected >= 10:
            raise TooManyDegenerateSamples(
                f"rejected {rejected} of {accepted + rejected} Schlesinger samples"
            )
        rng = random.Random(f"equivalence:{seed}:{index}")
        t = sample_schlesinger(rng)
        x, y = sample_fraction(rng, 100), sample_fraction(rng, 100)
        try:
            t_new, x_new, y_new = psi_step(t, x, y)
            f_new, g_new = change_of_variables(t_new, x_new, y_new)
            f, g = change_of_variables(t, x, y)
            b_new, p_new = phi_step(matched_dictionary(t), SurfacePoint.affine(f, g))
        except Indeterminate:
            rejected += 1
            continue
        if not p_new.is_finite:
            rejected += 1
            continue
        accepted += 1
        coords_match = (
            p_new.f.as_fraction() == f_new and p_new.g.as_fraction() == g_new
        )
        params_match = b_new == matched_dictionary(t_new)
        if not (coords_match and params_match):
            failure = {
                "theta": t.to_json(),
                "x": str(x),
                "y": str(y),
                "coords_match": coords_match,
                "params_match": params_match,
            }
    transport_result = CheckResult(
        "transported_dynamics", failure is None, accepted, rejected, counterexample=failure
    )
    return EquivalenceReport((conj_result, transport_result))


@dataclass(frozen=True)
class OrbitEntry:
    step: int
    params: object
    point: tuple


@dataclass(frozen=True)
class OrbitTrace:
    kind: str
    entries: tuple[OrbitEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)


def phi_orbit(b: ParamVector, p: SurfacePoint, steps: int) -> OrbitTrace:
    """Iterate phi, recording every exact state (including the initial one).

    On an indeterminate point the raised error carries the partial trace.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    entries = [OrbitEntry(0, b, (p.f, p.g))]
    for k in range(1, steps + 1):
        try:
            b, p = phi_step(b, p)
        except Indeterminate as exc:
            exc.partial_trace = OrbitTrace("phi", tuple(entries))
            raise
        entries.append(OrbitEntry(k, b, (p.f, p.g)))
    return OrbitTrace("phi", tuple(entries))


def psi_orbit(t: SchlesingerParams, x, y, steps: int) -> OrbitTrace:
    """Iterate psi, recording every exact state (including the initial one)."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    x, y = Fraction(x), Fraction(y)
    entries = [OrbitEntry(0, t, (x, y))]
    for k in range(1, steps + 1):
        try:
            t, x, y = psi_step(t, x, y)
        except Indeterminate as exc:
            exc.partial_trace = OrbitTrace("psi", tuple(entries))
            raise
        entries.append(OrbitEntry(k, t, (x, y)))
    return OrbitTrace("psi", tuple(entries))


def orbit(kind: str, state: Sequence, steps: int) -> OrbitTrace:
    """Dispatching front end: kind is "phi" (b, point) or "psi" (t, x, y)."""
    if kind == "phi":
        b, p = state
        return phi_orbit(b, p, steps)
    if kind == "psi":
        t, x, y = state
        return psi_orbit(t, x, y, steps)
    raise ValueError(f"unknown map {kind!r}")
