"""Parsing and encoding helpers: exact rationals as strings, CSV decimals."""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

from .birational import ParamVector, ProjectiveCoord, SurfacePoint
from .models import SchlesingerParams


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def parse_fraction_list(text: str, expected: int | None = None) -> tuple[Fraction, ...]:
    values = tuple(parse_fraction(part) for part in text.split(","))
    if expected is not None and len(values) != expected:
        raise ValueError(f"expected {expected} comma-separated rationals, got {len(values)}")
    return values


def parse_params(text: str) -> ParamVector:
    return ParamVector(parse_fraction_list(text, 8))


def parse_point(text: str) -> SurfacePoint:
    f, g = parse_fraction_list(text, 2)
    return SurfacePoint.affine(f, g)


def parse_schlesinger(text: str) -> SchlesingerParams:
    vals = parse_fraction_list(text, 7)
    return SchlesingerParams(*vals)


def decimal_str(x: Fraction, digits: int = 20) -> str:
    """Decimal approximation with the stated number of significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def coord_decimal(c: ProjectiveCoord, digits: int = 20) -> str:
    return decimal_str(c.as_fraction(), digits) if c.is_finite else "inf"
