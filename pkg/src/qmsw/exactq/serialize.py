"""JSON wire format for rational functions and cyclotomic elements."""
from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloElement
from .poly import QPoly
from .ratfunc import RatFunc


def _coeffs_out(p: QPoly) -> list[list[str]]:
    return [[str(c.numerator), str(c.denominator)] for c in p.coeffs]


def _coeffs_in(raw) -> QPoly:
    try:
        return QPoly([Fraction(int(n), int(d)) for n, d in raw])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed coefficient list: {raw!r}") from exc


def ratfunc_to_json(f: RatFunc) -> dict:
    return {"num": _coeffs_out(f.num), "den": _coeffs_out(f.den)}


def ratfunc_from_json(obj: dict) -> RatFunc:
    return RatFunc(_coeffs_in(obj["num"]), _coeffs_in(obj["den"]))


def cyclo_to_json(z: CycloElement) -> dict:
    return {
        "level": z.level,
        "residue": [[str(c.numerator), str(c.denominator)] for c in z.coefficients],
    }


def cyclo_from_json(obj: dict) -> CycloElement:
    return CycloElement(int(obj["level"]), _coeffs_in(obj["residue"]))


def rational_to_json(x: Fraction) -> list[str]:
    return [str(x.numerator), str(x.denominator)]
