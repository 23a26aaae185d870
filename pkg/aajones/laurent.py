"""
Exact sparse Laurent polynomials over the integers.

Exponents are stored as integers in a declared unit: ``QuarterA`` stores the
exponent of the bracket variable A directly, ``HalfT`` stores twice the
exponent of t, so t^(-17/2) is stored as -17.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Mapping, Optional, Tuple

import sympy

from aajones.errors import EmptyError, ExponentOverflowError, ParseError, UnitError

EXPONENT_LIMIT = 2**31


class Unit(str, Enum):
    QUARTER_A = "QuarterA"
    HALF_T = "HalfT"

    @property
    def variable(self) -> str:
        return "A" if self is Unit.QUARTER_A else "t"

    @property
    def denominator(self) -> int:
        return 1 if self is Unit.QUARTER_A else 2


@dataclass(frozen=True)
class LaurentPoly:
    """Immutable polynomial; ``terms`` is sorted by exponent with no zero coefficient."""

    unit: Unit
    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, unit: Unit, mapping: Mapping[int, int]) -> "LaurentPoly":
        items = []
        for k, c in mapping.items():
            if c == 0:
                continue
            if abs(k) > EXPONENT_LIMIT:
                raise ExponentOverflowError(f"exponent {k} exceeds +/-{EXPONENT_LIMIT}")
            items.append((int(k), int(c)))
        items.sort()
        return cls(unit, tuple(items))

    @classmethod
    def zero(cls, unit: Unit) -> "LaurentPoly":
        return cls(unit, ())

    @classmethod
    def monomial(cls, unit: Unit, coeff: int = 1, exp: int = 0) -> "LaurentPoly":
        return cls.from_dict(unit, {exp: coeff})

    # -------------------------------- accessors
    def to_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def coeff(self, exp: int) -> int:
        return self.to_dict().get(exp, 0)

    @property
    def min_exp(self) -> int:
        if not self.terms:
            raise EmptyError("zero polynomial has no minimum exponent")
        return self.terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self.terms:
            raise EmptyError("zero polynomial has no maximum exponent")
        return self.terms[-1][0]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -------------------------------- ring operations
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return poly_add(self, other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.unit, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return poly_add(self, -other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.from_dict(self.unit, {k: c * other for k, c in self.terms})
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use monomial_shift")
        result = LaurentPoly.monomial(self.unit)
        base = self
        while n:
            if n & 1:
                result = poly_mul(result, base)
            base = poly_mul(base, base)
            n >>= 1
        return result

    def __str__(self) -> str:
        return format_poly(self)


@dataclass(frozen=True)
class CoeffVector:
    min_exp: int
    coeffs: Tuple[int, ...]


def _check_units(p: LaurentPoly, q: LaurentPoly) -> None:
    if p.unit is not q.unit:
        raise UnitError(f"cannot combine {p.unit.value} with {q.unit.value}")


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _check_units(p, q)
    acc = p.to_dict()
    for k, c in q.terms:
        acc[k] = acc.get(k, 0) + c
    return LaurentPoly.from_dict(p.unit, acc)


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _check_units(p, q)
    acc: Dict[int, int] = {}
    for k1, c1 in p.terms:
        for k2, c2 in q.terms:
            acc[k1 + k2] = acc.get(k1 + k2, 0) + c1 * c2
    return LaurentPoly.from_dict(p.unit, acc)


def poly_sum(polys: Iterable[LaurentPoly], unit: Unit) -> LaurentPoly:
    acc: Dict[int, int] = {}
    for p in polys:
        if p.unit is not unit:
            raise UnitError(f"cannot combine {p.unit.value} with {unit.value}")
        for k, c in p.terms:
            acc[k] = acc.get(k, 0) + c
    return LaurentPoly.from_dict(unit, acc)


def monomial_shift(p: LaurentPoly, c: int, k: int) -> LaurentPoly:
    """Multiply every term by c * x^k (k in stored units)."""
    if c == 0:
        raise ValueError("shift coefficient must be nonzero")
    return LaurentPoly.from_dict(p.unit, {e + k: coeff * c for e, coeff in p.terms})


def conjugate(p: LaurentPoly) -> LaurentPoly:
    """Substitute x -> 1/x; the Jones polynomial of the mirror image."""
    return LaurentPoly.from_dict(p.unit, {-k: c for k, c in p.terms})


def span(p: LaurentPoly) -> sympy.Rational:
    if not p.terms:
        raise EmptyError("span of the zero polynomial is undefined")
    return sympy.Rational(p.max_exp - p.min_exp, p.unit.denominator)


def to_coeff_vector(p: LaurentPoly) -> CoeffVector:
    if not p.terms:
        return CoeffVector(0, ())
    lo = p.min_exp
    dense = [0] * (p.max_exp - lo + 1)
    for k, c in p.terms:
        dense[k - lo] = c
    return CoeffVector(lo, tuple(dense))


def from_coeff_vector(vec: CoeffVector, unit: Unit) -> LaurentPoly:
    return LaurentPoly.from_dict(unit, {vec.min_exp + i: c for i, c in enumerate(vec.coeffs)})


def to_sympy(p: LaurentPoly) -> sympy.Expr:
    x = sympy.Symbol(p.unit.variable)
    return sympy.Add(
        *[c * x ** sympy.Rational(k, p.unit.denominator) for k, c in p.terms]
    )


# -------------------------------- canonical text form
def _format_exponent(var: str, k: int, den: int) -> str:
    e = sympy.Rational(k, den)
    if e == 1:
        return var
    if e.q == 1 and e > 0:
        return f"{var}^{e}"
    return f"{var}^({e})"


def format_poly(p: LaurentPoly) -> str:
    """Render in increasing exponent order, e.g. ``t^(-17/2) - 3t^(-15/2)``.

    The lowest term always comes first, so the two-component unlink prints as
    ``-t^(-1/2) - t^(1/2)`` rather than ``-t^(1/2) - t^(-1/2)``.  ``parse_poly``
    accepts the terms in any order.
    """
    if not p.terms:
        return "0"
    parts = []
    for i, (k, c) in enumerate(p.terms):
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + _format_exponent(
                p.unit.variable, k, p.unit.denominator
            )
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TERM_RE = re.compile(
    r"([+-]?)(\d*)\*?(?:([At])(?:\^(?:\(([+-]?\d+(?:/\d+)?)\)|([+-]?\d+)))?)?"
)


def parse_poly(text: str, unit: Optional[Unit] = None) -> LaurentPoly:
    """Inverse of ``format_poly``; also accepts ``*`` and unparenthesized integer exponents."""
    compact = re.sub(r"\s+", "", text)
    if compact in ("", "0"):
        if unit is None:
            raise ParseError("cannot infer the unit of an empty polynomial")
        return LaurentPoly.zero(unit)
    acc: Dict[int, int] = {}
    pos = 0
    while pos < len(compact):
        m = _TERM_RE.match(compact, pos)
        sign, digits, var, paren_exp, bare_exp = m.groups()
        if m.end() == pos or (not digits and not var):
            raise ParseError(f"unexpected text at offset {pos}: {compact[pos:]!r}")
        if pos > 0 and not sign:
            raise ParseError(f"missing operator before {compact[pos:]!r}")
        if var is not None:
            term_unit = Unit.QUARTER_A if var == "A" else Unit.HALF_T
            if unit is None:
                unit = term_unit
            elif unit is not term_unit:
                raise ParseError(f"variable {var!r} does not match unit {unit.value}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        if var is None:
            exp = sympy.Integer(0)
        else:
            raw = paren_exp if paren_exp is not None else bare_exp
            exp = sympy.Rational(raw) if raw is not None else sympy.Integer(1)
        den = (unit or Unit.HALF_T).denominator
        stored = exp * den
        if stored.q != 1:
            raise ParseError(f"exponent {exp} is not a multiple of 1/{den}")
        acc[int(stored)] = acc.get(int(stored), 0) + coeff
        pos = m.end()
    if unit is None:
        raise ParseError("cannot infer the unit of a constant polynomial")
    return LaurentPoly.from_dict(unit, acc)


# the loop value -A^2 - A^-2 of an extra disjoint circle
LOOP_VALUE = LaurentPoly.from_dict(Unit.QUARTER_A, {2: -1, -2: -1})


__all__ = [
    "Unit",
    "LaurentPoly",
    "CoeffVector",
    "poly_add",
    "poly_mul",
    "poly_sum",
    "monomial_shift",
    "conjugate",
    "span",
    "to_coeff_vector",
    "from_coeff_vector",
    "to_sympy",
    "format_poly",
    "parse_poly",
    "LOOP_VALUE",
]
