"""Integer Laurent polynomials in one variable."""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import CoefficientOverflow

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _checked(c: int) -> int:
    if c > INT64_MAX or c < INT64_MIN:
        raise CoefficientOverflow(f"coefficient {c} does not fit in a signed 64-bit integer")
    return c


class LaurentPoly:
    """Immutable Laurent polynomial with int64-bounded integer coefficients.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "A"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: _checked(c) for e, c in acc.items() if c != 0}
        self.var = var

    @classmethod
    def monomial(cls, coef: int, exp: int, var: str = "A") -> LaurentPoly:
        return cls({exp: coef}, var)

    @classmethod
    def constant(cls, c: int, var: str = "A") -> LaurentPoly:
        return cls({0: c}, var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def degree_span(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree span")
        return min(self._terms), max(self._terms)

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = _checked(out.get(e1 + e2, 0) + _checked(c1 * c2))
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly({e * k: c ** (-k)}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reflect(self) -> LaurentPoly:
        """Substitute var -> var^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()}, self.var)

    def shift(self, k: int) -> LaurentPoly:
        return LaurentPoly({e + k: c for e, c in self._terms.items()}, self.var)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self._terms, reverse=True)):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = self.var if e == 1 else f"{self.var}^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


DELTA = LaurentPoly({2: -1, -2: -1})  # -A^2 - A^-2


def bracket_to_jones(poly: LaurentPoly) -> LaurentPoly:
    """Rewrite a normalized bracket in A as the Jones polynomial in t = A^-4."""
    out = {}
    for e, c in poly.terms.items():
        if e % 4:
            raise ValueError(f"exponent {e} is not a multiple of 4; not a knot invariant")
        out[-e // 4] = c
    return LaurentPoly(out, var="t")


def parse_t_poly(text: str) -> LaurentPoly:
    """Parse a polynomial in t written like ``t^(-2)-t^(-1)+ 1-2*t+ t^2``."""
    import re

    s = text.replace(" ", "").replace("(", "").replace(")", "")
    terms = {}
    for m in re.finditer(r"([+-]?)(\d*)\*?(t(?:\^(-?\d+))?)?", s):
        sign, digits, tpart, exp = m.groups()
        if not digits and not tpart:
            continue
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = 0 if not tpart else (int(exp) if exp is not None else 1)
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(terms, var="t")
