"""Exact sparse univariate polynomials over the integers.

A polynomial is a finite map exponent -> coefficient with arbitrary-precision
integer coefficients and no stored zeros.  The sparse representation is
deliberate: the polynomials that show up here (gap polynomials, rational
numerators, cyclotomics) have few terms but large degree gaps.

All arithmetic is exact; there is no floating-point path anywhere.
"""
from __future__ import annotations

import json
from typing import Iterable, Mapping

from frobgen.errors import NotDivisible


class IntPoly:
    """Sparse integer polynomial in the variable z.

    >>> IntPoly({0: 1, 15: -1}).to_text()
    '1 - z^15'
    >>> IntPoly.geometric(3, 5) * IntPoly.geometric(5, 3) == IntPoly.from_support(
    ...     [0, 3, 5, 6, 8, 9, 10, 11, 12, 13, 14, 16, 17, 19, 22])
    True
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[int, int] = {}
        for exp, coeff in items:
            if not isinstance(exp, int) or exp < 0:
                raise ValueError(f"exponent must be a nonnegative integer, got {exp!r}")
            if coeff:
                c = data.get(exp, 0) + coeff
                if c:
                    data[exp] = c
                else:
                    del data[exp]
        self._terms = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> IntPoly:
        return cls()

    @classmethod
    def one(cls) -> IntPoly:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> IntPoly:
        return cls({exp: coeff})

    @classmethod
    def geometric(cls, step: int, count: int) -> IntPoly:
        """1 + z^step + z^(2 step) + ... + z^((count-1) step)."""
        return cls({j * step: 1 for j in range(count)})

    @classmethod
    def one_minus_pow(cls, n: int) -> IntPoly:
        """1 - z^n."""
        return cls({0: 1, n: -1})

    @classmethod
    def from_support(cls, exponents: Iterable[int]) -> IntPoly:
        """0/1 polynomial with a 1 at each given exponent."""
        return cls({e: 1 for e in exponents})

    # -- inspection --------------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def terms(self) -> tuple[tuple[int, int], ...]:
        """Terms as (exponent, coefficient) pairs in increasing exponent order."""
        return tuple(sorted(self._terms.items()))

    def num_terms(self) -> int:
        return len(self._terms)

    def is_zero_one(self) -> bool:
        """True when every coefficient is 0 or 1."""
        return all(c == 1 for c in self._terms.values())

    def evaluate(self, x: int) -> int:
        return sum(c * x**e for e, c in self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: IntPoly) -> IntPoly:
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        res = IntPoly.zero()
        res._terms = out
        return res

    def __neg__(self) -> IntPoly:
        res = IntPoly.zero()
        res._terms = {e: -c for e, c in self._terms.items()}
        return res

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            res = IntPoly.zero()
            if other:
                res._terms = {e: c * other for e, c in self._terms.items()}
            return res
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        res = IntPoly.zero()
        res._terms = out
        return res

    __rmul__ = __mul__

    def shift(self, s: int) -> IntPoly:
        """Multiply by z^s (translate every exponent up by s)."""
        if s < 0:
            raise ValueError("shift must be nonnegative")
        res = IntPoly.zero()
        res._terms = {e + s: c for e, c in self._terms.items()}
        return res

    # -- serialization -----------------------------------------------------

    def to_text(self, var: str = "z") -> str:
        """Canonical text form, terms in increasing exponent order.

        >>> IntPoly({1: 1, 2: 1, 4: 1, 7: 1}).to_text()
        'z + z^2 + z^4 + z^7'
        >>> IntPoly({0: -2, 3: 1}).to_text()
        '-2 + z^3'
        >>> IntPoly.zero().to_text()
        '0'
        """
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in sorted(self._terms.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def to_json(self) -> str:
        """JSON form with coefficients as decimal strings (arbitrary precision
        survives any JSON parser)."""
        return json.dumps(
            {"terms": [[e, str(c)] for e, c in self.terms()]}, separators=(",", ":")
        )

    @classmethod
    def from_json(cls, text: str) -> IntPoly:
        data = json.loads(text)
        return cls((int(e), int(c)) for e, c in data["terms"])

    def __repr__(self) -> str:
        return f"IntPoly('{self.to_text()}')"


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    """Exact product."""
    return p * q


def poly_exact_div(p: IntPoly, d: IntPoly) -> IntPoly:
    """Exact quotient q with q*d == p.

    Raises NotDivisible when the division leaves a remainder; callers use
    that as a signal of a violated polynomial identity.

    >>> poly_exact_div(IntPoly.one_minus_pow(15), IntPoly.one_minus_pow(5))
    IntPoly('1 + z^5 + z^10')
    """
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    lead_exp = max(d._terms)
    lead_coeff = d._terms[lead_exp]
    d_items = tuple(d._terms.items())
    rem = dict(p._terms)
    quot: dict[int, int] = {}
    while rem:
        re = max(rem)
        rc = rem[re]
        if re < lead_exp or rc % lead_coeff:
            raise NotDivisible(
                f"({p.to_text()}) is not divisible by ({d.to_text()})"
            )
        qe = re - lead_exp
        qc = rc // lead_coeff
        quot[qe] = qc
        for e, c in d_items:
            t = qe + e
            v = rem.get(t, 0) - qc * c
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return IntPoly(quot)


_cyclotomic_cache: dict[int, IntPoly] = {}


def cyclotomic(n: int) -> IntPoly:
    """The nth cyclotomic polynomial, by the exact division recurrence
    Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d.

    >>> cyclotomic(1)
    IntPoly('-1 + z')
    >>> cyclotomic(6)
    IntPoly('1 - z + z^2')
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = _cyclotomic_cache.get(n)
    if poly is None:
        poly = IntPoly({n: 1, 0: -1})
        for d in range(1, n):
            if n % d == 0:
                poly = poly_exact_div(poly, cyclotomic(d))
        _cyclotomic_cache[n] = poly
    return poly
