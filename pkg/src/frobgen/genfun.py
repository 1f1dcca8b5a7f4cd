"""Generating-function views of representation sets.

The indicator series of "more than k representations", the 0/1 polynomial
of "exactly k representations", and the numerator polynomial h(z) with

    sum_{j representable} z^j = h(z) / prod_i (1 - z^(a_i))

are all materialized exactly and cross-checked against the oracle.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from frobgen.closedform import PairParams
from frobgen.errors import NotPrime, WrongArity
from frobgen.intpoly import IntPoly, cyclotomic, poly_mul
from frobgen.oracle import Params, enumerate_exact_k, rep_table


@dataclass(frozen=True)
class IndicatorSeries:
    """bits[j] = 1 iff j has more than k representations, for j <= bound."""

    params: tuple[int, ...]
    k: int
    bound: int
    bits: tuple[int, ...]

    def to_bitstring(self) -> str:
        return "".join(str(b) for b in self.bits)

    def to_json(self) -> str:
        return json.dumps(
            {
                "params": list(self.params),
                "k": self.k,
                "bound": self.bound,
                "bits": list(self.bits),
            },
            separators=(",", ":"),
        )


def p_k_poly(p: PairParams, k: int) -> IntPoly:
    """0/1 polynomial whose support is the exactly-k set.

    k >= 1 expands the product form directly (no division involved):

        z^(ab(k-1)) * (1 + z^a + ... + z^((b-1)a)) * (1 + z^b + ... + z^((a-1)b))

    k = 0 reads the gap set off the oracle, since the rational form would
    need a series subtraction with cancellation.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    a, b = p.a, p.b
    if k == 0:
        gaps = enumerate_exact_k(p.as_params(), 0)
        return IntPoly.from_support(gaps.elements)
    poly = poly_mul(IntPoly.geometric(a, b), IntPoly.geometric(b, a)).shift(
        a * b * (k - 1)
    )
    if not poly.is_zero_one():
        raise AssertionError("exactly-k polynomial has a coefficient outside {0,1}")
    return poly


def s_k_indicator(p: PairParams, k: int, bound: int) -> IndicatorSeries:
    """Indicator of "more than k representations" up to bound.

    Built via the shift rule bits_k[j] = bits_0[j - abk]: j exceeds k
    representations exactly when j - ab exceeds k-1 of them.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if bound < 0:
        raise ValueError("bound must be >= 0")
    shift = p.a * p.b * k
    if shift > bound:
        bits = (0,) * (bound + 1)
    else:
        table = rep_table(p.as_params(), bound - shift)
        base = tuple(1 if c > 0 else 0 for c in table.counts)
        bits = (0,) * shift + base
    return IndicatorSeries(p.pair, k, bound, bits)


def rational_series(numer: IntPoly, params: Params, bound: int) -> list[int]:
    """Coefficients 0..bound of numer(z) / prod_i (1 - z^(a_i)), exactly."""
    counts = rep_table(params, bound).counts
    out = [0] * (bound + 1)
    for e, c in numer.terms():
        if e > bound:
            continue
        for t in range(e, bound + 1):
            out[t] += c * counts[t - e]
    return out


def numerator_h(params: Params) -> IntPoly:
    """The numerator h(z) of the representable-set generating function.

    Computed by the exact identity

        h = (1 + z + ... + z^(a_1 - 1)) * prod_{i>=2} (1 - z^(a_i))
            - p_0(z) * prod_i (1 - z^(a_i))

    where p_0 is the gap polynomial from the oracle, so deg h never exceeds
    g_0 + sum(a_i).  The result is re-expanded as a series and compared
    with the oracle indicator before being returned.
    """
    denoms = params.denominations
    gaps = enumerate_exact_k(params, 0)
    p0 = IntPoly.from_support(gaps.elements)

    h = IntPoly.geometric(1, denoms[0])
    for a in denoms[1:]:
        h = poly_mul(h, IntPoly.one_minus_pow(a))
    full = p0
    for a in denoms:
        full = poly_mul(full, IntPoly.one_minus_pow(a))
    h = h - full

    g0 = gaps.elements[-1] if gaps.elements else -1
    check_to = g0 + sum(denoms)
    series = rational_series(h, params, check_to)
    gap_elems = set(gaps.elements)
    for j, v in enumerate(series):
        expected = 0 if j in gap_elems else 1
        if v != expected:
            raise AssertionError(f"numerator series mismatch at degree {j}")
    return h


def denham_term_count(params: Params) -> int:
    """Number of monomials of h(z), counted with multiplicity, for exactly
    three denominations.

    Denham's dichotomy: the count is 4 or 6.  Counting with multiplicity
    (the sum of |coefficient|) matters: symmetric complete intersections
    whose two relations share a degree collapse to 1 - 2z^d + z^(2d), e.g.
    (12, 21, 28) where 7*12 = 4*21 = 3*28 = 84 gives (1 - z^84)^2, and the
    collided middle monomial still counts twice.
    """
    if params.n != 3:
        raise WrongArity(3, params.n)
    return sum(abs(c) for _, c in numerator_h(params).terms())


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def cyclotomic_identity_check(p: PairParams) -> bool:
    """For distinct primes a, b: the representable-set series equals
    Phi_ab(z) / (1 - z).

    Checks the polynomial identity
        Phi_ab(z) (1 - z^a)(1 - z^b) == (1 - z^(ab))(1 - z)
    and, as the binding contract, the series of Phi_ab/(1-z) against the
    oracle indicator up to degree g_0 + 1 (prefix sums of Phi_ab's
    coefficients, since 1/(1-z) accumulates).
    """
    a, b = p.a, p.b
    if a == b or not _is_prime(a) or not _is_prime(b):
        raise NotPrime(a if not _is_prime(a) else b)
    phi = cyclotomic(a * b)
    lhs = poly_mul(phi, poly_mul(IntPoly.one_minus_pow(a), IntPoly.one_minus_pow(b)))
    rhs = poly_mul(IntPoly.one_minus_pow(a * b), IntPoly.one_minus_pow(1))
    if lhs != rhs:
        return False
    g0 = a * b - a - b
    limit = g0 + 1
    acc = 0
    series = []
    for j in range(limit + 1):
        acc += phi.coeff(j)
        series.append(acc)
    indicator = s_k_indicator(p, 0, limit)
    return tuple(series) == indicator.bits
