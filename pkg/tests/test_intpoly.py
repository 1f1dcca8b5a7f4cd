import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobgen.errors import NotDivisible
from frobgen.intpoly import IntPoly, cyclotomic, poly_exact_div, poly_mul

from helpers import totient


def brute_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    """Expansion by explicit exponent pairs, independent of IntPoly.__mul__."""
    out: dict[int, int] = {}
    for e1, c1 in p.terms():
        for e2, c2 in q.terms():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return IntPoly(out)


polys = st.builds(
    IntPoly,
    st.dictionaries(
        st.integers(min_value=0, max_value=40),
        st.integers(min_value=-9, max_value=9),
        max_size=8,
    ),
)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


class TestMul:
    def test_difference_of_squares(self):
        got = poly_mul(IntPoly({0: 1, 1: -1}), IntPoly({0: 1, 1: 1}))
        assert got == IntPoly({0: 1, 2: -1})

    def test_identity(self):
        p = IntPoly({0: 2, 7: -3, 19: 1})
        assert poly_mul(p, IntPoly.one()) == p

    def test_geometric_product_expansion(self):
        # (1 + z^3 + ... + z^12)(1 + z^5 + z^10): 15-term 0/1 poly of degree 22
        p = IntPoly.geometric(3, 5)
        q = IntPoly.geometric(5, 3)
        got = poly_mul(p, q)
        assert got == brute_mul(p, q)
        assert got.num_terms() == 15
        assert got.degree == 22
        assert got.is_zero_one()

    @given(polys, polys)
    def test_commutative(self, p, q):
        assert poly_mul(p, q) == poly_mul(q, p)

    @given(polys, polys, polys)
    def test_associative(self, p, q, r):
        assert poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r))

    @given(polys, polys)
    def test_matches_bruteforce(self, p, q):
        assert poly_mul(p, q) == brute_mul(p, q)

    @given(nonzero_polys, nonzero_polys)
    def test_degree_adds(self, p, q):
        assert poly_mul(p, q).degree == p.degree + q.degree


class TestExactDiv:
    def test_geometric_factorization(self):
        got = poly_exact_div(IntPoly.one_minus_pow(15), IntPoly.one_minus_pow(5))
        assert got == IntPoly({0: 1, 5: 1, 10: 1})

    def test_linear(self):
        got = poly_exact_div(IntPoly.one_minus_pow(2), IntPoly.one_minus_pow(1))
        assert got == IntPoly({0: 1, 1: 1})

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            poly_exact_div(IntPoly.one_minus_pow(3), IntPoly.one_minus_pow(2))

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            poly_exact_div(IntPoly.one(), IntPoly.zero())

    @given(polys, nonzero_polys)
    def test_mul_div_roundtrip(self, p, d):
        assert poly_exact_div(poly_mul(p, d), d) == p


class TestCyclotomic:
    def test_first_two(self):
        assert cyclotomic(1) == IntPoly({1: 1, 0: -1})
        assert cyclotomic(2) == IntPoly({1: 1, 0: 1})

    def test_phi_15(self):
        # z^8 - z^7 + z^5 - z^4 + z^3 - z + 1
        expected = IntPoly({8: 1, 7: -1, 5: 1, 4: -1, 3: 1, 1: -1, 0: 1})
        assert cyclotomic(15) == expected

    def test_phi_15_against_roots(self):
        # independent construction from primitive 15th roots of unity
        import cmath
        from math import gcd

        n = 15
        coeffs = [complex(1)]
        for j in range(1, n + 1):
            if gcd(j, n) == 1:
                root = cmath.exp(2j * cmath.pi * j / n)
                new = [complex(0)] * (len(coeffs) + 1)
                for e, c in enumerate(coeffs):
                    new[e + 1] += c
                    new[e] -= root * c
                coeffs = new
        rounded = {}
        for e, c in enumerate(coeffs):
            assert abs(c.imag) < 1e-6 and abs(c.real - round(c.real)) < 1e-6
            if round(c.real):
                rounded[e] = round(c.real)
        assert cyclotomic(15) == IntPoly(rounded)

    def test_invalid_index(self):
        with pytest.raises(ValueError):
            cyclotomic(0)

    @pytest.mark.parametrize("n", range(1, 101))
    def test_degree_is_totient(self, n):
        assert cyclotomic(n).degree == totient(n)

    @pytest.mark.parametrize("n", range(1, 101))
    def test_product_over_divisors(self, n):
        prod = IntPoly.one()
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, cyclotomic(d))
        assert prod == IntPoly({n: 1, 0: -1})


class TestSerialization:
    def test_text_examples(self):
        assert IntPoly({0: 1, 15: -1}).to_text() == "1 - z^15"
        assert IntPoly({1: 1, 2: 1, 4: 1, 7: 1}).to_text() == "z + z^2 + z^4 + z^7"
        assert IntPoly.zero().to_text() == "0"
        assert IntPoly({0: -2, 1: 3}).to_text() == "-2 + 3z"

    @given(polys)
    def test_json_roundtrip(self, p):
        assert IntPoly.from_json(p.to_json()) == p

    @given(polys)
    def test_json_reemit_identity(self, p):
        text = p.to_json()
        assert IntPoly.from_json(text).to_json() == text

    def test_json_big_coefficients(self):
        p = IntPoly({3: 10**40, 0: -(10**45)})
        assert IntPoly.from_json(p.to_json()) == p


class TestInvariants:
    @given(polys)
    def test_no_zero_coefficients_stored(self, p):
        assert all(c != 0 for _, c in p.terms())

    def test_zero_degree_is_none(self):
        assert IntPoly.zero().degree is None
        assert (IntPoly.one() - IntPoly.one()).degree is None

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            IntPoly({-1: 1})

    def test_evaluate_exact(self):
        p = IntPoly({0: 1, 100: 1})
        assert p.evaluate(2) == 2**100 + 1
