from math import comb

import pytest
import sympy
from hypothesis import given, strategies as st

from mec_atlas.polycomb import (
    ONE,
    X,
    Polynomial,
    SizeSpectrum,
    bounded_partitions,
    compositions,
    fibonacci,
    fibonacci_polynomial,
    format_polynomial,
    lucas,
    lucas_polynomial,
    lucas_triangle_coefficient,
    multinomial,
    parse_polynomial,
    poly_add,
    poly_eval_at_one,
    poly_mul,
    poly_scale,
)

coeff_lists = st.lists(st.integers(-50, 50), max_size=8)
nonneg_lists = st.lists(st.integers(0, 10 ** 30), max_size=8)


def _sym(p: Polynomial):
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(p.coeffs)) or [0], x)


def test_trimming_and_degree():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).degree == -1
    assert Polynomial([0, 0, 3]).degree == 2
    assert Polynomial() == 0


@given(coeff_lists, coeff_lists)
def test_arithmetic_matches_sympy(a, b):
    p, q = Polynomial(a), Polynomial(b)
    assert _sym(p + q) == _sym(p) + _sym(q)
    assert _sym(p * q) == _sym(p) * _sym(q)
    assert _sym(p - q) == _sym(p) - _sym(q)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    p, q, r = Polynomial(a), Polynomial(b), Polynomial(c)
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert poly_mul(p, q) == poly_mul(q, p)
    assert poly_add(p, q) == q + p


@given(coeff_lists, st.integers(-5, 5))
def test_scale_and_eval(a, c):
    p = Polynomial(a)
    assert poly_scale(p, c) == Polynomial.constant(c) * p
    assert poly_eval_at_one(p) == sum(a)
    assert p(2) == sum(v * 2 ** k for k, v in enumerate(a))


@given(nonneg_lists)
def test_render_parse_round_trip(a):
    p = Polynomial(a)
    assert parse_polynomial(format_polynomial(p)) == p


def test_render_examples():
    assert format_polynomial(Polynomial([1, 3, 1])) == "1 + 3*x + x^2"
    assert format_polynomial(Polynomial([0, 4, 2])) == "4*x + 2*x^2"
    assert format_polynomial(Polynomial()) == "0"
    assert parse_polynomial("x^9+21x^8+1") == Polynomial([1] + [0] * 7 + [21, 1])


def test_powers_and_shift():
    assert (ONE + X) ** 3 == Polynomial([1, 3, 3, 1])
    assert X.shift(2) == Polynomial.monomial(3)


def test_fibonacci_convention():
    assert [fibonacci(i) for i in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]
    assert [lucas(i) for i in range(7)] == [2, 1, 3, 4, 7, 11, 18]
    with pytest.raises(ValueError):
        fibonacci(-1)


def test_fibonacci_and_lucas_polynomials():
    assert fibonacci_polynomial(4) == Polynomial([1, 3, 1])
    assert lucas_polynomial(4) == Polynomial([1, 4, 2])
    assert lucas_polynomial(5).eval_at_one() == 11
    for p in range(2, 31):
        assert fibonacci_polynomial(p) == fibonacci_polynomial(p - 1) + X * fibonacci_polynomial(p - 2)
        assert fibonacci_polynomial(p).eval_at_one() == fibonacci(p)
    for p in range(0, 25):
        assert lucas_polynomial(p).eval_at_one() == lucas(p)


@pytest.mark.parametrize("n", range(1, 10))
def test_compositions_count_and_order(n):
    for k in range(1, n + 1):
        comps = list(compositions(n, k))
        assert len(comps) == comb(n - 1, k - 1)
        assert comps == sorted(comps)
        assert all(sum(c) == n and min(c) >= 1 for c in comps)


def test_compositions_empty_and_errors():
    assert list(compositions(2, 3)) == []
    with pytest.raises(ValueError):
        list(compositions(3, 0))


def test_bounded_partitions_examples():
    assert set(bounded_partitions(3, 2, 4)) == {(1, 0, 1), (0, 2, 0)}
    assert list(bounded_partitions(1, 3, 3)) == [(3,)]
    assert list(bounded_partitions(2, 2, 5)) == []


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 15))
def test_bounded_partitions_brute_force(j, k, n):
    from itertools import combinations_with_replacement

    expected = set()
    for parts in combinations_with_replacement(range(1, j + 1), k):
        if sum(parts) == n:
            expected.add(tuple(parts.count(i) for i in range(1, j + 1)))
    got = list(bounded_partitions(j, k, n))
    assert len(got) == len(set(got))
    assert set(got) == expected


def test_multinomial():
    assert multinomial(2, (1, 0, 1)) == 2
    assert multinomial(3, (3,)) == 1
    assert multinomial(4, (2, 2)) == 6
    with pytest.raises(ValueError):
        multinomial(4, (1, 2))


def test_lucas_triangle_examples():
    assert lucas_triangle_coefficient(4, 1) == 4
    assert lucas_triangle_coefficient(4, 2) == 2
    assert lucas_triangle_coefficient(6, 2) == lucas_polynomial(6)[2]
    assert lucas_triangle_coefficient(7, 0) == 1
    with pytest.raises(ValueError):
        lucas_triangle_coefficient(4, 3)


def test_lucas_triangle_identity_and_pascal_step():
    for p in range(2, 25):
        direct = lucas_polynomial(p)
        for k in range(1, p // 2 + 1):
            tri = lucas_triangle_coefficient(p, k)
            assert tri == direct[k]
            assert tri == lucas_polynomial(p - 2)[k - 1] + lucas_polynomial(p - 1)[k]


def test_size_spectrum_basics():
    s = SizeSpectrum([(1, 2), (3, 1), (1, 1), (4, 0)])
    assert dict(s) == {1: 3, 3: 1}
    assert s.total() == 4 and s.orientations() == 6
    assert str(s) == "{1:3, 3:1}"
    assert s == {3: 1, 1: 3}
    assert SizeSpectrum.from_sizes([2, 2, 5]) == {2: 2, 5: 1}
    with pytest.raises(ValueError):
        SizeSpectrum({0: 1})


def test_size_spectrum_product_is_disjoint_union():
    a, b = SizeSpectrum({1: 1, 3: 1}), SizeSpectrum({2: 1})
    prod = a * b
    assert prod == {2: 1, 6: 1}
    assert prod.orientations() == a.orientations() * b.orientations()
    assert (a + a) == {1: 2, 3: 2}
