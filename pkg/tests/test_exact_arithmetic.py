from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import cyclotomics
from nichols.cyclotomic import (Cyclotomic, cyc_add, cyc_inv, cyc_mul, cyclotomic_polynomial,
                                embed_order, euler_phi, zeta_order)
from nichols.errors import DivisionByZero, IncompatibleOrder
from nichols.laurent import Q, LaurentPoly, RationalFunction, specialize
from nichols.linalg import bareiss_echelon, exact_rank_and_kernel, generic_rank, matvec, rref

z = Cyclotomic.zeta


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    # Phi_12 = x^4 - x^2 + 1
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 30])
def test_product_of_cyclotomics_is_xn_minus_1(n):
    prod = [1]
    for d in range(1, n + 1):
        if n % d == 0:
            phi = cyclotomic_polynomial(d)
            new = [0] * (len(prod) + len(phi) - 1)
            for i, a in enumerate(prod):
                for j, b in enumerate(phi):
                    new[i + j] += a * b
            prod = new
    assert prod == [-1] + [0] * (n - 1) + [1]


def test_basic_field_examples():
    assert z(4) * z(4) == Cyclotomic.from_rational(4, -1)
    assert (z(4) * z(4)).coeffs == (Fraction(-1), Fraction(0))
    a = Cyclotomic.from_coeffs(12, [1, 2, 0, -1])
    assert cyc_add(a, Cyclotomic.zero(12)) == a
    assert cyc_inv(z(6)) == z(6, 5)
    assert cyc_mul(z(6), z(6, 5)).is_one()
    assert Cyclotomic.one(7).coeffs == (1, 0, 0, 0, 0, 0)
    # zeta_N^N = 1 and negative powers
    assert z(5) ** 5 == 1
    assert z(5) ** -1 == z(5, 4)


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        cyc_inv(Cyclotomic.zero(5))


def test_embed_order():
    assert embed_order(Cyclotomic.from_rational(2, -1), 4) == z(4, 2)
    assert embed_order(Cyclotomic.one(3), 12).is_one()
    assert embed_order(z(3), 6) == z(6, 2)
    with pytest.raises(IncompatibleOrder):
        embed_order(z(4), 6)
    with pytest.raises(IncompatibleOrder):
        z(3) + z(4)


def test_zeta_order():
    assert zeta_order(6, 3) == 2
    assert zeta_order(6, 2) == 3
    assert zeta_order(6, 0) == 1
    assert zeta_order(8, 6) == 4


def test_json_round_trip():
    a = Cyclotomic.from_coeffs(12, [Fraction(1, 3), -2, 0, 5])
    data = a.to_json()
    assert data["order"] == 12
    assert all(isinstance(n, str) and isinstance(d, str) for n, d in data["coeffs"])
    assert Cyclotomic.from_json(data) == a


@given(cyclotomics(12), cyclotomics(12), cyclotomics(12))
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if not a.is_zero():
        assert (a * cyc_inv(a)).is_one()
        assert (b / a) * a == b


@given(cyclotomics(12), cyclotomics(12), st.sampled_from([24, 36, 60]))
def test_embed_is_ring_homomorphism(a, b, m):
    assert embed_order(a * b, m) == embed_order(a, m) * embed_order(b, m)
    assert embed_order(a + b, m) == embed_order(a, m) + embed_order(b, m)


def test_rank_and_kernel_examples():
    one = Cyclotomic.one(4)
    eye = [[one if i == j else one * 0 for j in range(3)] for i in range(3)]
    assert exact_rank_and_kernel(eye) == (3, [])
    r, k = exact_rank_and_kernel([[0] * 5, [0] * 5])
    assert r == 0
    assert k == [[int(i == j) for j in range(5)] for i in range(5)]
    r, k = exact_rank_and_kernel([[one, z(4)], [z(4), -one]])
    assert r == 1
    # leading 1, then -(zeta_4)^-1 * ... : the kernel vector is (1, zeta_4)
    assert k == [[one, z(4)]]
    assert matvec([[one, z(4)], [z(4), -one]], k[0]) == [0, 0]


matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(cyclotomics(5), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
def test_rank_nullity_and_kernel(mat):
    ncols = len(mat[0])
    rank, kern = exact_rank_and_kernel(mat)
    assert rank + len(kern) == ncols
    for v in kern:
        assert all(x == 0 for x in matvec(mat, v))
    # kernel basis is itself in reduced echelon form with leading 1
    rows, piv = rref(kern, ncols) if kern else ([], [])
    assert rows == kern


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4))
def test_rational_rank_matches_duplicated_rows(mat):
    r1, _ = exact_rank_and_kernel(mat)
    r2, _ = exact_rank_and_kernel(mat + mat)
    assert r1 == r2


def test_laurent_and_rational_function():
    p = (Q + 1) * (Q - 1)
    assert p == Q * Q - 1
    assert str(Q ** -2) == "q^-2"
    assert p.exact_div(Q - 1) == Q + 1
    with pytest.raises(ArithmeticError):
        Q.exact_div(Q + 1)
    r = RationalFunction.from_laurent(Q + 1) / RationalFunction.from_laurent(Q * Q - 1)
    assert r == RationalFunction([1], [-1, 1])
    assert (r * RationalFunction.from_laurent(Q - 1)).is_one()
    assert specialize(Q * Q + Q + 1, 3) == 0
    assert specialize(Q, 5, 2) == z(5, 2)


def test_generic_rank_examples():
    assert generic_rank([[Q, 1], [Q * Q, Q]]) == 1
    assert generic_rank([[1 if i == j else 0 for j in range(4)] for i in range(4)]) == 4
    assert generic_rank([[Q - 1]]) == 1
    assert generic_rank([[Q * 0]]) == 0


def test_bareiss_is_fraction_free():
    # determinant of a 3x3 Laurent matrix appears as the last pivot
    m = [[Q, 1, 0], [1, Q, 1], [0, 1, Q]]
    rows, piv = bareiss_echelon(m)
    assert piv == [0, 1, 2]
    # up to sign from normalisation
    assert rows[2][2] in (Q ** 3 - 2 * Q, 2 * Q - Q ** 3)


laurent = st.dictionaries(st.integers(-3, 3), st.integers(-2, 2), max_size=3).map(LaurentPoly)


@given(st.lists(st.lists(laurent, min_size=3, max_size=3), min_size=1, max_size=4))
def test_generic_rank_matches_specialization(mat):
    # p = 17 exceeds twice the spread of any minor's exponents here
    from nichols.linalg import specialize_matrix
    r = generic_rank(mat)
    rs, _ = exact_rank_and_kernel(specialize_matrix(mat, 17, 1))
    assert r == rs
