import random

import pytest
from hypothesis import given, strategies as st

from quadlcm import (
    DivisibilityHypothesisError,
    InexactDivisionError,
    QuadInt,
    QuadRat,
    RingMismatchError,
    content,
    divide_exact,
    divisibility_criterion,
    is_multiple,
    product_divides_ab,
    shifted_product,
)

from oracles import lemma_instance, multiples_by_criterion, multiples_by_search


@st.composite
def quadint_tuples(draw, count=2, span=50):
    c = draw(st.integers(min_value=1, max_value=5))
    return tuple(
        QuadInt(
            draw(st.integers(min_value=-span, max_value=span)),
            draw(st.integers(min_value=-span, max_value=span)),
            c,
        )
        for _ in range(count)
    )


class TestArithmetic:
    def test_add(self):
        assert QuadInt(1, 2, 1) + QuadInt(3, -2, 1) == QuadInt(4, 0, 1)
        assert QuadInt(0, 0, 5) + QuadInt(7, 1, 5) == QuadInt(7, 1, 5)
        assert QuadInt(2, 3, 2) + QuadInt(5, 4, 2) == QuadInt(7, 7, 2)

    def test_mul(self):
        assert QuadInt(1, 1, 1) * QuadInt(2, 1, 1) == QuadInt(1, 3, 1)
        assert QuadInt(1, 3, 1) * QuadInt(3, 1, 1) == QuadInt(0, 10, 1)

    def test_mul_identity(self):
        for x in [QuadInt(3, -7, 2), QuadInt(0, 0, 2), QuadInt(-1, 5, 2)]:
            assert x * QuadInt(1, 0, 2) == x

    def test_mismatched_c_rejected(self):
        with pytest.raises(RingMismatchError):
            QuadInt(1, 0, 1) + QuadInt(1, 0, 2)
        with pytest.raises(RingMismatchError):
            QuadInt(1, 0, 1) * QuadInt(1, 0, 3)
        with pytest.raises(RingMismatchError):
            QuadRat(1, 0, 1) * QuadRat(1, 0, 2)

    def test_c_must_be_positive(self):
        with pytest.raises(ValueError):
            QuadInt(1, 1, 0)
        with pytest.raises(ValueError):
            QuadRat(1, 1, -2)

    @given(quadint_tuples(count=3))
    def test_ring_axioms(self, xs):
        x, y, z = xs
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z

    @given(quadint_tuples(count=2))
    def test_norm_multiplicative(self, xs):
        x, y = xs
        assert (x * y).norm() == x.norm() * y.norm()

    @given(quadint_tuples(count=2))
    def test_conj_morphism(self, xs):
        x, y = xs
        assert (x + y).conj() == x.conj() + y.conj()
        assert (x * y).conj() == x.conj() * y.conj()
        assert x.conj().conj() == x


class TestConjNorm:
    def test_conj_examples(self):
        assert QuadInt(1, 3, 1).conj() == QuadInt(1, -3, 1)
        assert QuadInt(5, 0, 2).conj() == QuadInt(5, 0, 2)
        prod = QuadInt(1, 1, 1) * QuadInt(2, 1, 1)
        assert prod.conj() == QuadInt(1, 1, 1).conj() * QuadInt(2, 1, 1).conj()
        assert prod.conj() == QuadInt(1, -3, 1)

    def test_norm_examples(self):
        assert QuadInt(1, 3, 1).norm() == 10
        assert QuadInt(0, 0, 7).norm() == 0
        # (k + sqrt(-c))(k - sqrt(-c)) = k^2 + c
        for c in range(1, 6):
            for k in range(0, 10):
                z = QuadInt(k, 1, c)
                assert z.norm() == k * k + c
                assert z * z.conj() == QuadInt(k * k + c, 0, c)


class TestContent:
    def test_examples(self):
        assert content(QuadInt(1, 3, 1)) == 1
        assert content(QuadInt(0, 10, 1)) == 10
        assert content(QuadInt(5, 5, 1)) == 5

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            content(QuadInt(0, 0, 1))

    @given(quadint_tuples(count=1))
    def test_self_times_conj(self, xs):
        (x,) = xs
        if x.is_zero():
            return
        prod = x * x.conj()
        assert prod == QuadInt(x.norm(), 0, x.c)
        assert content(prod) == x.norm()


class TestIsMultiple:
    def test_examples(self):
        z = QuadInt(1, 3, 1)
        assert is_multiple(10, z)
        assert not is_multiple(5, z)
        for n in (0, 1, -17, 123):
            assert is_multiple(n, QuadInt(1, 0, 3))

    def test_negative_n(self):
        assert is_multiple(-10, QuadInt(1, 3, 1))
        assert not is_multiple(-5, QuadInt(1, 3, 1))

    def test_criterion_is_integer(self):
        rng = random.Random(7)
        for _ in range(500):
            c = rng.randint(1, 5)
            a, b = rng.randint(-30, 30), rng.randint(-30, 30)
            if (a, b) == (0, 0):
                continue
            z = QuadInt(a, b, c)
            assert z.norm() % content(z) == 0
            assert divisibility_criterion(z) >= 1

    def test_against_quotient_search(self):
        # the full |a|,|b| <= 20 sweep lives in the acceptance suite
        limit = 60
        for c in range(1, 4):
            for a in range(-8, 9):
                for b in range(-8, 9):
                    if (a, b) == (0, 0):
                        continue
                    z = QuadInt(a, b, c)
                    assert multiples_by_criterion(z, limit) == multiples_by_search(z, limit)


class TestDivideExact:
    def test_examples(self):
        assert divide_exact(QuadInt(20, 0, 1), QuadInt(0, 10, 1)) == QuadInt(0, -2, 1)
        assert divide_exact(QuadInt(10, 0, 1), QuadInt(5, 5, 1)) == QuadInt(1, -1, 1)
        z = QuadInt(3, -4, 2)
        assert divide_exact(z, z) == QuadInt(1, 0, 2)

    def test_inexact_raises(self):
        with pytest.raises(InexactDivisionError):
            divide_exact(QuadInt(5, 0, 1), QuadInt(1, 3, 1))

    def test_zero_divisor_raises(self):
        with pytest.raises(ZeroDivisionError):
            divide_exact(QuadInt(5, 0, 1), QuadInt(0, 0, 1))

    @given(quadint_tuples(count=2, span=30))
    def test_roundtrip(self, xs):
        q, z = xs
        if z.is_zero():
            return
        assert divide_exact(q * z, z) == q


class TestShiftedProduct:
    def test_examples(self):
        assert shifted_product(1, 1, 3) == QuadInt(0, 10, 1)
        assert shifted_product(1, 2, 3) == QuadInt(5, 5, 1)
        assert shifted_product(1, 4, 4) == QuadInt(4, 1, 1)

    def test_bad_range(self):
        with pytest.raises(ValueError):
            shifted_product(1, 3, 2)

    def test_matches_explicit(self):
        for c in (1, 2, 5):
            expected = QuadInt(1, 0, c)
            for k in range(3, 9):
                expected = expected * QuadInt(k, 1, c)
            assert shifted_product(c, 3, 8) == expected


class TestProductDividesAB:
    def test_two_element_example(self):
        u = [QuadInt(1, 1, 1), QuadInt(2, 1, 1)]
        a = u[0] * u[1]
        b = (u[0] - u[1]) * (u[1] - u[0])
        assert b == QuadInt(-1, 0, 1)
        assert product_divides_ab(u, a, b)

    def test_single_element(self):
        for c in (1, 2, 3):
            for k in (1, 4, 7):
                u = [QuadInt(k, 1, c)]
                assert product_divides_ab(u, QuadInt(k * k + c, 0, c), QuadInt(1, 0, c))

    def test_lcm_instance(self):
        # m'=1, n=2, c=1: a = lcm(2, 5) = 10, b = 1!
        u = [QuadInt(1, 1, 1), QuadInt(2, 1, 1)]
        assert product_divides_ab(u, QuadInt(10, 0, 1), QuadInt(1, 0, 1))

    def test_hypothesis_violation_distinct_from_false(self):
        u = [QuadInt(1, 1, 1), QuadInt(2, 1, 1)]
        # a = 5 is not a multiple of 1 + i (criterion 2 does not divide 5)
        with pytest.raises(DivisibilityHypothesisError):
            product_divides_ab(u, QuadInt(5, 0, 1), QuadInt(1, 0, 1))
        # duplicate u's force zero difference products, so b must be 0
        dup = [QuadInt(1, 1, 1), QuadInt(1, 1, 1)]
        with pytest.raises(DivisibilityHypothesisError):
            product_divides_ab(dup, QuadInt(2, 0, 1), QuadInt(1, 0, 1))

    def test_zero_u_rejected(self):
        with pytest.raises(ValueError):
            product_divides_ab([QuadInt(0, 0, 1)], QuadInt(1, 0, 1), QuadInt(1, 0, 1))

    def test_random_instances(self):
        rng = random.Random(20260809)
        for _ in range(300):
            u, a, b = lemma_instance(rng)
            assert product_divides_ab(u, a, b)
