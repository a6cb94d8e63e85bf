from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edet.combinatorics import catalan
from edet.errors import DivisionUnavailable, ParseError, RingMismatch
from edet.rings import QQ, PrimeField, PrimeFieldElement, RingDescriptor, div_by_int, is_prime, ring_equal

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
nonzero_ints = st.integers(-1000, 1000).filter(bool)
primes = st.sampled_from([2, 3, 5, 7, 11, 13, 101, 7919])


def test_div_by_int_examples():
    assert div_by_int(QQ, Fraction(6), 3) == Fraction(2)
    assert div_by_int(QQ, QQ.zero, 17) == QQ.zero
    F7 = PrimeField(7)
    assert div_by_int(F7, F7.zero, 3) == F7.zero


def test_div_in_z7_matches_exhaustive_solution():
    F7 = PrimeField(7)
    solutions = [y for y in range(7) if (2 * y) % 7 == 3]
    assert solutions == [5]
    assert div_by_int(F7, F7.from_int(3), 2) == F7.from_int(5)


def test_division_unavailable():
    F5 = PrimeField(5)
    with pytest.raises(DivisionUnavailable):
        F5.div_by_int(F5.one, 10)
    with pytest.raises(DivisionUnavailable):
        QQ.div_by_int(QQ.one, 0)


def test_ring_equal_canonical_forms():
    assert ring_equal(Fraction(2, 4), Fraction(1, 2))
    assert ring_equal(Fraction(0, 1), Fraction(0))
    assert ring_equal(PrimeFieldElement(7, 5), PrimeFieldElement(2, 5))
    assert PrimeFieldElement(7, 5).residue == 2


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        ring_equal(PrimeFieldElement(1, 5), PrimeFieldElement(1, 7))
    with pytest.raises(RingMismatch):
        ring_equal(PrimeFieldElement(1, 5), Fraction(1))
    with pytest.raises(RingMismatch):
        PrimeFieldElement(1, 5) + PrimeFieldElement(1, 7)
    with pytest.raises(RingMismatch):
        PrimeField(5).equal(PrimeField(5).one, PrimeField(7).one)


def test_descriptor_flag_monotonicity():
    with pytest.raises(ValueError):
        RingDescriptor("bad", True, False, True, True)
    with pytest.raises(ValueError):
        RingDescriptor("bad", False, True, False, True)
    with pytest.raises(ValueError):
        RingDescriptor("bad", True, True, True, True, characteristic=9)
    RingDescriptor("ok", False, False, True, False, characteristic=13)


def test_is_prime_small_range():
    brute = [p for p in range(2, 500) if all(p % q for q in range(2, p))]
    assert [p for p in range(500) if is_prime(p)] == brute
    with pytest.raises(ValueError):
        PrimeField(15)


def test_rational_rejects_floats():
    with pytest.raises(ParseError):
        QQ.decode("1.5")
    with pytest.raises(ParseError):
        QQ.decode("1e3")
    assert QQ.decode("-3/6") == Fraction(-1, 2)


@settings(max_examples=1000, deadline=None)
@given(rationals, rationals, rationals)
def test_rational_ring_axioms(x, y, z):
    R = QQ
    assert R.add(R.add(x, y), z) == R.add(x, R.add(y, z))
    assert R.add(x, y) == R.add(y, x)
    assert R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z))
    assert R.mul(R.add(y, z), x) == R.add(R.mul(y, x), R.mul(z, x))
    assert R.add(x, R.zero) == x
    assert R.add(x, R.neg(x)) == R.zero


@settings(max_examples=1000, deadline=None)
@given(primes, st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, a, b, c):
    R = PrimeField(p)
    x, y, z = R.from_int(a), R.from_int(b), R.from_int(c)
    assert R.add(R.add(x, y), z) == R.add(x, R.add(y, z))
    assert R.add(x, y) == R.add(y, x)
    assert R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z))
    assert R.mul(R.add(y, z), x) == R.add(R.mul(y, x), R.mul(z, x))
    assert R.add(x, R.neg(x)) == R.zero


@settings(max_examples=1000, deadline=None)
@given(rationals, nonzero_ints)
def test_rational_division_exact(x, k):
    assert QQ.div_by_int(QQ.scale(x, k), k) == x


@settings(max_examples=1000, deadline=None)
@given(primes, st.integers(), nonzero_ints)
def test_prime_field_division_exact(p, a, k):
    R = PrimeField(p)
    if k % p == 0:
        with pytest.raises(DivisionUnavailable):
            R.div_by_int(R.from_int(a), k)
        return
    x = R.from_int(a)
    assert R.div_by_int(R.scale(x, k), k) == x


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_prime_field_admissibility(p):
    R = PrimeField(p)
    for n in range(1, (p - 1) // 2 + 1):
        R.check_divisor(factorial(n))
        R.check_divisor(catalan(n))
    for n in range(p, p + 3):
        with pytest.raises(DivisionUnavailable):
            R.check_divisor(factorial(n))


def test_pow_binary_exponentiation():
    for n in range(1, 12):
        assert QQ.pow(Fraction(3, 2), n) == Fraction(3, 2) ** n
    with pytest.raises(ValueError):
        QQ.pow(QQ.one, 0)
