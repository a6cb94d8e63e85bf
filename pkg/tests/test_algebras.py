import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edet.algebras import (
    FANO_LINES,
    OCTONIONS,
    QUATERNIONS,
    FreeMagmaAlgebra,
    MatrixRing,
    associator,
    free_symbolic_matrix,
    load_table_algebra,
    make_table_algebra,
    octonion_table,
    table_to_json,
)
from edet.errors import MalformedTable, OrderTooLarge, ParseError, RingMismatch
from edet.io import ring_from_name
from edet.rings import QQ, PrimeField

coeff = st.integers(-6, 6).map(Fraction)


def vec(d):
    return st.lists(coeff, min_size=d, max_size=d)


def test_quaternion_units():
    H = QUATERNIONS
    one, i, j, k = (H.basis(t) for t in range(4))
    assert i * j == k and j * k == i and k * i == j
    assert j * i == -k
    for u in (i, j, k):
        assert u * u == -one
    assert i * j * k == -one


def test_quaternion_format():
    assert QUATERNIONS.format(QUATERNIONS.basis(1)) == "0 + 1i + 0j + 0k"


def test_octonion_fano_convention():
    O = OCTONIONS
    e = [O.basis(t) for t in range(8)]
    for a, b, c in FANO_LINES:
        assert e[a] * e[b] == e[c]
        assert e[b] * e[a] == -e[c]
        assert e[b] * e[c] == e[a]
        assert e[c] * e[a] == e[b]
    assert e[1] * e[2] == e[4]
    for t in range(1, 8):
        assert e[t] * e[t] == -e[0]


def test_octonion_flags():
    d = OCTONIONS.descriptor
    assert not d.is_associative and d.is_power_associative and not d.is_commutative
    assert OCTONIONS.power_associativity_verified
    e = [OCTONIONS.basis(t) for t in range(8)]
    assert (e[1] * e[2]) * e[3] != e[1] * (e[2] * e[3])


@settings(max_examples=200, deadline=None)
@given(vec(8), vec(8))
def test_octonion_alternative_and_normed(x, y):
    O = OCTONIONS
    a, b = O.element(x), O.element(y)
    assert (a * a) * b == a * (a * b)
    assert (b * a) * a == b * (a * a)
    # norm is multiplicative
    norm = lambda v: sum(c * c for c in v.coeffs)
    assert norm(a * b) == norm(a) * norm(b)


@settings(max_examples=200, deadline=None)
@given(vec(8), st.integers(2, 6))
def test_octonion_power_associative(x, n):
    O = OCTONIONS
    a = O.element(x)
    left = a
    right = a
    for _ in range(n - 1):
        left = left * a
        right = a * right
    assert left == right


@settings(max_examples=200, deadline=None)
@given(vec(4), vec(4), vec(4))
def test_quaternion_associative(x, y, z):
    H = QUATERNIONS
    a, b, c = H.element(x), H.element(y), H.element(z)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_nonpa_table_flags(nonpa):
    d = nonpa.descriptor
    assert (d.is_commutative, d.is_associative, d.is_power_associative, d.has_unit) == (False, False, False, False)
    u, v = nonpa.basis(0), nonpa.basis(1)
    assert u * u == v and u * v == u and v * u == v and v * v == nonpa.zero
    assert (u * u) * u != u * (u * u)


def test_table_flags_commutative_requires_associative():
    # commutative but not associative: e0*e0 = e1, e1*e1 = e0, others zero
    t = [[[0, 1], [0, 0]], [[0, 0], [1, 0]]]
    alg = make_table_algebra(t)
    assert not alg.descriptor.is_associative
    assert not alg.descriptor.is_commutative


def test_table_flags_of_quaternion_table():
    alg = make_table_algebra(table_to_json(QUATERNIONS))
    d = alg.descriptor
    assert d.is_associative and d.is_power_associative and not d.is_commutative and d.has_unit
    assert alg.power_associativity_verified


def test_table_flags_octonions_heuristic():
    alg = make_table_algebra({"dimension": 8, "table": octonion_table()})
    d = alg.descriptor
    assert not d.is_associative and d.is_power_associative
    assert not alg.power_associativity_verified


def test_associator_vanishes_on_quaternion_basis():
    t = QUATERNIONS.table
    e = [[Fraction(int(k == i)) for k in range(4)] for i in range(4)]
    assert all(not any(associator(t, a, b, c)) for a in e for b in e for c in e)


def test_table_json_roundtrip(tmp_path, nonpa):
    p = tmp_path / "t.json"
    p.write_text(json.dumps(table_to_json(nonpa)))
    alg = load_table_algebra(p)
    assert alg.table == nonpa.table
    assert ring_from_name(f"table:{p}").table == nonpa.table


@pytest.mark.parametrize(
    "bad",
    [
        [],
        [[[0]], [[0]]],
        [[[0, 0], [0, 0]], [[0, 0]]],
        [[["x"]]],
        {"dimension": 3, "table": [[[1]]]},
        {"table_": []},
    ],
)
def test_malformed_table(bad):
    with pytest.raises(MalformedTable):
        make_table_algebra(bad)


def test_malformed_table_is_parse_error():
    assert issubclass(MalformedTable, ParseError)


def test_matrix_ring_flags():
    assert not MatrixRing(2).descriptor.is_commutative
    assert MatrixRing(1).descriptor.is_commutative
    assert MatrixRing(2).descriptor.is_associative
    assert MatrixRing(2, PrimeField(5)).name == "matrixring:2:mod:5"
    assert ring_from_name("matrixring:3:mod:7") == MatrixRing(3, PrimeField(7))


def test_matrix_ring_mismatch():
    a = MatrixRing(2).one
    b = MatrixRing(3).one
    with pytest.raises(RingMismatch):
        MatrixRing(2).add(a, b)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=12, max_size=12))
def test_matrix_ring_associative_noncommutative(xs):
    M = MatrixRing(2)
    a, b, c = (M.decode([[str(xs[4 * t]), str(xs[4 * t + 1])], [str(xs[4 * t + 2]), str(xs[4 * t + 3])]]) for t in range(3))
    assert (a * b) * c == a * (b * c)
    assert M.mul(M.one, a) == a == M.mul(a, M.one)


def test_free_symbolic_matrix_caps():
    assert free_symbolic_matrix(4, commutative=True).n == 4
    assert free_symbolic_matrix(3, commutative=False).n == 3
    with pytest.raises(OrderTooLarge):
        free_symbolic_matrix(5, commutative=True)
    with pytest.raises(OrderTooLarge):
        free_symbolic_matrix(4, commutative=False)


def test_polynomial_format_and_grading():
    A = free_symbolic_matrix(2)
    R = A.ring
    p = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    assert R.format(p) == "x11*x22 - x12*x21"
    assert all(R.degree(k) == 2 for k in p.terms)


def test_free_algebra_noncommutative():
    A = free_symbolic_matrix(2, commutative=False)
    assert A[0, 0] * A[0, 1] != A[0, 1] * A[0, 0]
    assert A.ring.format(A[0, 0] * A[0, 1]) == "a11*a12"


def test_free_magma_is_nonassociative():
    M = FreeMagmaAlgebra(["x", "y", "z"])
    x, y, z = (M.gen(i) for i in range(3))
    assert (x * y) * z != x * (y * z)
    assert M.format((x * y) * z) == "((x*y)*z)"
    assert M.one * x == x
    with pytest.raises(ParseError):
        M.encode(x)


@pytest.mark.parametrize("name", ["rational", "mod:7", "quaternion", "octonion", "matrixring:2"])
def test_encode_decode_roundtrip(name, rng):
    R = ring_from_name(name)
    for _ in range(20):
        x = R.random_element(rng)
        assert R.equal(R.decode(R.encode(x)), x)


def test_symbolic_encode_decode_roundtrip():
    for commutative in (True, False):
        A = free_symbolic_matrix(2, commutative)
        R = A.ring
        x = A[0, 1] * A[1, 0] * 3 if commutative else A.ring.mul(A[0, 1], A[1, 0])
        assert R.decode(json.loads(json.dumps(R.encode(x)))) == x


def test_unknown_ring():
    for bad in ("reals", "mod:x", "mod:9", "matrixring:0"):
        with pytest.raises(ParseError):
            ring_from_name(bad)
    assert ring_from_name("rational") is QQ
