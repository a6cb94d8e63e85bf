"""Brute-force oracles, deliberately independent of the library's enumeration code."""

import itertools
from fractions import Fraction
from math import factorial


def brute_sign(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def brute_leibniz(rows):
    """Signed sum over all permutations, for a matrix of Python numbers."""
    n = len(rows)
    total = 0
    for p in itertools.permutations(range(n)):
        term = 1
        for i in range(n):
            term *= rows[i][p[i]]
        total += brute_sign(p) * term
    return total


def brute_blocks(rows, exponent, gamma=0):
    """(e1, o1, o0, e0) by enumerating every subdiagonal of length n-1 and n explicitly."""
    n = len(rows)
    e1 = o1 = o0 = e0 = 0
    for p in itertools.permutations(range(n)):
        s = brute_sign(p)
        for k in (n - 1, n):
            for subset in itertools.combinations(range(n), k):
                v = (gamma + sum(rows[i][p[i]] for i in subset)) ** exponent
                if k == n:
                    if s == 1:
                        e0 += v
                    else:
                        o0 += v
                elif s == 1:
                    e1 += v
                else:
                    o1 += v
    return e1, o1, o0, e0


def polarization_sum(xs, gamma, power):
    """sum over subsets S of (-1)^(n-|S|) (gamma + sum_S x)^n with a caller-supplied power."""
    n = len(xs)
    total = 0
    for k in range(n + 1):
        for subset in itertools.combinations(xs, k):
            total += (-1) ** (n - k) * power(gamma + sum(subset))
    return total


def bracketed_products(a, n, mul):
    """Every bracketing of an n-fold product of a, by recursive enumeration of split points."""
    if n == 1:
        return [a]
    out = []
    for i in range(1, n):
        for left in bracketed_products(a, i, mul):
            for right in bracketed_products(a, n - i, mul):
                out.append(mul(left, right))
    return out


def catalan_formula(n):
    return factorial(2 * n - 2) // (factorial(n) * factorial(n - 1))


def to_fraction_rows(rows):
    return [[Fraction(x) for x in r] for r in rows]
