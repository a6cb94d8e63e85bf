"""Determinant engines, all written against the ring contract.

Block convention used throughout: for an exponent ``e`` and shift ``g``, the
four block sums are

    e1 = sum over L_{n-1}^(e) of (g + su)^e      o1 = same over L_{n-1}^(o)
    o0 = sum over L_n^(o)     of (g + su)^e      e0 = same over L_n^(e)

and the determinant is ``-(e1 - o1 + o0 - e0) / n!``. The printed prefactor
``(-1)^(n-1)/n!`` agrees with this only for even n; see
:func:`printed_prefactor_value`.

Scalar rings (rationals, prime fields) go through the integer kernels in
:mod:`edet.kernels` unless ``backend="generic"``; every other ring, and any
instrumented ring, uses the generic path.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import factorial

from . import kernels
from .combinatorics import GammaAssignment, catalan, permutations, rank_ranges, subdiagonal_sums
from .errors import (
    DivisionUnavailable,
    ExponentOutOfRange,
    InadmissibleMethod,
    RingNotAssociative,
    RingNotCommutative,
    RingNotPowerAssociative,
)
from .rings import PrimeField, RationalField, lcm

METHODS = ("leibniz", "b3", "b4", "b5", "sdet", "nonassoc")


# ---------------------------------------------------------------------------
# admissibility
# ---------------------------------------------------------------------------


def _require_commutative(ring, what):
    if not ring.descriptor.is_commutative:
        raise RingNotCommutative(f"{what} needs a commutative ring; {ring.name} is not")


def _require_associative(ring, what):
    if not ring.descriptor.is_associative:
        raise RingNotAssociative(f"{what} needs an associative ring; {ring.name} is not")


def _require_powers(ring, what):
    d = ring.descriptor
    if d.is_associative:
        return
    if d.is_power_associative and ring.power_associativity_verified:
        return
    raise RingNotPowerAssociative(
        f"{what} needs unambiguous powers; {ring.name} is not known to be power-associative "
        "(use nonassoc_edet)"
    )


def _require_nfact(ring, n):
    ring.check_divisor(factorial(n))


def check_admissible(method, A):
    """Raise InadmissibleMethod / DivisionUnavailable if ``method`` cannot run on A."""
    ring, n = A.ring, A.n
    if method not in METHODS:
        raise InadmissibleMethod(f"unknown method {method!r}")
    if method in ("leibniz", "b3", "b4"):
        _require_commutative(ring, method)
    elif method == "b5":
        _require_powers(ring, method)
    elif method == "sdet":
        _require_associative(ring, method)
    if method != "leibniz":
        _require_nfact(ring, n)
    if method == "nonassoc":
        p = ring.characteristic
        if p and n >= 2 and p <= 2 * n - 2:
            raise DivisionUnavailable(f"nonassociative path needs p > 2n-2 = {2 * n - 2}, got p = {p}")
        ring.check_divisor(catalan(n))


# ---------------------------------------------------------------------------
# plumbing: accumulation, partitioning, scalar fast path
# ---------------------------------------------------------------------------


def _acc(ring, acc, x):
    return x if acc is None else ring.add(acc, x)


def _value(ring, x):
    return ring.zero if x is None else x


def _run_part(fn, A, args, start, stop):
    out = fn(A, *args, start, stop)
    snap = A.ring.snapshot() if hasattr(A.ring, "snapshot") else None
    return out, snap


def _partitioned(fn, A, args, total, workers):
    """Evaluate ``fn`` over rank ranges and combine the partial accumulator tuples in rank order."""
    ring = A.ring
    if workers <= 1:
        parts = [fn(A, *args, 0, total)]
    else:
        ranges = rank_ranges(total, workers)
        ring_state = ring.snapshot() if hasattr(ring, "snapshot") else None
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(_run_part, *zip(*[(fn, A, args, lo, hi) for lo, hi in ranges]))
            )
        parts = []
        for out, snap in results:
            parts.append(out)
            if snap is not None:
                ring.absorb(snap, since=ring_state)
    combined = list(parts[0])
    for part in parts[1:]:
        for i, x in enumerate(part):
            if x is not None:
                combined[i] = _acc(ring, combined[i], x)
    return combined


def _scalar_ring(A, backend):
    ring = A.ring
    scalar = type(ring) in (RationalField, PrimeField)
    if backend == "kernel" and not scalar:
        raise ValueError(f"no integer kernel for {ring.name}")
    if backend == "generic" or not scalar or A.n > kernels.MAX_ORDER:
        return None
    return ring


def _integerize(A, extra=()):
    """Integer matrix B = D*A and scaled extras; D = 1 for prime fields."""
    ring = A.ring
    if isinstance(ring, PrimeField):
        return [[x.residue for x in r] for r in A.rows], [g.residue for g in extra], 1
    d = 1
    for r in A.rows:
        for x in r:
            d = lcm(d, x.denominator)
    for g in extra:
        d = lcm(d, g.denominator)
    B = [[int(x * d) for x in r] for r in A.rows]
    return B, [int(g * d) for g in extra], d


def _from_scaled(ring, total, divisor):
    """The ring value total / divisor, where divisor is an integer admissible in the ring."""
    if isinstance(ring, RationalField):
        return Fraction(total, divisor)
    return ring.div_by_int(ring.from_int(total), divisor)


def _workers_map(fn, ranges, workers):
    if workers <= 1 or len(ranges) <= 1:
        return [fn(*r) for r in ranges]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*ranges)))


def _kernel_call(name, B, args, total, workers):
    fn = getattr(kernels.active, name)
    ranges = [(B, *args(lo, hi), lo, hi) for lo, hi in rank_ranges(total, max(1, workers))]
    return _workers_map(fn, ranges, workers)


# ---------------------------------------------------------------------------
# Leibniz
# ---------------------------------------------------------------------------


def _leibniz_part(A, start, stop):
    ring, rows, n = A.ring, A.rows, A.n
    even = odd = None
    for perm in permutations(n, start, stop):
        img = perm.image
        p = rows[0][img[0]]
        for i in range(1, n):
            p = ring.mul(p, rows[i][img[i]])
        if perm.is_even:
            even = _acc(ring, even, p)
        else:
            odd = _acc(ring, odd, p)
    return even, odd


def leibniz_det(A, backend="auto", workers=1):
    """sum over sigma of sign(sigma) a_{1 sigma(1)} ... a_{n sigma(n)} (commutative rings)."""
    check_admissible("leibniz", A)
    ring, n = A.ring, A.n
    if _scalar_ring(A, backend):
        B, _, d = _integerize(A)
        parts = _kernel_call("leibniz", B, lambda lo, hi: (), factorial(n), workers)
        return _from_scaled(ring, sum(parts), d**n)
    even, odd = _partitioned(_leibniz_part, A, (), factorial(n), workers)
    return ring.sub(_value(ring, even), _value(ring, odd))


# ---------------------------------------------------------------------------
# Block sums for the power-sum family
# ---------------------------------------------------------------------------


def ass_power(ring, a, n):
    """Average of all catalan(n) bracketed n-fold products of ``a``.

    Uses P_1 = a, P_k = sum_{i<k} P_i * P_{k-i} (bilinearity), then P_n / catalan(n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    with ring.tag("ass"):
        P = [None, a]
        for k in range(2, n + 1):
            acc = None
            for i in range(1, k):
                acc = _acc(ring, acc, ring.mul(P[i], P[k - i]))
            P.append(acc)
        c = catalan(n)
        return P[n] if c == 1 else ring.div_by_int(P[n], c)


def _blocks_part(A, exponent, gamma, use_ass, start, stop):
    ring, n = A.ring, A.n
    if use_ass:
        power = lambda x: ass_power(ring, x, exponent)  # noqa: E731
    else:
        power = lambda x: ring.pow(x, exponent)  # noqa: E731
    e1 = o1 = o0 = e0 = None
    for perm in permutations(n, start, stop):
        full, loo = subdiagonal_sums(A, perm)
        if gamma is not None:
            full = ring.add(gamma, full)
            loo = [ring.add(gamma, x) for x in loo]
        top = power(full)
        if perm.is_even:
            e0 = _acc(ring, e0, top)
            for x in loo:
                e1 = _acc(ring, e1, power(x))
        else:
            o0 = _acc(ring, o0, top)
            for x in loo:
                o1 = _acc(ring, o1, power(x))
    return e1, o1, o0, e0


def power_blocks(A, exponent, gamma=None, use_ass=False, backend="auto", workers=1):
    """The four block sums (e1, o1, o0, e0) described in the module docstring."""
    ring, n = A.ring, A.n
    if not use_ass and _scalar_ring(A, backend):
        extra = () if gamma is None else (gamma,)
        B, g, d = _integerize(A, extra)
        g0 = g[0] if g else 0
        parts = _kernel_call(
            "power_blocks", B, lambda lo, hi: (exponent, g0), factorial(n), workers
        )
        sums = [sum(p[i] for p in parts) for i in range(4)]
        return tuple(_from_scaled(ring, s, d**exponent) for s in sums)
    blocks = _partitioned(_blocks_part, A, (exponent, gamma, use_ass), factorial(n), workers)
    return tuple(_value(ring, b) for b in blocks)


def _finish(ring, n, blocks):
    e1, o1, o0, e0 = blocks
    total = ring.add(ring.sub(o1, e1), ring.sub(e0, o0))
    return ring.div_by_int(total, factorial(n))


def power_sum_det(A, backend="auto", workers=1):
    """edet(A): -(1/n!) times the alternating sum of su^n over L_{n-1} and L_n blocks.

    det over commutative rings, edet over associative and power-associative rings.
    """
    check_admissible("b5", A)
    return _finish(A.ring, A.n, power_blocks(A, A.n, backend=backend, workers=workers))


def uniform_gamma_det(A, gamma, backend="auto", workers=1):
    """Power-sum determinant with every subdiagonal sum shifted by the same ``gamma``."""
    check_admissible("b4", A)
    if not A.ring.contains(gamma):
        gamma = A.ring.from_int(gamma)
    return _finish(A.ring, A.n, power_blocks(A, A.n, gamma, backend=backend, workers=workers))


def nonassoc_edet(A, workers=1):
    """Power-sum determinant with each n-th power replaced by :func:`ass_power`."""
    check_admissible("nonassoc", A)
    return _finish(A.ring, A.n, power_blocks(A, A.n, use_ass=True, backend="generic", workers=workers))


def printed_prefactor_value(A, backend="auto"):
    """The power-sum formula evaluated with the literally printed prefactor (-1)^(n-1)/n!.

    Kept for the regression that documents the sign discrepancy for odd n.
    """
    check_admissible("b5", A)
    ring, n = A.ring, A.n
    e1, o1, o0, e0 = power_blocks(A, n, backend=backend)
    bracket = ring.sub(ring.add(ring.sub(e1, o1), o0), e0)
    value = ring.div_by_int(bracket, factorial(n))
    return value if (n - 1) % 2 == 0 else ring.neg(value)


# ---------------------------------------------------------------------------
# Polarized determinant with n! free shifts
# ---------------------------------------------------------------------------


def _polarized_part(A, gamma, start, stop):
    ring, n, rows = A.ring, A.n, A.rows
    even = odd = None
    for perm in permutations(n, start, stop):
        img = perm.image
        diag = [rows[i][img[i]] for i in range(n)]
        g = gamma.value_at(ring, perm.rank)
        plus = minus = None
        for k in range(n + 1):
            for subset in itertools.combinations(range(n), k):
                base = g
                for i in subset:
                    base = ring.add(base, diag[i])
                term = ring.pow(base, n)
                if (n - k) % 2 == 0:
                    plus = _acc(ring, plus, term)
                else:
                    minus = _acc(ring, minus, term)
        inner = ring.sub(_value(ring, plus), _value(ring, minus))
        if perm.is_even:
            even = _acc(ring, even, inner)
        else:
            odd = _acc(ring, odd, inner)
    return even, odd


def polarized_det(A, gamma=None, backend="auto", workers=1):
    """(1/n!) sum_sigma sign(sigma) sum_{S} (-1)^(n-|S|) (gamma_sigma + sum_{j in S} a_{j sigma(j)})^n.

    Equals det(A) for every assignment of the n! shifts.
    """
    check_admissible("b3", A)
    gamma = gamma or GammaAssignment.zero()
    ring, n = A.ring, A.n
    gamma.validate(n)
    total = factorial(n)
    if _scalar_ring(A, backend):
        # one common denominator for entries and all shifts
        gvals = [gamma.value_at(ring, r) for r in range(total)] if not gamma.is_uniform else None
        if gvals is None:
            gvals = [gamma.value_at(ring, 0)] * total
        B, g, d = _integerize(A, gvals)
        parts = _kernel_call("polarized", B, lambda lo, hi: (g[lo:hi],), total, workers)
        return _from_scaled(ring, sum(parts), total * d**n)
    even, odd = _partitioned(_polarized_part, A, (gamma,), total, workers)
    return ring.div_by_int(ring.sub(_value(ring, even), _value(ring, odd)), total)


# ---------------------------------------------------------------------------
# Barvinok's symmetrized determinant (oracle)
# ---------------------------------------------------------------------------


def _sdet_part(A, start, stop):
    ring, n, rows = A.ring, A.n, A.rows
    pos = neg = None
    for mu in permutations(n, start, stop):
        for sigma in permutations(n):
            p = rows[mu.image[0]][sigma.image[0]]
            for i in range(1, n):
                p = ring.mul(p, rows[mu.image[i]][sigma.image[i]])
            if mu.sign * sigma.sign == 1:
                pos = _acc(ring, pos, p)
            else:
                neg = _acc(ring, neg, p)
    return pos, neg


def sdet_barvinok(A, workers=1):
    """(1/n!) sum_{mu, sigma} sign(mu) sign(sigma) a_{mu(1) sigma(1)} ... a_{mu(n) sigma(n)}.

    Direct (n!)^2 enumeration; intended as an oracle for small n.
    """
    check_admissible("sdet", A)
    ring, n = A.ring, A.n
    pos, neg = _partitioned(_sdet_part, A, (), factorial(n), workers)
    return ring.div_by_int(ring.sub(_value(ring, pos), _value(ring, neg)), factorial(n))


# ---------------------------------------------------------------------------
# Corollaries
# ---------------------------------------------------------------------------


def identity_residual(A, t, backend="auto", workers=1):
    """e1 - o1 + o0 - e0 at exponent t; vanishes for 1 <= t <= n-1."""
    _require_commutative(A.ring, "identity_residual")
    if not 1 <= t <= A.n - 1:
        raise ExponentOutOfRange(f"t must be in 1..{A.n - 1}, got {t}")
    ring = A.ring
    e1, o1, o0, e0 = power_blocks(A, t, backend=backend, workers=workers)
    return ring.sub(ring.add(ring.sub(e1, o1), o0), e0)


def singularity_blocks(A, backend="auto", workers=1):
    """The two sides compared by :func:`singularity_check`: (e0 - o0, e1 - o1) at exponent n."""
    _require_commutative(A.ring, "singularity_check")
    ring = A.ring
    e1, o1, o0, e0 = power_blocks(A, A.n, backend=backend, workers=workers)
    return ring.sub(e0, o0), ring.sub(e1, o1)


def singularity_check(A, backend="auto", workers=1):
    """True iff the L_n and L_{n-1} alternating power sums agree, i.e. det(A) = 0."""
    lhs, rhs = singularity_blocks(A, backend=backend, workers=workers)
    return A.ring.equal(lhs, rhs)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def determinant(A, method="b5", gamma=None, backend="auto", workers=1):
    """Evaluate ``method`` on A. ``gamma`` is a ring value (b4) or GammaAssignment (b3)."""
    if method == "leibniz":
        return leibniz_det(A, backend=backend, workers=workers)
    if method == "b3":
        if gamma is not None and not isinstance(gamma, GammaAssignment):
            gamma = GammaAssignment.constant(gamma)
        return polarized_det(A, gamma, backend=backend, workers=workers)
    if method == "b4":
        if isinstance(gamma, GammaAssignment):
            if not gamma.is_uniform:
                raise InadmissibleMethod("b4 takes a single shift; use b3 for per-permutation shifts")
            gamma = gamma.value_at(A.ring, 0)
        return uniform_gamma_det(A, A.ring.zero if gamma is None else gamma, backend=backend, workers=workers)
    if method == "b5":
        return power_sum_det(A, backend=backend, workers=workers)
    if method == "sdet":
        return sdet_barvinok(A, workers=workers)
    if method == "nonassoc":
        return nonassoc_edet(A, workers=workers)
    raise InadmissibleMethod(f"unknown method {method!r}")


def edet(A, workers=1):
    """Power-sum determinant where powers are unambiguous, the Ass-averaged one otherwise."""
    try:
        _require_powers(A.ring, "b5")
    except RingNotPowerAssociative:
        return nonassoc_edet(A, workers=workers)
    return power_sum_det(A, workers=workers)


def laplace_first_row(A, det=edet):
    """sum_j (-1)^j a_{0j} det(minor_{0j}) for n >= 2."""
    ring = A.ring
    acc = None
    for j in range(A.n):
        term = ring.mul(A.rows[0][j], det(A.minor(0, j)))
        if j % 2:
            term = ring.neg(term)
        acc = _acc(ring, acc, term)
    return acc
