"""Permutations, parities, (sub)diagonals and the counting constants."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .errors import DimensionMismatch, PayloadLength

EVEN, ODD = "even", "odd"


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of range(n) (0-based images) with its lexicographic rank."""

    image: tuple
    rank: int
    sign: int  # +1 for even, -1 for odd

    @property
    def parity(self) -> str:
        return EVEN if self.sign == 1 else ODD

    @property
    def is_even(self) -> bool:
        return self.sign == 1

    def __len__(self):
        return len(self.image)

    def one_based(self):
        return tuple(s + 1 for s in self.image)


def inversions(image) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(image)), 2) if image[i] > image[j])


def sign_of(image) -> int:
    return -1 if inversions(image) % 2 else 1


def unrank(n: int, rank: int) -> list:
    """Lexicographic unranking via the factorial number system."""
    pool = list(range(n))
    out = []
    for k in range(n - 1, -1, -1):
        f = factorial(k)
        idx, rank = divmod(rank, f)
        out.append(pool.pop(idx))
    return out


def rank_of(image) -> int:
    n = len(image)
    pool = sorted(image)
    r = 0
    for pos, v in enumerate(image):
        idx = pool.index(v)
        r += idx * factorial(n - 1 - pos)
        pool.pop(idx)
    return r


def permutations(n: int, start: int = 0, stop: int | None = None) -> Iterator[Permutation]:
    """Yield the permutations of range(n) with ranks in [start, stop), lexicographically.

    Lazy: only one image array is alive at a time, so rank ranges can be handed
    to independent workers.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    total = factorial(n)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    a = unrank(n, start)
    sign = sign_of(a)
    rank = start
    while True:
        yield Permutation(tuple(a), rank, sign)
        rank += 1
        if rank >= stop:
            return
        # next lexicographic permutation; track parity through the transpositions used
        i = n - 2
        while a[i] > a[i + 1]:
            i -= 1
        j = n - 1
        while a[j] < a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        tail = n - 1 - i
        a[i + 1 :] = a[:i:-1]
        if (1 + tail // 2) % 2:
            sign = -sign


def rank_ranges(total: int, workers: int):
    """Split range(total) into ``workers`` contiguous blocks (some possibly empty)."""
    workers = max(1, workers)
    base, extra = divmod(total, workers)
    out, lo = [], 0
    for w in range(workers):
        hi = lo + base + (1 if w < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def subdiagonal_sums(A, perm: Permutation):
    """su of the diagonal l(perm) and of its n leave-one-out subdiagonals.

    Uses n-1 additions for the full sum and one subtraction per leave-one-out
    value; ``leave_one_out[j]`` omits row j.
    """
    n = A.n
    if len(perm) != n:
        raise DimensionMismatch(f"permutation of {len(perm)} letters for order {n}")
    ring = A.ring
    rows = A.rows
    img = perm.image
    diag = [rows[i][img[i]] for i in range(n)]
    full = diag[0]
    for x in diag[1:]:
        full = ring.add(full, x)
    return full, [ring.sub(full, x) for x in diag]


@dataclass(frozen=True)
class Subdiagonal:
    positions: tuple
    columns: tuple
    parent_parity: str
    values: tuple

    @property
    def length(self) -> int:
        return len(self.positions)

    def su(self, ring):
        total = ring.zero
        for x in self.values:
            total = ring.add(total, x)
        return total


def subdiagonals(A, k: int, parity: str) -> Iterator[Subdiagonal]:
    """Length-k subdiagonals of diagonals with the given parity, one per (parent, subset) pair."""
    n = A.n
    if not 1 <= k <= n:
        raise ValueError(f"length must be in 1..{n}")
    want = 1 if parity == EVEN else -1
    for perm in permutations(n):
        if perm.sign != want:
            continue
        for pos in itertools.combinations(range(n), k):
            cols = tuple(perm.image[i] for i in pos)
            yield Subdiagonal(pos, cols, parity, tuple(A.rows[i][c] for i, c in zip(pos, cols)))


def catalan(n: int) -> int:
    """Number of bracketings of an n-fold product, (2n-2)! / (n! (n-1)!)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return factorial(2 * n - 2) // (factorial(n) * factorial(n - 1))


def bracketings(n: int):
    """All full bracketings of n factors as nested pairs; leaves are ``None``."""
    if n == 1:
        return [None]
    out = []
    for i in range(1, n):
        for left in bracketings(i):
            for right in bracketings(n - i):
                out.append((left, right))
    return out


@dataclass(frozen=True)
class GammaAssignment:
    """The free shifts gamma_sigma, indexed by lexicographic permutation rank.

    ``mode`` is one of ``zero``, ``constant`` (payload: a ring value),
    ``explicit`` (payload: n! ring values) or ``seeded`` (payload: an int seed;
    each gamma is zero or a small random element, derived from seed and rank).
    """

    mode: str
    payload: object = None

    @classmethod
    def zero(cls):
        return cls("zero")

    @classmethod
    def constant(cls, value):
        return cls("constant", value)

    @classmethod
    def explicit(cls, values):
        return cls("explicit", tuple(values))

    @classmethod
    def seeded(cls, seed: int):
        return cls("seeded", int(seed))

    def validate(self, n: int) -> None:
        if self.mode == "explicit" and len(self.payload) != factorial(n):
            raise PayloadLength(f"explicit gamma needs {factorial(n)} values, got {len(self.payload)}")
        if self.mode not in ("zero", "constant", "explicit", "seeded"):
            raise ValueError(f"unknown gamma mode {self.mode!r}")

    def value_at(self, ring, rank: int):
        if self.mode == "zero":
            return ring.zero
        if self.mode == "constant":
            return self.payload
        if self.mode == "explicit":
            return self.payload[rank]
        rng = random.Random(f"gamma:{self.payload}:{rank}")
        if rng.random() < 0.5:
            return ring.zero
        return ring.random_element(rng)

    @property
    def is_uniform(self) -> bool:
        return self.mode in ("zero", "constant")
