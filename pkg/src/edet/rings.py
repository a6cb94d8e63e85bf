"""Ring contract and the scalar rings (rationals, prime fields).

Every backend exposes its arithmetic through a :class:`Ring` object. The
determinant engines only ever call ring methods (``add``, ``mul``, ``pow``,
``div_by_int`` ...) so that a wrapper such as the counting ring in
:mod:`edet.verification` can observe each operation.
"""

from __future__ import annotations

import re
from contextlib import nullcontext
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DivisionUnavailable, ParseError, RingMismatch

_INT_RE = re.compile(r"^[+-]?\d+$")
_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin for p < 3.3e24, trial division for tiny p."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RingDescriptor:
    """Capability flags of a ring.

    The flags are monotone: a commutative ring (class K) is associative, and an
    associative ring is power-associative.
    """

    name: str
    is_commutative: bool
    is_associative: bool
    is_power_associative: bool
    has_unit: bool
    characteristic: int = 0

    def __post_init__(self):
        if self.is_commutative and not self.is_associative:
            raise ValueError("commutative rings must also be flagged associative")
        if self.is_associative and not self.is_power_associative:
            raise ValueError("associative rings must also be flagged power-associative")
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {self.characteristic}")


class Ring:
    """Base ring. Subclasses set ``descriptor`` and implement the element hooks.

    Defaults delegate to Python operators on the element objects.
    """

    descriptor: RingDescriptor
    #: True when power-associativity is a theorem for this ring, not a heuristic.
    power_associativity_verified = True

    @property
    def name(self) -> str:
        return self.descriptor.name

    @property
    def characteristic(self) -> int:
        return self.descriptor.characteristic

    # -- constants -----------------------------------------------------------
    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    # -- arithmetic ----------------------------------------------------------
    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def scale(self, x, k: int):
        """Integer multiple k*x, computed by the element type (not counted as a ring product)."""
        return x * k

    def check_divisor(self, k: int) -> None:
        if k == 0:
            raise DivisionUnavailable("division by zero")
        p = self.characteristic
        if p and k % p == 0:
            raise DivisionUnavailable(f"{k} is not invertible in characteristic {p}")

    def div_by_int(self, x, k: int):
        raise NotImplementedError

    def tag(self, label: str):
        """Context marking a region of evaluation; a no-op outside instrumentation."""
        return nullcontext()

    def pow(self, x, n: int):
        """x**n by left-to-right binary exponentiation (n >= 1).

        Only meaningful when powers are unambiguous, i.e. on power-associative rings.
        """
        if n < 1:
            raise ValueError("exponent must be >= 1")
        with self.tag("pow"):
            result = x
            for bit in bin(n)[3:]:
                result = self.mul(result, result)
                if bit == "1":
                    result = self.mul(result, x)
        return result

    def equal(self, x, y) -> bool:
        if not (self.contains(x) and self.contains(y)):
            raise RingMismatch(f"operands do not both belong to {self.name}")
        return x == y

    def is_zero(self, x) -> bool:
        return x == self.zero

    def contains(self, x) -> bool:
        raise NotImplementedError

    # -- I/O -----------------------------------------------------------------
    def format(self, x) -> str:
        return str(x)

    def encode(self, x):
        """JSON-ready encoding (strings only, never floats)."""
        raise NotImplementedError

    def decode(self, obj):
        raise NotImplementedError

    def random_element(self, rng, bound: int = 5):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.descriptor == other.descriptor

    def __hash__(self):
        return hash((type(self).__name__, self.descriptor))

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


def parse_rational(text) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ParseError(f"not an exact rational: {text!r}")
    q = Fraction(text.strip())
    return q


class RationalField(Ring):
    """The field Q with :class:`fractions.Fraction` elements (always reduced)."""

    descriptor = RingDescriptor("rational", True, True, True, True, 0)

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def div_by_int(self, x, k):
        self.check_divisor(k)
        return x / k

    def contains(self, x):
        return isinstance(x, Fraction)

    def encode(self, x):
        return str(x)

    def decode(self, obj):
        return parse_rational(obj)

    def random_element(self, rng, bound=5):
        return Fraction(rng.randint(-bound, bound))


QQ = RationalField()


@dataclass(frozen=True, slots=True)
class PrimeFieldElement:
    """A residue class modulo a prime, stored as its least nonnegative residue."""

    residue: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.residue < self.modulus:
            object.__setattr__(self, "residue", self.residue % self.modulus)

    def _check(self, other):
        if not isinstance(other, PrimeFieldElement) or other.modulus != self.modulus:
            raise RingMismatch(f"cannot combine Z/{self.modulus} with {other!r}")

    def __add__(self, other):
        self._check(other)
        return PrimeFieldElement((self.residue + other.residue) % self.modulus, self.modulus)

    def __sub__(self, other):
        self._check(other)
        return PrimeFieldElement((self.residue - other.residue) % self.modulus, self.modulus)

    def __neg__(self):
        return PrimeFieldElement(-self.residue % self.modulus, self.modulus)

    def __mul__(self, other):
        if isinstance(other, int):
            return PrimeFieldElement(self.residue * other % self.modulus, self.modulus)
        self._check(other)
        return PrimeFieldElement(self.residue * other.residue % self.modulus, self.modulus)

    def __str__(self):
        return str(self.residue)


class PrimeField(Ring):
    """Z/p for a prime p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        self.p = p
        self.descriptor = RingDescriptor(f"mod:{p}", True, True, True, True, p)

    @property
    def zero(self):
        return PrimeFieldElement(0, self.p)

    @property
    def one(self):
        return PrimeFieldElement(1, self.p)

    def from_int(self, k):
        return PrimeFieldElement(k % self.p, self.p)

    def div_by_int(self, x, k):
        self.check_divisor(k)
        return PrimeFieldElement(x.residue * pow(k, -1, self.p) % self.p, self.p)

    def contains(self, x):
        return isinstance(x, PrimeFieldElement) and x.modulus == self.p

    def encode(self, x):
        return str(x.residue)

    def decode(self, obj):
        if isinstance(obj, int) and not isinstance(obj, bool):
            return self.from_int(obj)
        if not isinstance(obj, str) or not _INT_RE.match(obj.strip()):
            raise ParseError(f"not an integer residue: {obj!r}")
        return self.from_int(int(obj))

    def random_element(self, rng, bound=5):
        return self.from_int(rng.randrange(self.p))


def div_by_int(ring: Ring, x, k: int):
    """Exact y with k*y == x; raises DivisionUnavailable when k is not invertible."""
    return ring.div_by_int(x, k)


def ring_equal(x, y) -> bool:
    """Structural equality of two scalar ring values in canonical form."""
    if isinstance(x, PrimeFieldElement) or isinstance(y, PrimeFieldElement):
        if not (isinstance(x, PrimeFieldElement) and isinstance(y, PrimeFieldElement)):
            raise RingMismatch("prime-field element compared with a non-residue")
        if x.modulus != y.modulus:
            raise RingMismatch(f"moduli differ: {x.modulus} vs {y.modulus}")
        return x.residue == y.residue
    if type(x) is not type(y):
        raise RingMismatch(f"{type(x).__name__} vs {type(y).__name__}")
    return x == y


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b
