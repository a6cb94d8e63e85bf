"""Structured ring backends: quaternions, octonions, structure-constant algebras,
matrix rings, and the symbolic rings used to prove identities.

All coefficients are exact :class:`~fractions.Fraction` values.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from pathlib import Path

from .errors import MalformedTable, OrderTooLarge, ParseError, RingMismatch
from .matrix import Matrix
from .rings import QQ, Ring, RingDescriptor, lcm, parse_rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Finite-dimensional algebras given by structure constants
# ---------------------------------------------------------------------------


class AlgebraElement:
    """Coefficient vector over a :class:`StructureAlgebra` basis."""

    __slots__ = ("coeffs", "alg")

    def __init__(self, coeffs, alg):
        self.coeffs = tuple(coeffs)
        self.alg = alg

    def _check(self, other):
        if not isinstance(other, AlgebraElement) or not (
            other.alg is self.alg or other.alg == self.alg
        ):
            raise RingMismatch(f"cannot combine {self.alg.name} element with {other!r}")

    def __add__(self, other):
        self._check(other)
        return type(self)([a + b for a, b in zip(self.coeffs, other.coeffs)], self.alg)

    def __sub__(self, other):
        self._check(other)
        return type(self)([a - b for a, b in zip(self.coeffs, other.coeffs)], self.alg)

    def __neg__(self):
        return type(self)([-a for a in self.coeffs], self.alg)

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)([a * other for a in self.coeffs], self.alg)
        self._check(other)
        return type(self)(self.alg.product(self.coeffs, other.coeffs), self.alg)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coeffs == other.coeffs and (other.alg is self.alg or other.alg == self.alg)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({self.alg.format(self)})"

    def __str__(self):
        return self.alg.format(self)

    def __reduce__(self):
        return (type(self), (self.coeffs, self.alg))


class Quaternion(AlgebraElement):
    __slots__ = ()


class Octonion(AlgebraElement):
    __slots__ = ()


class StructureAlgebra(Ring):
    """Algebra over Q with basis e_0..e_{d-1} and e_i e_j = sum_k c[i][j][k] e_k."""

    element_class = AlgebraElement
    basis_names: tuple = ()

    def __init__(self, table, descriptor, power_associativity_verified=True):
        self.table = tuple(tuple(tuple(Fraction(c) for c in cell) for cell in row) for row in table)
        self.dimension = len(self.table)
        # sparse view: for each (i, j), the nonzero (k, c) pairs
        self._sparse = [
            [[(k, c) for k, c in enumerate(cell) if c] for cell in row] for row in self.table
        ]
        if all(c.denominator == 1 for row in self.table for cell in row for c in cell):
            self._int_sparse = [
                [[(k, int(c)) for k, c in cell] for cell in row] for row in self._sparse
            ]
        else:
            self._int_sparse = None
        self.descriptor = descriptor
        self.power_associativity_verified = power_associativity_verified
        self._unit_index = _find_unit(self.table)

    def product(self, x, y):
        if self._int_sparse is None:
            return self._fraction_product(x, y)
        # integer arithmetic over a common denominator
        dx, xs = _integer_vector(x)
        dy, ys = _integer_vector(y)
        out = [0] * self.dimension
        sparse = self._int_sparse
        for i, xi in enumerate(xs):
            if not xi:
                continue
            row = sparse[i]
            for j, yj in enumerate(ys):
                if not yj:
                    continue
                p = xi * yj
                for k, c in row[j]:
                    out[k] += c * p
        d = dx * dy
        return [Fraction(v, d) if v else _ZERO for v in out]

    def _fraction_product(self, x, y):
        out = [_ZERO] * self.dimension
        sparse = self._sparse
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = sparse[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                p = xi * yj
                for k, c in row[j]:
                    out[k] += c * p
        return out

    def basis(self, i):
        return self.element_class([_ONE if k == i else _ZERO for k in range(self.dimension)], self)

    def element(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != self.dimension:
            raise ParseError(f"expected {self.dimension} coefficients, got {len(coeffs)}")
        return self.element_class(coeffs, self)

    @property
    def zero(self):
        return self.element_class([_ZERO] * self.dimension, self)

    @property
    def one(self):
        if self._unit_index is None:
            raise ArithmeticError(f"{self.name} has no basis unit")
        return self.basis(self._unit_index)

    def from_int(self, k):
        return self.one * k

    def div_by_int(self, x, k):
        self.check_divisor(k)
        return self.element_class([a / k for a in x.coeffs], self)

    def contains(self, x):
        return isinstance(x, AlgebraElement) and (x.alg is self or x.alg == self)

    def format(self, x):
        names = self.basis_names or tuple(f"e{i}" for i in range(self.dimension))
        return " + ".join(f"{c}{name}" for c, name in zip(x.coeffs, names))

    def encode(self, x):
        return [str(c) for c in x.coeffs]

    def decode(self, obj):
        if not isinstance(obj, list):
            raise ParseError(f"{self.name} element must be a coefficient array, got {obj!r}")
        return self.element([parse_rational(c) for c in obj])

    def random_element(self, rng, bound=5):
        return self.element_class(
            [Fraction(rng.randint(-bound, bound)) for _ in range(self.dimension)], self
        )

    def __eq__(self, other):
        return (
            isinstance(other, StructureAlgebra)
            and self.descriptor == other.descriptor
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.descriptor, self.dimension))


def _integer_vector(coeffs):
    d = 1
    for c in coeffs:
        if c.denominator != 1:
            d = lcm(d, c.denominator)
    if d == 1:
        return 1, [c.numerator for c in coeffs]
    return d, [c.numerator * (d // c.denominator) for c in coeffs]


def _find_unit(table):
    d = len(table)
    for u in range(d):
        ok = True
        for i in range(d):
            e_i = [Fraction(int(k == i)) for k in range(d)]
            if list(table[u][i]) != e_i or list(table[i][u]) != e_i:
                ok = False
                break
        if ok:
            return u
    return None


def _signed_table(d, rules):
    """Build a table from {(i, j): (sign, k)} rules; unspecified products are zero."""
    table = [[[0] * d for _ in range(d)] for _ in range(d)]
    for (i, j), (sign, k) in rules.items():
        table[i][j][k] = sign
    return table


def quaternion_table():
    # basis 1, i, j, k
    rules = {}
    for a in range(4):
        rules[(0, a)] = (1, a)
        rules[(a, 0)] = (1, a)
    for a in (1, 2, 3):
        rules[(a, a)] = (-1, 0)
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        rules[(a, b)] = (1, c)
        rules[(b, a)] = (-1, c)
    return _signed_table(4, rules)


# Fano-plane lines (a, b, c) with e_a e_b = e_c, cyclic in a -> a+1 -> a+3 (mod 7), so e1 e2 = e4.
FANO_LINES = tuple(
    (i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1) for i in range(7)
)


def octonion_table():
    rules = {}
    for a in range(8):
        rules[(0, a)] = (1, a)
        rules[(a, 0)] = (1, a)
    for a in range(1, 8):
        rules[(a, a)] = (-1, 0)
    for a, b, c in FANO_LINES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            rules[(x, y)] = (1, z)
            rules[(y, x)] = (-1, z)
    return _signed_table(8, rules)


class QuaternionAlgebra(StructureAlgebra):
    """Hamilton quaternions over Q: i^2 = j^2 = k^2 = ijk = -1."""

    element_class = Quaternion
    basis_names = ("", "i", "j", "k")

    def __init__(self):
        super().__init__(
            quaternion_table(), RingDescriptor("quaternion", False, True, True, True, 0)
        )

    def __call__(self, a=0, b=0, c=0, d=0):
        return self.element([a, b, c, d])


class OctonionAlgebra(StructureAlgebra):
    """Cayley octonions over Q (alternative, hence power-associative; not associative)."""

    element_class = Octonion
    basis_names = ("", "e1", "e2", "e3", "e4", "e5", "e6", "e7")

    def __init__(self):
        super().__init__(
            octonion_table(), RingDescriptor("octonion", False, False, True, True, 0)
        )

    def __call__(self, *coeffs):
        coeffs = list(coeffs) + [0] * (8 - len(coeffs))
        return self.element(coeffs)


class TableAlgebra(StructureAlgebra):
    """Algebra from an arbitrary structure-constant table.

    Capability flags are computed on the basis: associativity exactly (bilinearity
    makes the basis triples sufficient); power-associativity only through the
    linearised degree-3 identity (xx)x = x(xx), so it is recorded as a heuristic
    and ``power_associativity_verified`` stays False unless the table is associative.
    """

    def __init__(self, table, name="table"):
        table = _validate_table(table)
        assoc = basis_associative(table)
        comm = assoc and basis_commutative(table)
        cubes = cubes_associate(table)
        unit = _find_unit(table) is not None
        super().__init__(
            table,
            RingDescriptor(name, comm, assoc, assoc or cubes, unit, 0),
            power_associativity_verified=assoc,
        )


def _validate_table(table):
    if not isinstance(table, (list, tuple)) or not table:
        raise MalformedTable("table must be a non-empty d x d x d array")
    d = len(table)
    out = []
    for row in table:
        if not isinstance(row, (list, tuple)) or len(row) != d:
            raise MalformedTable(f"table rows must have length {d}")
        out_row = []
        for cell in row:
            if not isinstance(cell, (list, tuple)) or len(cell) != d:
                raise MalformedTable(f"table cells must have length {d}")
            try:
                out_row.append(tuple(parse_rational(c) if isinstance(c, str) else Fraction(c) for c in cell))
            except (ParseError, TypeError, ValueError) as exc:
                raise MalformedTable(f"bad structure constant in {cell!r}") from exc
        out.append(tuple(out_row))
    return tuple(out)


def _basis_mul(table, x, y):
    d = len(table)
    out = [_ZERO] * d
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    for k in range(d):
                        c = table[i][j][k]
                        if c:
                            out[k] += c * xi * yj
    return out


def _unit_vec(d, i):
    return [Fraction(int(k == i)) for k in range(d)]


def associator(table, x, y, z):
    """(xy)z - x(yz) on coefficient vectors."""
    left = _basis_mul(table, _basis_mul(table, x, y), z)
    right = _basis_mul(table, x, _basis_mul(table, y, z))
    return [a - b for a, b in zip(left, right)]


def basis_associative(table):
    d = len(table)
    e = [_unit_vec(d, i) for i in range(d)]
    return all(
        not any(associator(table, e[i], e[j], e[k]))
        for i, j, k in itertools.product(range(d), repeat=3)
    )


def basis_commutative(table):
    d = len(table)
    return all(table[i][j] == table[j][i] for i in range(d) for j in range(d))


def cubes_associate(table):
    """Whether (xx)x = x(xx) holds identically, via its full linearisation over the basis."""
    d = len(table)
    e = [_unit_vec(d, i) for i in range(d)]
    for triple in itertools.combinations_with_replacement(range(d), 3):
        total = [_ZERO] * d
        for a, b, c in set(itertools.permutations(triple)):
            total = [t + s for t, s in zip(total, associator(table, e[a], e[b], e[c]))]
        if any(total):
            return False
    return True


def make_table_algebra(spec, name="table"):
    """Build a :class:`TableAlgebra` from ``{"dimension": d, "table": [...]}`` or a bare table."""
    if isinstance(spec, dict):
        if "table" not in spec:
            raise MalformedTable("missing 'table'")
        table = spec["table"]
        d = spec.get("dimension", len(table) if isinstance(table, list) else None)
        if not isinstance(d, int) or d < 1 or not isinstance(table, list) or len(table) != d:
            raise MalformedTable(f"dimension {d!r} does not match table")
    else:
        table = spec
    return TableAlgebra(table, name=name)


def load_table_algebra(path):
    path = Path(path)
    try:
        spec = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read table algebra {path}: {exc}") from exc
    return make_table_algebra(spec, name=f"table:{path}")


def table_to_json(alg):
    return {
        "dimension": alg.dimension,
        "table": [[[str(c) for c in cell] for cell in row] for row in alg.table],
    }


def nonpower_associative_algebra():
    """Two-dimensional algebra with u*u = v, u*v = u, v*u = v, v*v = 0.

    Here (uu)u = v but u(uu) = u, so cubes do not associate.
    """
    u, v = 0, 1
    table = [[[0, 0] for _ in range(2)] for _ in range(2)]
    table[u][u][v] = 1
    table[u][v][u] = 1
    table[v][u][v] = 1
    return TableAlgebra(table, name="table:nonpa2")


# ---------------------------------------------------------------------------
# Matrix rings
# ---------------------------------------------------------------------------


class MatrixRingElement:
    __slots__ = ("rows", "ring")

    def __init__(self, rows, ring):
        self.rows = tuple(tuple(r) for r in rows)
        self.ring = ring

    def __add__(self, other):
        return self.ring.add(self, other)

    def __sub__(self, other):
        return self.ring.sub(self, other)

    def __neg__(self):
        return self.ring.neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.ring.scale(self, other)
        return self.ring.mul(self, other)

    def __eq__(self, other):
        return isinstance(other, MatrixRingElement) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"MatrixRingElement({self.ring.format(self)})"

    def __reduce__(self):
        return (MatrixRingElement, (self.rows, self.ring))


class MatrixRing(Ring):
    """m x m matrices over an inner ring (associative, noncommutative for m >= 2)."""

    def __init__(self, m, inner=QQ):
        if m < 1:
            raise ValueError("matrix ring size must be >= 1")
        self.m = m
        self.inner = inner
        d = inner.descriptor
        self.descriptor = RingDescriptor(
            f"matrixring:{m}:{inner.name}",
            m == 1 and d.is_commutative,
            d.is_associative,
            d.is_associative,
            d.has_unit,
            d.characteristic,
        )

    def _wrap(self, rows):
        return MatrixRingElement(rows, self)

    def _check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise RingMismatch(f"{x!r} is not an element of {self.name}")

    @property
    def zero(self):
        return self._wrap([[self.inner.zero] * self.m for _ in range(self.m)])

    @property
    def one(self):
        z, o = self.inner.zero, self.inner.one
        return self._wrap([[o if i == j else z for j in range(self.m)] for i in range(self.m)])

    def from_int(self, k):
        z, c = self.inner.zero, self.inner.from_int(k)
        return self._wrap([[c if i == j else z for j in range(self.m)] for i in range(self.m)])

    def add(self, x, y):
        self._check(x, y)
        f = self.inner.add
        return self._wrap([[f(a, b) for a, b in zip(r, s)] for r, s in zip(x.rows, y.rows)])

    def sub(self, x, y):
        self._check(x, y)
        f = self.inner.sub
        return self._wrap([[f(a, b) for a, b in zip(r, s)] for r, s in zip(x.rows, y.rows)])

    def neg(self, x):
        f = self.inner.neg
        return self._wrap([[f(a) for a in r] for r in x.rows])

    def scale(self, x, k):
        f = self.inner.scale
        return self._wrap([[f(a, k) for a in r] for r in x.rows])

    def mul(self, x, y):
        self._check(x, y)
        inner, m = self.inner, self.m
        cols = list(zip(*y.rows))
        out = []
        for r in x.rows:
            row = []
            for c in cols:
                acc = inner.mul(r[0], c[0])
                for k in range(1, m):
                    acc = inner.add(acc, inner.mul(r[k], c[k]))
                row.append(acc)
            out.append(row)
        return self._wrap(out)

    def div_by_int(self, x, k):
        self.check_divisor(k)
        f = self.inner.div_by_int
        return self._wrap([[f(a, k) for a in r] for r in x.rows])

    def contains(self, x):
        return (
            isinstance(x, MatrixRingElement)
            and (x.ring is self or x.ring == self)
        )

    def format(self, x):
        return "[" + "; ".join(", ".join(self.inner.format(a) for a in r) for r in x.rows) + "]"

    def encode(self, x):
        return [[self.inner.encode(a) for a in r] for r in x.rows]

    def decode(self, obj):
        if not isinstance(obj, list) or len(obj) != self.m or any(
            not isinstance(r, list) or len(r) != self.m for r in obj
        ):
            raise ParseError(f"{self.name} entry must be a {self.m}x{self.m} nested array")
        return self._wrap([[self.inner.decode(a) for a in r] for r in obj])

    def random_element(self, rng, bound=5):
        return self._wrap(
            [[self.inner.random_element(rng, bound) for _ in range(self.m)] for _ in range(self.m)]
        )

    def __eq__(self, other):
        return isinstance(other, MatrixRing) and self.m == other.m and self.inner == other.inner

    def __hash__(self):
        return hash((self.m, self.inner))


# ---------------------------------------------------------------------------
# Symbolic rings
# ---------------------------------------------------------------------------


class _TermElement:
    """Sparse linear combination of monomial keys with Fraction coefficients."""

    __slots__ = ("terms", "ring")

    def __init__(self, terms, ring):
        self.terms = {k: c for k, c in terms.items() if c}
        self.ring = ring

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, _ZERO) + c
        return type(self)(out, self.ring)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, _ZERO) - c
        return type(self)(out, self.ring)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()}, self.ring)

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)({k: c * other for k, c in self.terms.items()}, self.ring)
        combine = self.ring._combine
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = combine(k1, k2)
                out[k] = out.get(k, _ZERO) + c1 * c2
        return type(self)(out, self.ring)

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"{type(self).__name__}({self.ring.format(self)})"

    def __reduce__(self):
        return (type(self), (self.terms, self.ring))

    def degrees(self):
        return {self.ring.degree(k) for k in self.terms}


class CommutativePolynomial(_TermElement):
    __slots__ = ()


class FreeAlgebraElement(_TermElement):
    __slots__ = ()


class _TermRing(Ring):
    element_class = _TermElement

    def __init__(self, names):
        self.names = tuple(names)

    @property
    def zero(self):
        return self.element_class({}, self)

    @property
    def one(self):
        return self.element_class({self._unit_key(): _ONE}, self)

    def from_int(self, k):
        return self.element_class({self._unit_key(): Fraction(k)}, self)

    def gen(self, i):
        return self.element_class({self._gen_key(i): _ONE}, self)

    def div_by_int(self, x, k):
        self.check_divisor(k)
        return self.element_class({m: c / k for m, c in x.terms.items()}, self)

    def contains(self, x):
        return isinstance(x, self.element_class) and (x.ring is self or x.ring == self)

    def random_element(self, rng, bound=5):
        out = {}
        for i in range(len(self.names)):
            c = rng.randint(-bound, bound)
            if c:
                out[self._gen_key(i)] = Fraction(c)
        return self.element_class(out, self)

    def encode(self, x):
        return [[list(k), str(c)] for k, c in sorted(x.terms.items())]

    def decode(self, obj):
        if not isinstance(obj, list):
            raise ParseError(f"{self.name} element must be a list of [key, coefficient] pairs")
        terms = {}
        for item in obj:
            if not isinstance(item, list) or len(item) != 2 or not isinstance(item[0], list):
                raise ParseError(f"bad term {item!r}")
            key = self._check_key(tuple(item[0]))
            terms[key] = terms.get(key, _ZERO) + parse_rational(item[1])
        return self.element_class(terms, self)

    def __eq__(self, other):
        return type(self) is type(other) and self.names == other.names

    def __hash__(self):
        return hash((type(self).__name__, self.names))


class PolynomialRing(_TermRing):
    """Q[x_1..x_N] in expanded normal form; keys are exponent vectors."""

    element_class = CommutativePolynomial

    def __init__(self, names, name=None):
        super().__init__(names)
        self.descriptor = RingDescriptor(name or f"poly[{','.join(names)}]", True, True, True, True, 0)

    def _unit_key(self):
        return (0,) * len(self.names)

    def _gen_key(self, i):
        return tuple(int(k == i) for k in range(len(self.names)))

    def _check_key(self, key):
        if len(key) != len(self.names) or any(not isinstance(e, int) or e < 0 for e in key):
            raise ParseError(f"bad exponent vector {key!r}")
        return key

    @staticmethod
    def _combine(a, b):
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def degree(key):
        return sum(key)

    def format(self, x):
        if not x.terms:
            return "0"
        parts = []
        for key in sorted(x.terms, key=lambda k: (-sum(k), tuple(-e for e in k))):
            c = x.terms[key]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.names, key) if e
            )
            parts.append(_signed_term(c, mono))
        return _join_terms(parts)


class FreeAlgebra(_TermRing):
    """Free associative algebra Q<a_1..a_N>; keys are words (tuples of letter indices)."""

    element_class = FreeAlgebraElement

    def __init__(self, names, name=None):
        super().__init__(names)
        self.descriptor = RingDescriptor(name or f"free[{','.join(names)}]", False, True, True, True, 0)

    def _unit_key(self):
        return ()

    def _gen_key(self, i):
        return (i,)

    def _check_key(self, key):
        if any(not isinstance(e, int) or not 0 <= e < len(self.names) for e in key):
            raise ParseError(f"bad word {key!r}")
        return key

    @staticmethod
    def _combine(a, b):
        return a + b

    @staticmethod
    def degree(key):
        return len(key)

    def format(self, x):
        if not x.terms:
            return "0"
        parts = []
        for key in sorted(x.terms, key=lambda k: (-len(k), k)):
            parts.append(_signed_term(x.terms[key], "*".join(self.names[i] for i in key)))
        return _join_terms(parts)


class FreeMagmaElement(_TermElement):
    __slots__ = ()


class FreeMagmaAlgebra(_TermRing):
    """Free nonassociative unital algebra; keys are bracketed words.

    A key is ``()`` (the unit), a letter index, or a pair ``(left, right)``.
    """

    element_class = FreeMagmaElement
    power_associativity_verified = False

    def __init__(self, names, name=None):
        super().__init__(names)
        self.descriptor = RingDescriptor(name or f"magma[{','.join(names)}]", False, False, False, True, 0)

    def _unit_key(self):
        return ()

    def _gen_key(self, i):
        return i

    def _check_key(self, key):
        raise ParseError("free magma elements have no file encoding")

    @staticmethod
    def _combine(a, b):
        if a == ():
            return b
        if b == ():
            return a
        return (a, b)

    @classmethod
    def degree(cls, key):
        if key == ():
            return 0
        if isinstance(key, int):
            return 1
        return cls.degree(key[0]) + cls.degree(key[1])

    def _word(self, key):
        if key == ():
            return ""
        if isinstance(key, int):
            return self.names[key]
        return f"({self._word(key[0])}*{self._word(key[1])})"

    def format(self, x):
        if not x.terms:
            return "0"
        parts = [_signed_term(c, self._word(k)) for k, c in sorted(x.terms.items(), key=lambda kc: repr(kc[0]))]
        return _join_terms(parts)

    def encode(self, x):
        raise ParseError("free magma elements have no file encoding")


def _signed_term(c, mono):
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    return f"{c}*{mono}"


def _join_terms(parts):
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


SYMBOLIC_CAP = {True: 4, False: 3}


def symbolic_names(n, prefix):
    return [f"{prefix}{i + 1}{j + 1}" for i in range(n) for j in range(n)]


def polynomial_ring(n):
    return PolynomialRing(symbolic_names(n, "x"), name=f"poly:{n}")


def free_algebra(n):
    return FreeAlgebra(symbolic_names(n, "a"), name=f"free:{n}")


def free_symbolic_matrix(n, commutative=True):
    """The generic matrix (x_ij) over Q[x_ij], or (a_ij) over the free algebra."""
    cap = SYMBOLIC_CAP[bool(commutative)]
    if not 1 <= n <= cap:
        raise OrderTooLarge(f"symbolic order must be in 1..{cap}, got {n}")
    ring = polynomial_ring(n) if commutative else free_algebra(n)
    return Matrix(ring, [[ring.gen(i * n + j) for j in range(n)] for i in range(n)])


QUATERNIONS = QuaternionAlgebra()
OCTONIONS = OctonionAlgebra()
