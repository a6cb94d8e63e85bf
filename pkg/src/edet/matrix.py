"""Dense square matrices over an arbitrary ring."""

from __future__ import annotations

from .errors import DimensionMismatch, RingMismatch


class Matrix:
    """Immutable n x n matrix of ring values, row-major.

    ``rows[i][j]`` is the entry a_ij (0-based). All entries must belong to ``ring``.
    """

    __slots__ = ("ring", "rows", "n")

    def __init__(self, ring, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise DimensionMismatch("matrix must have order >= 1")
        for r in rows:
            if len(r) != n:
                raise DimensionMismatch(f"matrix is not square: row of length {len(r)} in order {n}")
            for x in r:
                if not ring.contains(x):
                    raise RingMismatch(f"entry {x!r} is not an element of {ring.name}")
        self.ring = ring
        self.rows = rows
        self.n = n

    @classmethod
    def from_ints(cls, ring, rows):
        return cls(ring, [[ring.from_int(x) for x in r] for r in rows])

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring, n):
        return cls(ring, [[ring.zero] * n for _ in range(n)])

    @classmethod
    def random(cls, ring, n, rng, bound=5):
        return cls(ring, [[ring.random_element(rng, bound) for _ in range(n)] for _ in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(self.ring.format(x) for x in r) for r in self.rows)
        return f"Matrix[{self.ring.name}]({body})"

    def with_ring(self, ring):
        """Same entries viewed through another ring object (e.g. an instrumented wrapper)."""
        m = object.__new__(Matrix)
        m.ring, m.rows, m.n = ring, self.rows, self.n
        return m

    def transpose(self):
        return Matrix(self.ring, zip(*self.rows))

    def swap_rows(self, i, j):
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return Matrix(self.ring, rows)

    def swap_cols(self, i, j):
        return self.transpose().swap_rows(i, j).transpose()

    def with_row(self, i, row):
        rows = list(self.rows)
        rows[i] = tuple(row)
        return Matrix(self.ring, rows)

    def with_col(self, j, col):
        return self.transpose().with_row(j, col).transpose()

    def minor(self, i, j):
        """Delete row i and column j."""
        return Matrix(
            self.ring,
            [[x for c, x in enumerate(r) if c != j] for rr, r in enumerate(self.rows) if rr != i],
        )

    def matmul(self, other):
        if other.n != self.n:
            raise DimensionMismatch("orders differ")
        ring = self.ring
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ring.mul(self.rows[i][0], other.rows[0][j])
                for k in range(1, n):
                    acc = ring.add(acc, ring.mul(self.rows[i][k], other.rows[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix(ring, out)
