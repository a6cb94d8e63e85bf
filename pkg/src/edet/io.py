"""Ring names and the JSON matrix file format.

A matrix file looks like::

    {"ring": "rational", "n": 2, "entries": [["1", "2"], ["3", "4"]]}

Entries use the ring's string encoding: ``"p/q"`` or ``"p"`` for rationals and
residues, coefficient arrays for quaternions, octonions and table algebras,
nested arrays for matrix-ring entries, and ``[key, coefficient]`` term lists for
the symbolic rings.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebras import (
    OCTONIONS,
    QUATERNIONS,
    MatrixRing,
    free_algebra,
    load_table_algebra,
    polynomial_ring,
)
from .errors import ParseError
from .matrix import Matrix
from .rings import QQ, PrimeField


def _positive_int(text, what):
    try:
        v = int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}") from None
    if v < 1:
        raise ParseError(f"{what} must be positive, got {v}")
    return v


def ring_from_name(name: str):
    """Resolve a ring name such as ``rational``, ``mod:7`` or ``matrixring:2:mod:5``."""
    if name == "rational":
        return QQ
    if name == "quaternion":
        return QUATERNIONS
    if name == "octonion":
        return OCTONIONS
    head, _, rest = name.partition(":")
    if head == "mod" and rest:
        p = _positive_int(rest, "modulus")
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if head == "table" and rest:
        return load_table_algebra(rest)
    if head == "matrixring" and rest:
        m, _, inner = rest.partition(":")
        return MatrixRing(_positive_int(m, "matrix ring size"), ring_from_name(inner or "rational"))
    if head == "poly" and rest:
        return polynomial_ring(_positive_int(rest, "order"))
    if head == "free" and rest:
        return free_algebra(_positive_int(rest, "order"))
    raise ParseError(f"unknown ring {name!r}")


def matrix_from_json(obj) -> Matrix:
    if not isinstance(obj, dict) or not {"ring", "entries"} <= obj.keys():
        raise ParseError("matrix file needs 'ring' and 'entries'")
    ring = ring_from_name(obj["ring"])
    entries = obj["entries"]
    if not isinstance(entries, list) or not entries:
        raise ParseError("'entries' must be a non-empty n x n array")
    n = obj.get("n", len(entries))
    if n != len(entries) or any(not isinstance(r, list) or len(r) != n for r in entries):
        raise ParseError(f"'entries' is not {n} x {n}")
    return Matrix(ring, [[ring.decode(x) for x in r] for r in entries])


def matrix_to_json(A: Matrix) -> dict:
    return {
        "ring": A.ring.name,
        "n": A.n,
        "entries": [[A.ring.encode(x) for x in r] for r in A.rows],
    }


def load_matrix(path) -> Matrix:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read matrix file {path}: {exc}") from exc
    return matrix_from_json(obj)


def save_matrix(A: Matrix, path) -> None:
    Path(path).write_text(json.dumps(matrix_to_json(A), indent=2) + "\n")


def parse_value(ring, text: str):
    """A ring value from a command-line string (JSON for structured encodings)."""
    text = text.strip()
    if text.startswith("["):
        try:
            return ring.decode(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad value {text!r}: {exc}") from exc
    return ring.decode(text)
