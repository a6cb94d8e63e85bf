"""Operation counting, property suites and counterexample search."""

from __future__ import annotations

import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import factorial

from . import engines
from .combinatorics import rank_ranges
from .errors import InvalidPairing, SearchExhausted
from .matrix import Matrix
from .rings import Ring

COUNTERS = ("additions", "subtractions", "multiplications", "divisions", "mul_in_pow", "mul_outside_pow")


class CountingRing(Ring):
    """Transparent wrapper that tallies ring operations on an inner ring.

    Multiplications are attributed to the innermost active tag: those made while
    a ``pow`` (or ``ass``) region is open count as ``mul_in_pow``.
    """

    def __init__(self, inner):
        self.inner = inner
        self.descriptor = inner.descriptor
        self.power_associativity_verified = inner.power_associativity_verified
        self.counts = dict.fromkeys(COUNTERS, 0)
        self._tags = []

    def __getstate__(self):
        return {"inner": self.inner, "counts": dict(self.counts)}

    def __setstate__(self, state):
        self.__init__(state["inner"])
        self.counts.update(state["counts"])

    # instrumentation ---------------------------------------------------------
    def snapshot(self):
        return dict(self.counts)

    def absorb(self, snap, since=None):
        """Add the operations recorded in ``snap`` beyond the baseline ``since``."""
        for k in COUNTERS:
            self.counts[k] += snap[k] - (since[k] if since else 0)

    def reset(self):
        self.counts = dict.fromkeys(COUNTERS, 0)

    def tag(self, label):
        ring = self

        class _Tag:
            def __enter__(self):
                ring._tags.append(label)

            def __exit__(self, *exc):
                ring._tags.pop()

        return _Tag()

    # ring contract -----------------------------------------------------------
    @property
    def zero(self):
        return self.inner.zero

    @property
    def one(self):
        return self.inner.one

    def from_int(self, k):
        return self.inner.from_int(k)

    def add(self, x, y):
        self.counts["additions"] += 1
        return self.inner.add(x, y)

    def sub(self, x, y):
        self.counts["subtractions"] += 1
        return self.inner.sub(x, y)

    def neg(self, x):
        self.counts["subtractions"] += 1
        return self.inner.neg(x)

    def mul(self, x, y):
        self.counts["multiplications"] += 1
        if self._tags:
            self.counts["mul_in_pow"] += 1
        else:
            self.counts["mul_outside_pow"] += 1
        return self.inner.mul(x, y)

    def scale(self, x, k):
        return self.inner.scale(x, k)

    def check_divisor(self, k):
        self.inner.check_divisor(k)

    def div_by_int(self, x, k):
        self.counts["divisions"] += 1
        return self.inner.div_by_int(x, k)

    def equal(self, x, y):
        return self.inner.equal(x, y)

    def contains(self, x):
        return self.inner.contains(x)

    def format(self, x):
        return self.inner.format(x)

    def encode(self, x):
        return self.inner.encode(x)

    def decode(self, obj):
        return self.inner.decode(obj)

    def random_element(self, rng, bound=5):
        return self.inner.random_element(rng, bound)

    def __eq__(self, other):
        return isinstance(other, CountingRing) and self.inner == other.inner

    def __hash__(self):
        return hash(("counting", self.inner))


# ---------------------------------------------------------------------------
# operation counts
# ---------------------------------------------------------------------------


def predicted_additions(n):
    return (3 * n - 1) * factorial(n)


def predicted_multiplications(n):
    """Repeated-squaring estimate n! * n * ceil(log2 n)."""
    return factorial(n) * n * math.ceil(math.log2(n)) if n > 1 else 0


def loose_multiplications(n):
    """(n+1)! * ln n, a looser real-valued reference curve."""
    return factorial(n + 1) * math.log(n)


def _ratio(measured, predicted):
    return measured / predicted if predicted else float("nan")


@dataclass
class OpCountReport:
    n: int
    method: str
    additions: int
    subtractions: int
    multiplications: int
    divisions: int
    mul_in_pow: int
    mul_outside_pow: int
    predicted_additions: int
    predicted_multiplications: int
    loose_multiplications: float

    @property
    def addition_ratio(self):
        return _ratio(self.additions + self.subtractions, self.predicted_additions)

    @property
    def multiplication_ratio(self):
        return _ratio(self.multiplications, self.predicted_multiplications)

    @property
    def loose_multiplication_ratio(self):
        return _ratio(self.multiplications, self.loose_multiplications)

    def to_json(self):
        """All counts as decimal strings; ratios to six places."""
        out = {k: str(v) for k, v in asdict(self).items() if k not in ("n", "method", "loose_multiplications")}
        out["n"] = str(self.n)
        out["method"] = self.method
        out["loose_multiplications"] = f"{self.loose_multiplications:.6f}"
        out["addition_ratio"] = f"{self.addition_ratio:.6f}"
        out["multiplication_ratio"] = f"{self.multiplication_ratio:.6f}"
        out["loose_multiplication_ratio"] = f"{self.loose_multiplication_ratio:.6f}"
        return out


def measure(method, A, gamma=None, workers=1):
    """Run ``method`` on A under a :class:`CountingRing`; return (value, report)."""
    engines.check_admissible(method, A)
    ring = CountingRing(A.ring)
    counted = A.with_ring(ring)
    value = engines.determinant(counted, method, gamma=gamma, backend="generic", workers=workers)
    c = ring.counts
    n = A.n
    report = OpCountReport(
        n=n,
        method=method,
        additions=c["additions"],
        subtractions=c["subtractions"],
        multiplications=c["multiplications"],
        divisions=c["divisions"],
        mul_in_pow=c["mul_in_pow"],
        mul_outside_pow=c["mul_outside_pow"],
        predicted_additions=predicted_additions(n),
        predicted_multiplications=predicted_multiplications(n),
        loose_multiplications=loose_multiplications(n),
    )
    return value, report


# ---------------------------------------------------------------------------
# property suites
# ---------------------------------------------------------------------------


@dataclass
class PropertyReport:
    property_id: str
    ring: str
    n: int
    trials: int
    failures: int = 0
    asserted: bool = True  # False for clauses reported but not expected to hold
    witness: dict | None = None

    @property
    def ok(self):
        return self.failures == 0 if self.asserted else True

    def to_json(self):
        d = asdict(self)
        d["n"] = str(self.n)
        d["trials"] = str(self.trials)
        d["failures"] = str(self.failures)
        d["ok"] = self.ok
        return d


def trial_rng(seed, *tags):
    return random.Random(":".join(str(t) for t in (seed, *tags)))


def _encode_matrix(A):
    return [[A.ring.encode(x) for x in r] for r in A.rows]


def _record(report, witness):
    report.failures += 1
    if report.witness is None:
        report.witness = witness


def _eq(ring, x, y):
    return ring.equal(x, y)


def _ring_clauses(det, A, rng, report_by_clause):
    """Clauses a-e for one random matrix; ``det`` is the engine under test."""
    ring, n = A.ring, A.n
    d = det(A)

    # a) additivity in one row and in one column
    r = rng.randrange(n)
    u = [ring.random_element(rng) for _ in range(n)]
    v = [ring.random_element(rng) for _ in range(n)]
    s = [ring.add(x, y) for x, y in zip(u, v)]
    Au, Av, As = A.with_row(r, u), A.with_row(r, v), A.with_row(r, s)
    lhs, rhs = det(As), ring.add(det(Au), det(Av))
    if not _eq(ring, lhs, rhs):
        _record(report_by_clause["a"], {"kind": "row", "index": r, "A_u": _encode_matrix(Au),
                                        "A_v": _encode_matrix(Av), "edet(A_u+v)": ring.encode(lhs),
                                        "edet(A_u)+edet(A_v)": ring.encode(rhs)})
    Cu, Cv, Cs = A.with_col(r, u), A.with_col(r, v), A.with_col(r, s)
    lhs, rhs = det(Cs), ring.add(det(Cu), det(Cv))
    if not _eq(ring, lhs, rhs):
        _record(report_by_clause["a"], {"kind": "column", "index": r, "A_u": _encode_matrix(Cu),
                                        "A_v": _encode_matrix(Cv), "edet(A_u+v)": ring.encode(lhs),
                                        "edet(A_u)+edet(A_v)": ring.encode(rhs)})

    # b) antisymmetry under row and column swaps
    if n >= 2:
        i, j = rng.sample(range(n), 2)
        for kind, B in (("row", A.swap_rows(i, j)), ("column", A.swap_cols(i, j))):
            if not _eq(ring, det(B), ring.neg(d)):
                _record(report_by_clause["b"], {"kind": kind, "swap": [i, j], "A": _encode_matrix(A)})

    # c) zero row / zero column
    zeros = [ring.zero] * n
    for kind, B in (("row", A.with_row(r, zeros)), ("column", A.with_col(r, zeros))):
        if not ring.is_zero(det(B)):
            _record(report_by_clause["c"], {"kind": kind, "index": r, "A": _encode_matrix(B)})

    # d) two equal rows / columns
    if n >= 2:
        i, j = rng.sample(range(n), 2)
        for kind, B in (("row", A.with_row(j, A.rows[i])), ("column", A.with_col(j, [row[i] for row in A.rows]))):
            if not ring.is_zero(det(B)):
                _record(report_by_clause["d"], {"kind": kind, "copy": [i, j], "A": _encode_matrix(B)})

    # e) transpose invariance
    if not _eq(ring, det(A.transpose()), d):
        _record(report_by_clause["e"], {"A": _encode_matrix(A)})


def _clause_suite(name, det, ring, n, trials, seed, asserted):
    reports = {
        c: PropertyReport(f"{name}.{c}", ring.name, n, len(trials), asserted=c in asserted)
        for c in "abcde"
    }
    for t in trials:
        rng = trial_rng(seed, name, ring.name, n, t)
        A = Matrix.random(ring, n, rng)
        _ring_clauses(det, A, rng, reports)
    return list(reports.values())


def _suite_associative_clauses(ring, n, trials, seed):
    if not ring.descriptor.is_associative:
        raise InvalidPairing("the lemma3 suite needs an associative ring")
    engines.check_admissible("b5", Matrix.zeros(ring, n))
    return _clause_suite("lemma3", engines.power_sum_det, ring, n, trials, seed, "abcde")


def _suite_nonassociative_clauses(ring, n, trials, seed):
    engines.check_admissible("nonassoc", Matrix.zeros(ring, n))
    # polyadditivity (a) is reported but not asserted
    return _clause_suite("lemma6", engines.nonassoc_edet, ring, n, trials, seed, "bcde")


def _suite_sdet(ring, n, trials, seed):
    engines.check_admissible("sdet", Matrix.zeros(ring, n))
    engines.check_admissible("b5", Matrix.zeros(ring, n))
    eq = PropertyReport("lemma4.sdet=edet", ring.name, n, len(trials))
    for t in trials:
        A = Matrix.random(ring, n, trial_rng(seed, "lemma4", ring.name, n, t))
        lhs, rhs = engines.sdet_barvinok(A), engines.power_sum_det(A)
        if not _eq(ring, lhs, rhs):
            _record(eq, {"A": _encode_matrix(A), "sdet": ring.encode(lhs), "edet": ring.encode(rhs)})
    out = [eq]
    if ring.descriptor.has_unit:
        unit = PropertyReport("lemma4.edet(I)=e", ring.name, n, 1 if 0 in trials else 0)
        if 0 in trials and not _eq(ring, engines.power_sum_det(Matrix.identity(ring, n)), ring.one):
            _record(unit, {"n": n})
        out.append(unit)
    return out


def _suite_residuals(ring, n, trials, seed):
    engines.check_admissible("leibniz", Matrix.zeros(ring, n))
    rep = PropertyReport("corollary1.residual=0", ring.name, n, len(trials))
    for t in trials:
        A = Matrix.random(ring, n, trial_rng(seed, "corollary1", ring.name, n, t))
        for e in range(1, n):
            res = engines.identity_residual(A, e)
            if not ring.is_zero(res):
                _record(rep, {"A": _encode_matrix(A), "t": e, "residual": ring.encode(res)})
    return [rep]


def random_singular(ring, n, rng, bound=5):
    """Rank-deficient matrix: one row is an integer combination of the others, rows shuffled."""
    rows = [[ring.random_element(rng, bound) for _ in range(n)] for _ in range(n - 1)]
    dep = [ring.zero] * n
    for r in rows:
        c = rng.randint(-3, 3)
        dep = [ring.add(x, ring.scale(y, c)) for x, y in zip(dep, r)]
    rows.append(dep)
    rng.shuffle(rows)
    return Matrix(ring, rows)


def random_nonsingular(ring, n, rng, bound=5):
    while True:
        A = Matrix.random(ring, n, rng, bound)
        if not ring.is_zero(engines.leibniz_det(A)):
            return A


def _suite_singularity(ring, n, trials, seed):
    engines.check_admissible("leibniz", Matrix.zeros(ring, n))
    rep = PropertyReport("corollary2.criterion", ring.name, n, 2 * len(trials))
    for t in trials:
        rng = trial_rng(seed, "corollary2", ring.name, n, t)
        for A in (random_singular(ring, n, rng), random_nonsingular(ring, n, rng)):
            crit = engines.singularity_check(A)
            truth = ring.is_zero(engines.leibniz_det(A))
            if crit != truth:
                _record(rep, {"A": _encode_matrix(A), "criterion": crit, "det_is_zero": truth})
    return [rep]


SUITES = {
    "lemma3": _suite_associative_clauses,
    "lemma4": _suite_sdet,
    "lemma6": _suite_nonassociative_clauses,
    "corollary1": _suite_residuals,
    "corollary2": _suite_singularity,
}


def _run_block(suite, ring, n, lo, hi, seed):
    return SUITES[suite](ring, n, range(lo, hi), seed)


def _merge_reports(blocks):
    merged = [PropertyReport(r.property_id, r.ring, r.n, 0, 0, r.asserted) for r in blocks[0]]
    for block in blocks:
        for m, r in zip(merged, block):
            m.trials += r.trials
            m.failures += r.failures
            if m.witness is None and r.witness is not None:
                m.witness = r.witness
    return merged


def run_property_suite(suite, ring, n, trials=200, seed=0, workers=1):
    """Run one suite; trial t is seeded from (seed, suite, ring, n, t), so the
    result is the same for any worker count."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if workers <= 1:
        return SUITES[suite](ring, n, range(trials), seed)
    ranges = [r for r in rank_ranges(trials, workers) if r[1] > r[0]]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        blocks = list(
            pool.map(_run_block, *zip(*[(suite, ring, n, lo, hi, seed) for lo, hi in ranges]))
        )
    return _merge_reports(blocks)


# ---------------------------------------------------------------------------
# counterexample search
# ---------------------------------------------------------------------------

CLAIMS = ("multiplicativity", "laplace", "polyadditivity-nonassoc")


@dataclass
class Witness:
    claim: str
    ring: str
    n: int
    seed: int
    trial: int
    matrices: dict = field(default_factory=dict)
    lhs: str = ""
    rhs: str = ""

    def to_json(self):
        d = asdict(self)
        d["n"] = str(self.n)
        d["seed"] = str(self.seed)
        d["trial"] = str(self.trial)
        return d


def _check_pairing(claim, ring, n):
    if claim not in CLAIMS:
        raise InvalidPairing(f"unknown claim {claim!r}")
    if claim == "polyadditivity-nonassoc" and ring.descriptor.is_associative:
        raise InvalidPairing("polyadditivity-nonassoc needs a nonassociative ring")
    if claim == "laplace" and n < 2:
        raise InvalidPairing("Laplace expansion needs n >= 2")


def _format(ring, x):
    return ring.format(x)


def search_counterexample(claim, ring, n, seed=0, max_trials=1000):
    """First random witness refuting ``claim`` for the ring's edet; raises SearchExhausted."""
    _check_pairing(claim, ring, n)
    det = engines.edet
    for t in range(max_trials):
        rng = trial_rng(seed, claim, ring.name, n, t)
        A = Matrix.random(ring, n, rng)
        if claim == "multiplicativity":
            B = Matrix.random(ring, n, rng)
            lhs = det(A.matmul(B))
            rhs = ring.mul(det(A), det(B))
            mats = {"A": _encode_matrix(A), "B": _encode_matrix(B)}
        elif claim == "laplace":
            lhs = det(A)
            rhs = engines.laplace_first_row(A, det)
            mats = {"A": _encode_matrix(A)}
        else:
            r = rng.randrange(n)
            u = [ring.random_element(rng) for _ in range(n)]
            v = [ring.random_element(rng) for _ in range(n)]
            s = [ring.add(x, y) for x, y in zip(u, v)]
            Au, Av, As = A.with_row(r, u), A.with_row(r, v), A.with_row(r, s)
            lhs = det(As)
            rhs = ring.add(det(Au), det(Av))
            mats = {"A_u": _encode_matrix(Au), "A_v": _encode_matrix(Av), "row": r}
        if not ring.equal(lhs, rhs):
            return Witness(claim, ring.name, n, seed, t, mats, _format(ring, lhs), _format(ring, rhs))
    raise SearchExhausted(claim, max_trials)


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True)
