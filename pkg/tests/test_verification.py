import json
import pickle
from math import factorial

import pytest

from edet import engines
from edet.algebras import OCTONIONS, QUATERNIONS, MatrixRing
from edet.errors import InvalidPairing, SearchExhausted
from edet.matrix import Matrix
from edet.rings import QQ, PrimeField
from edet.verification import (
    CountingRing,
    measure,
    random_nonsingular,
    random_singular,
    run_property_suite,
    search_counterexample,
    trial_rng,
)


def binary_pow_cost(e):
    return e.bit_length() - 1 + bin(e).count("1") - 1


@pytest.mark.parametrize("n", range(2, 7))
def test_b5_counts_are_exact(n, rng):
    A = Matrix.random(QQ, n, rng)
    value, rep = measure("b5", A)
    assert value == engines.leibniz_det(A)
    # n-1 adds and n leave-one-out subtractions per permutation, n+1 accumulations
    # (the first term of each of the four blocks is free), then 3 to combine blocks
    assert rep.additions + rep.subtractions == 3 * n * factorial(n) - 1
    assert rep.multiplications == (n + 1) * factorial(n) * binary_pow_cost(n)
    assert rep.mul_in_pow == rep.multiplications
    assert rep.mul_outside_pow == 0
    assert rep.divisions == 1


def test_counts_independent_of_workers(rng):
    A = Matrix.random(QQ, 5, rng)
    _, one = measure("b5", A, workers=1)
    _, four = measure("b5", A, workers=4)
    assert one == four


def test_leibniz_multiplications_are_outside_pow(rng):
    A = Matrix.random(QQ, 4, rng)
    _, rep = measure("leibniz", A)
    assert rep.mul_in_pow == 0
    assert rep.mul_outside_pow == factorial(4) * 3


def test_nonassoc_multiplications_tagged(nonpa, rng):
    A = Matrix.random(nonpa, 3, rng)
    _, rep = measure("nonassoc", A)
    assert rep.mul_outside_pow == 0 and rep.mul_in_pow > 0


def test_counting_ring_pickles_with_counts():
    R = CountingRing(QQ)
    R.add(QQ.one, QQ.one)
    S = pickle.loads(pickle.dumps(R))
    assert S.counts["additions"] == 1 and S == R


def test_report_json_is_strings(rng):
    _, rep = measure("b5", Matrix.random(QQ, 3, rng))
    d = rep.to_json()
    assert all(isinstance(v, str) for v in d.values())
    json.dumps(d)


@pytest.mark.parametrize("ring", [QUATERNIONS, MatrixRing(2)], ids=["quaternion", "matrixring2"])
def test_associative_clause_suite_passes(ring):
    reports = run_property_suite("lemma3", ring, 2, trials=20, seed=1)
    assert [r.property_id for r in reports] == [f"lemma3.{c}" for c in "abcde"]
    assert all(r.ok and r.failures == 0 for r in reports)


def test_associative_clause_suite_rejects_nonassociative():
    with pytest.raises(InvalidPairing):
        run_property_suite("lemma3", OCTONIONS, 2, trials=1)


def test_nonassociative_suite_reports_additivity_without_asserting(nonpa):
    reports = run_property_suite("lemma6", nonpa, 2, trials=20, seed=2)
    assert {r.property_id: r.asserted for r in reports}["lemma6.a"] is False
    assert all(r.ok for r in reports)


def test_sdet_residual_and_singularity_suites():
    assert all(r.ok for r in run_property_suite("lemma4", QUATERNIONS, 2, trials=10))
    assert all(r.ok for r in run_property_suite("corollary1", QQ, 4, trials=10))
    assert all(r.ok for r in run_property_suite("corollary2", PrimeField(101), 3, trials=10))


def test_suite_reports_are_worker_independent():
    one = run_property_suite("lemma3", QUATERNIONS, 2, trials=12, seed=5, workers=1)
    four = run_property_suite("lemma3", QUATERNIONS, 2, trials=12, seed=5, workers=4)
    assert [r.to_json() for r in one] == [r.to_json() for r in four]


def test_random_singular_and_nonsingular():
    for t in range(30):
        rng = trial_rng(0, "sing", t)
        assert engines.leibniz_det(random_singular(QQ, 4, rng)) == 0
        assert engines.leibniz_det(random_nonsingular(QQ, 4, rng)) != 0


def test_failures_are_detected_and_witnessed():
    # a deliberately wrong engine must be caught with a witness
    from edet.verification import PropertyReport, _ring_clauses

    reports = {c: PropertyReport(c, "rational", 3, 1) for c in "abcde"}
    wrong = lambda A: engines.power_sum_det(A) + 1  # noqa: E731
    _ring_clauses(wrong, Matrix.random(QQ, 3, trial_rng(0)), trial_rng(1), reports)
    assert reports["a"].failures and reports["c"].failures and reports["a"].witness


def test_search_finds_multiplicativity_witness():
    w = search_counterexample("multiplicativity", QUATERNIONS, 2, seed=0, max_trials=1000)
    A = Matrix(QUATERNIONS, [[QUATERNIONS.decode(x) for x in r] for r in w.matrices["A"]])
    B = Matrix(QUATERNIONS, [[QUATERNIONS.decode(x) for x in r] for r in w.matrices["B"]])
    assert engines.edet(A.matmul(B)) != QUATERNIONS.mul(engines.edet(A), engines.edet(B))


def test_search_finds_laplace_witness():
    w = search_counterexample("laplace", MatrixRing(2), 3, max_trials=1000)
    assert w.lhs != w.rhs


def test_search_exhausted_over_commutative_ring():
    with pytest.raises(SearchExhausted) as exc:
        search_counterexample("multiplicativity", QQ, 2, max_trials=20)
    assert exc.value.trials == 20


def test_search_pairing_errors():
    with pytest.raises(InvalidPairing):
        search_counterexample("polyadditivity-nonassoc", QQ, 2)
    with pytest.raises(InvalidPairing):
        search_counterexample("laplace", QQ, 1)
    with pytest.raises(InvalidPairing):
        search_counterexample("associativity", QQ, 2)
