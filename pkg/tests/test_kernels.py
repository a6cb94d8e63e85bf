import os
import random
import subprocess
import sys
from math import factorial

import pytest

from edet import kernels
from edet.kernels import _pykernels as pure

from oracles import brute_blocks, brute_leibniz

compiled = kernels.compiled
needs_ext = pytest.mark.skipif(compiled is None, reason="compiled kernel not built")


def rand_int_matrix(rng, n, bound):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


@pytest.mark.parametrize("n", range(1, 6))
def test_pure_kernels_match_oracles(n):
    rng = random.Random(n)
    for _ in range(10):
        B = rand_int_matrix(rng, n, 6)
        total = factorial(n)
        assert pure.leibniz(B, 0, total) == brute_leibniz(B)
        g = rng.randint(-3, 3)
        assert pure.power_blocks(B, n, g, 0, total) == brute_blocks(B, n, g)


@needs_ext
@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("bound", [5, 10**6, 10**30])
def test_compiled_matches_pure(n, bound):
    # small bounds take the 64-bit path, huge ones the Python-integer path
    rng = random.Random(1000 * n + len(str(bound)))
    total = factorial(n)
    for _ in range(5):
        B = rand_int_matrix(rng, n, bound)
        cuts = sorted({0, total, rng.randint(0, total), rng.randint(0, total)})
        for lo, hi in zip(cuts, cuts[1:]):
            assert compiled.leibniz(B, lo, hi) == pure.leibniz(B, lo, hi)
            for e in range(1, n + 1):
                g = rng.randint(-bound, bound)
                assert compiled.power_blocks(B, e, g, lo, hi) == pure.power_blocks(B, e, g, lo, hi)
            gammas = [rng.randint(-bound, bound) for _ in range(hi - lo)]
            assert compiled.polarized(B, gammas, lo, hi) == pure.polarized(B, gammas, lo, hi)


@needs_ext
def test_compiled_overflow_boundary():
    # entries near the 64-bit limit must not wrap
    big = 2**40
    B = [[big, 1], [1, big]]
    assert compiled.leibniz(B, 0, 2) == big * big - 1
    assert compiled.power_blocks(B, 2, 0, 0, 2) == pure.power_blocks(B, 2, 0, 0, 2)


def test_active_backend_reported():
    assert kernels.BACKEND in ("cython", "python")
    assert kernels.active is (compiled if compiled is not None else pure)


def test_pure_fallback_selected_by_environment():
    env = dict(os.environ, EDET_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from edet import kernels; print(kernels.BACKEND, kernels.active.__name__)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.split() == ["python", "edet.kernels._pykernels"]
