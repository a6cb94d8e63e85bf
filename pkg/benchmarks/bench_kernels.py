"""Time the compiled integer kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--max-n 8] [--repeat 3]

Both backends run the same rank range on the same integer matrix; the script
checks that their results agree before reporting timings.
"""

import argparse
import random
import sys
import timeit
from math import factorial

from edet.kernels import _pykernels as pure
from edet.kernels import compiled


def cases(B, n):
    total = factorial(n)
    gammas = [random.Random(k).randint(-3, 3) for k in range(total)]
    return {
        "leibniz": lambda k: k.leibniz(B, 0, total),
        "power_blocks": lambda k: k.power_blocks(B, n, 2, 0, total),
        "polarized": lambda k: k.polarized(B, gammas, 0, total),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--bound", type=int, default=9, help="entry magnitude; large values push the kernels onto their big-integer path")
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled kernel not available; build with `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    rng = random.Random(0)
    print(f"{'kernel':<13} {'n':>2} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n in range(3, args.max_n + 1):
        B = [[rng.randint(-args.bound, args.bound) for _ in range(n)] for _ in range(n)]
        for name, call in cases(B, n).items():
            if name == "polarized" and n > 7:
                continue
            if call(pure) != call(compiled):
                print(f"{name} n={n}: backends disagree", file=sys.stderr)
                return 1
            tp = min(timeit.repeat(lambda: call(pure), number=1, repeat=args.repeat))
            tc = min(timeit.repeat(lambda: call(compiled), number=1, repeat=args.repeat))
            print(f"{name:<13} {n:>2} {tp:>10.4f} {tc:>10.4f} {tp / tc:>8.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
