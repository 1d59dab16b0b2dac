"""Time the compiled cyclotomic kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--levels 15 60 105 247]

Both backends get identical inputs; results are checked for equality before
timing is reported.
"""

import argparse
import random
import sys
import timeit

from galmod import _pykernels
from galmod.cyclo import reduction_table
from galmod.ntheory import totient

try:
    from galmod import _ckernels
except ImportError:
    _ckernels = None


def inputs(N, rng, bits):
    n = totient(N)
    a = [rng.randint(-2 ** bits, 2 ** bits) for _ in range(n)]
    b = [rng.randint(-2 ** bits, 2 ** bits) for _ in range(n)]
    return a, b, reduction_table(N)


def cases(N, rng, bits):
    a, b, table = inputs(N, rng, bits)
    k = next(k for k in range(2, N) if all(k % p for p in range(2, k + 1) if N % p == 0)) if N > 2 else 1
    return {
        "mulmod": lambda m: m.mulmod(a, b, table, N),
        "galois_map": lambda m: m.galois_map(a, k, table, N),
        "reduce_terms": lambda m: m.reduce_terms(a + b, table, N),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--levels", type=int, nargs="*", default=[15, 60, 105, 247])
    p.add_argument("--bits", type=int, nargs="*", default=[20, 200])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; only the fallback is available")
        return 1
    rng = random.Random(0)
    print("%-13s %5s %5s %12s %12s %8s" % ("kernel", "N", "bits", "python (s)", "cython (s)", "speedup"))
    for N in args.levels:
        for bits in args.bits:
            for name, fn in cases(N, rng, bits).items():
                if fn(_pykernels) != fn(_ckernels):
                    print("backends disagree on %s at N=%d" % (name, N))
                    return 1
                number = max(1, 2000 // totient(N))
                tp = min(timeit.repeat(lambda: fn(_pykernels), number=number, repeat=args.repeat)) / number
                tc = min(timeit.repeat(lambda: fn(_ckernels), number=number, repeat=args.repeat)) / number
                print("%-13s %5d %5d %12.2e %12.2e %7.1fx" % (name, N, bits, tp, tc, tp / tc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
