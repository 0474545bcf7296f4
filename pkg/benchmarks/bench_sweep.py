"""Time the valuation sweep on each available backend.

    python benchmarks/bench_sweep.py --limit 1500 --primes 2 3 5 7
"""
import argparse
import time

from chromaloc import kernels
from chromaloc.padic import valuation_sweep


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=int, default=1500)
    parser.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"limit={args.limit} pairs_per_prime={(args.limit + 1) * (args.limit + 2) // 2}")
    print(f"{'p':>4} " + " ".join(f"{name:>12}" for name in kernels.AVAILABLE) + "   speedup")
    for p in args.primes:
        timings = {}
        results = set()
        for name in kernels.AVAILABLE:
            timings[name], result = best_of(args.repeat, lambda: valuation_sweep(p, args.limit, name))
            results.add(result)
        assert len(results) == 1, "backends disagree"
        row = f"{p:>4} " + " ".join(f"{t:>11.4f}s" for t in timings.values())
        if "cython" in timings:
            row += f"   {timings['python'] / timings['cython']:.0f}x"
        print(row)


if __name__ == "__main__":
    main()
