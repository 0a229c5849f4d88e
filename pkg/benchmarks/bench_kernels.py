"""Compare the compiled and pure-Python scan kernels.

    python benchmarks/bench_kernels.py --rhombus 2000 --parallelogram 80
"""
import argparse
import time

from amicable_lattice import kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rhombus", type=int, default=2000, help="rhombus scan bound")
    parser.add_argument("--parallelogram", type=int, default=80, help="parallelogram scan bound")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if "cython" not in kernels.BACKENDS:
        print("compiled kernels not built; only the Python backend is available")

    cases = [
        ("rhombus_scan", args.rhombus, kernels.rhombus_scan),
        ("parallelogram_scan", args.parallelogram, kernels.parallelogram_scan),
    ]
    print(f"{'kernel':<20} {'bound':>6} {'backend':>8} {'seconds':>10} {'hits':>6} {'speedup':>8}")
    for name, bound, fn in cases:
        results = {}
        for backend in kernels.BACKENDS:
            secs, hits = best_of(lambda: fn(1, bound, bound, backend), args.repeat)
            results[backend] = (secs, hits)
        base = results["python"][0]
        for backend, (secs, hits) in results.items():
            print(f"{name:<20} {bound:>6} {backend:>8} {secs:>10.4f} {len(hits):>6} "
                  f"{base / secs if secs else float('inf'):>7.1f}x")
        if len({tuple(h) for _, h in results.values()}) != 1:
            raise SystemExit(f"{name}: backends disagree")


if __name__ == "__main__":
    main()
