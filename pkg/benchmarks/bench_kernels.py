"""Time graph construction and BFS for the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py --max-n 10 --repeat 3
"""

import argparse
import time

from bouncing_tower import _kernel_py

try:
    from bouncing_tower import _kernel
except ImportError:
    _kernel = None


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(mod, n, p, q, repeat):
    adj = mod.build_adjacency(n, p, q)
    build = best_of(repeat, lambda: mod.build_adjacency(n, p, q))
    search = best_of(repeat, lambda: mod.bfs_distances(adj, 3**n, 0))
    return build, search


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-n", type=int, default=6)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--alpha", default="1/2")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    p, q = (int(x) for x in args.alpha.split("/"))

    backends = [("python", _kernel_py)]
    if _kernel is not None:
        backends.insert(0, ("cython", _kernel))
    else:
        print("compiled kernel not built; timing the fallback only")

    print(f"{'n':>3} {'states':>8} " + " ".join(f"{name + ' build':>14} {name + ' bfs':>12}" for name, _ in backends) + "  speedup")
    for n in range(args.min_n, args.max_n + 1):
        times = {name: bench(mod, n, p, q, args.repeat) for name, mod in backends}
        cells = " ".join(f"{b * 1e3:12.2f}ms {s * 1e3:10.2f}ms" for b, s in times.values())
        speedup = ""
        if "cython" in times:
            speedup = f"{sum(times['python']) / sum(times['cython']):7.1f}x"
        print(f"{n:>3} {3**n:>8} {cells}  {speedup}")


if __name__ == "__main__":
    main()
