"""Compare the numba and numpy kernel backends.

    python benchmarks/bench_kernels.py            # closures + full solves
    python benchmarks/bench_kernels.py --quick    # skip the McGee solve on numpy
"""

import argparse
import random
import time

from zeroforcing import kernels
from zeroforcing.named import heawood, hypercube, mcgee, petersen
from zeroforcing.solver import SolverConfig, zero_forcing_number


def bench_closure(g, backend, reps, seed=0):
    rng = random.Random(seed)
    sets = [rng.sample(range(g.n), max(1, g.n // 4)) for _ in range(reps)]
    kernels.closure(g, sets[0], backend)  # compile / warm up
    start = time.perf_counter()
    for s in sets:
        kernels.closure(g, s, backend)
    return (time.perf_counter() - start) / reps


def bench_solve(g, backend):
    zero_forcing_number(g, SolverConfig(backend=backend))
    start = time.perf_counter()
    res = zero_forcing_number(g, SolverConfig(backend=backend))
    return time.perf_counter() - start, res


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--reps", type=int, default=2000)
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()

    backends = [b for b in kernels.BACKENDS if b != "numba" or kernels.HAVE_NUMBA]
    graphs = [("petersen", petersen()), ("cube3", hypercube(3)), ("heawood", heawood()), ("mcgee", mcgee())]

    print(f"{'closure':<12}" + "".join(f"{b:>14}" for b in backends))
    for name, g in graphs:
        row = [bench_closure(g, b, args.reps) for b in backends]
        print(f"{name:<12}" + "".join(f"{t * 1e6:>11.1f} us" for t in row))

    print()
    print(f"{'solve':<12}" + "".join(f"{b:>14}" for b in backends) + f"{'z':>5}{'nodes':>10}")
    for name, g in graphs:
        row = []
        res = None
        for b in backends:
            if args.quick and b == "numpy" and name == "mcgee":
                row.append(float("nan"))
                continue
            t, res = bench_solve(g, b)
            row.append(t)
        print(f"{name:<12}" + "".join(f"{t:>12.4f} s" for t in row) + f"{res.z:>5}{res.nodes_explored:>10}")


if __name__ == "__main__":
    main()
