"""Compare the compiled and pure-Python exact kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the raw kernels (rank, simplex) on seeded random integer data and an
end-to-end fan validation, under each available backend.
"""

import argparse
import copy
import random
import timeit

from galekit import kernels
from galekit.complexes import SimplicialComplex
from galekit.fans import FanData, is_fan_data, is_complete
from galekit.gale import VectorConfiguration


def rank_workload(seed=7, count=200, size=10):
    rng = random.Random(seed)
    mats = [[[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)] for _ in range(count)]

    def run():
        for mat in mats:
            kernels.integer_rank(mat, size)
    return run


def simplex_workload(seed=11, count=40, nrows=12, nvars=20):
    """max c.x subject to Ax + s = b, sum(x) + s' = 100, starting from the slack basis."""
    rng = random.Random(seed)
    problems = []
    for _ in range(count):
        constraints = [[rng.randint(-5, 5) for _ in range(nvars)] for _ in range(nrows)]
        constraints.append([1] * nvars)
        rhs = [rng.randint(1, 20) for _ in range(nrows)] + [100]
        m = len(constraints)
        rows = [[-rng.randint(0, 9) for _ in range(nvars)] + [0] * m + [0]]
        for i, (coeffs, b) in enumerate(zip(constraints, rhs)):
            rows.append(coeffs + [int(i == j) for j in range(m)] + [b])
        problems.append((rows, list(range(nvars, nvars + m))))

    def run():
        for rows, basis in problems:
            kernels.simplex_iterate(copy.deepcopy(rows), list(basis), 1, len(rows[0]) - 1)
    return run


def fan_workload():
    a = VectorConfiguration.from_rows([[1, 0, -1, 1, 0, -1], [0, 1, -1, 0, 1, -1],
                                       [1, 1, 1, -1, -1, -1]])
    prism = SimplicialComplex(6, [{1, 2, 3}, {4, 5, 6}, {1, 2, 4}, {2, 4, 5}, {2, 3, 5},
                                  {3, 5, 6}, {1, 3, 6}, {1, 4, 6}])

    def run():
        fd = FanData(prism, a)
        assert is_fan_data(fd).is_fan and is_complete(fd)
    return run


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    workloads = {"integer_rank": rank_workload(), "simplex_iterate": simplex_workload(),
                 "prism fan validation": fan_workload()}
    results = {}
    for name in kernels.available_backends():
        previous = kernels.use_backend(name)
        for label, run in workloads.items():
            results[(label, name)] = min(timeit.repeat(run, number=1, repeat=args.repeat))
        kernels.use_backend(previous)
    print(f"{'workload':24s} {'backend':10s} {'seconds':>10s} {'speedup':>8s}")
    for label in workloads:
        base = results.get((label, "python"))
        for name in kernels.available_backends():
            t = results[(label, name)]
            speed = f"{base / t:8.2f}" if base else ""
            print(f"{label:24s} {name:10s} {t:10.4f} {speed}")


if __name__ == "__main__":
    main()
