"""Compare the compiled and pure-Python kernel backends.

Usage: python3 benchmarks/bench_kernels.py [-n 7] [-w 5] [--repeat 3]

Times the fused per-graph analysis over every enumerated chain, fork and
3-star, then a full delta_x <= 2 certification run, once per backend.
"""

import argparse
import time

from surfsing import _kernels
from surfsing.atlas import EnumerationSpec, _batches, _partitions, certify_prop1


def _workload(spec):
    jobs = []
    for shape, k in _partitions(spec):
        for edges, stream in _batches(shape, k, spec.max_weight):
            jobs.append((edges, [ws for _, ws in stream]))
    return jobs


def _time_analyze(jobs):
    t0 = time.perf_counter()
    count = 0
    for edges, batch in jobs:
        for ws in batch:
            _kernels.analyze_weighted(ws, edges)
            count += 1
    return count, time.perf_counter() - t0


def _time_certify(spec):
    t0 = time.perf_counter()
    rep = certify_prop1(spec)
    return rep.total, time.perf_counter() - t0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-n", type=int, default=7, help="max vertices")
    ap.add_argument("-w", type=int, default=5, help="max weight")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    spec = EnumerationSpec(args.n, args.w)
    jobs = _workload(spec)
    results = {}
    previous = _kernels.BACKEND
    try:
        for backend in _kernels.available_backends():
            _kernels.set_backend(backend)
            best_a = min(_time_analyze(jobs)[1] for _ in range(args.repeat))
            count = sum(len(b) for _, b in jobs)
            total, cert = _time_certify(spec)
            results[backend] = (count, best_a, total, cert)
    finally:
        _kernels.set_backend(previous)

    print(f"n <= {args.n}, w <= {args.w}")
    print(f"{'backend':<8} {'graphs':>8} {'analyze s':>10} {'us/graph':>9} {'certify s':>10}")
    for backend, (count, a, total, cert) in sorted(results.items()):
        print(f"{backend:<8} {count:>8} {a:>10.3f} {1e6 * a / count:>9.2f} {cert:>10.3f}")
    if {"cython", "python"} <= results.keys():
        speed = results["python"][1] / results["cython"][1]
        print(f"compiled speedup on analyze: {speed:.1f}x")


if __name__ == "__main__":
    main()
