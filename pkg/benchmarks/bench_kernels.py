"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times each kernel on the tables of a fixed R(F, m) and the end-to-end
enumeration of a few families under both backends.
"""

import argparse
import time

from nsgp import kernels, rfm_enumerate

FAMILIES = [(31, 8), (39, 10), (41, 12), (45, 13)]


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def kernel_cases(tables):
    gens = [(97, 131, 173, 211, 307), (1009, 1013, 1019, 1021), (5001, 5003, 5011)]
    return {
        "apery_from_generators": lambda: [kernels.apery_from_generators(g) for g in gens],
        "special_gaps": lambda: [kernels.special_gaps(t) for t in tables],
        "minimal_generators": lambda: [kernels.minimal_generators(t) for t in tables],
        "expand_level": lambda: kernels.expand_level(tables, 39),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is timed")

    kernels.set_backend("python")
    tables = [S.apery for S in rfm_enumerate(39, 10)]
    # sanity: both backends agree on the benchmark inputs
    results = {}
    for b in backends:
        kernels.set_backend(b)
        results[b] = {name: fn() for name, fn in kernel_cases(tables).items()}
    assert all(r == results["python"] for r in results.values())

    rows = []
    for name in kernel_cases(tables):
        row = [name]
        for b in backends:
            kernels.set_backend(b)
            row.append(best(kernel_cases(tables)[name], args.repeat))
        rows.append(row)
    for F, m in FAMILIES:
        row = [f"rfm_enumerate({F},{m})"]
        for b in backends:
            kernels.set_backend(b)
            row.append(best(lambda: rfm_enumerate(F, m), args.repeat))
        rows.append(row)

    head = f"{'case':<28}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        head += f"{'speedup':>10}"
    print(head)
    for name, *ts in rows:
        line = f"{name:<28}" + "".join(f"{t * 1e3:>10.2f}ms" for t in ts)
        if len(ts) == 2:
            line += f"{ts[1] / ts[0]:>9.1f}x"
        print(line)
    print(f"({len(tables)} tables of R(39,10) per kernel call)")


if __name__ == "__main__":
    main()
