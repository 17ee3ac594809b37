"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import timeit

from graphobstacle import kernels
from graphobstacle.graph import laplacian, random_connected


def workloads(rng):
    g10 = laplacian(random_connected(10, rng, 0.4)).to_int_rows()
    g14 = laplacian(random_connected(14, rng, 0.4)).to_int_rows()
    dense = [[rng.randint(-50, 50) for _ in range(12)] for _ in range(12)]
    sym = [[float(g14[i][j]) for j in range(14)] for i in range(14)]
    masks = list(range(1 << 14))
    return [
        ("bareiss_det 12x12 dense", lambda k: k.bareiss_det(dense)),
        ("faddeev_leverrier L(n=10)", lambda k: k.faddeev_leverrier(g10)),
        ("principal_minors L(n=14), all 16384", lambda k: k.principal_minors(g14, masks)),
        ("jacobi_eigenvalues L(n=14)", lambda k: k.jacobi_eigenvalues(sym, 1e-12, 100)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the python backend is timed")
    names = list(backends)
    print(f"{'workload':<40}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in workloads(random.Random(7)):
        best = {}
        for name, impl in backends.items():
            timer = timeit.Timer(lambda: fn(impl))
            number, _ = timer.autorange()
            best[name] = min(timer.repeat(args.repeat, number)) / number
        row = f"{label:<40}" + "".join(f"{best[n] * 1e3:>10.3f}ms" for n in names)
        if len(names) > 1:
            row += f"{best['python'] / best['compiled']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
