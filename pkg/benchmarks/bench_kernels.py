"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]

Both backends get identical integer inputs; results are checked equal before
any timing is reported.
"""

import argparse
import random
import sys
import timeit

from luroth import _kernels_py as pure

try:
    from luroth import _kernels as compiled
except ImportError:
    compiled = None


def bracket_table(rng):
    pts = [[rng.randint(-30, 30) for _ in range(3)] for _ in range(7)]
    table = []
    for i in range(7):
        for j in range(7):
            for k in range(7):
                a, b, c = pts[i], pts[j], pts[k]
                table.append(
                    a[0] * (b[1] * c[2] - b[2] * c[1])
                    - a[1] * (b[0] * c[2] - b[2] * c[0])
                    + a[2] * (b[0] * c[1] - b[1] * c[0])
                )
    return table


def int_matrix(rng, rows, cols, size=10**6):
    return [[rng.randint(-size, size) for _ in range(cols)] for _ in range(rows)]


def cases(rng):
    det_in = int_matrix(rng, 30, 30)
    gj_in = int_matrix(rng, 29, 30)
    table = bracket_table(rng)
    return {
        "bareiss_det 30x30": lambda k: k.bareiss_det(det_in),
        "ff_gauss_jordan 29x30": lambda k: k.ff_gauss_jordan(gj_in, 30),
        "fano_sum 5040 terms": lambda k: k.fano_sum(table),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    pure.s7_table()  # build the permutation cache outside the timed region
    backends = [("python", pure)] + ([("cython", compiled)] if compiled else [])
    if compiled is None:
        print("compiled extension not built; timing the pure backend only")

    print(f"{'kernel':<24}" + "".join(f"{name:>12}" for name, _ in backends) + ("     speedup" if compiled else ""))
    for label, fn in cases(random.Random(args.seed)).items():
        results = {name: fn(k) for name, k in backends}
        if len({repr(r) for r in results.values()}) != 1:
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        best = {name: min(timeit.repeat(lambda k=k: fn(k), number=1, repeat=args.repeat)) for name, k in backends}
        row = f"{label:<24}" + "".join(f"{best[name] * 1e3:>10.2f}ms" for name, _ in backends)
        if compiled:
            row += f"{best['python'] / best['cython']:>11.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
