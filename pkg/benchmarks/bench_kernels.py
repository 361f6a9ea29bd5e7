"""Compare the Cython scalar kernels with the pure-Python fallback.

Each backend runs in its own interpreter (the backend is chosen at import
time), selected through CYCLOCAT_PURE_PYTHON.  Usage::

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def run_workloads(repeat):
    import random

    from cyclocat.arith import CyclotomicField
    from cyclocat.kernels import BACKEND
    from cyclocat.modules import Z2, GradingScheme, random_kernel_module
    from cyclocat.quantum import verify_main_theorem
    from cyclocat.stable import stable_hom

    results = {"backend": BACKEND}
    for N in (15, 77):
        F = CyclotomicField(N)
        rng = random.Random(N)
        elems = [F.from_coords([rng.randint(-9, 9) for _ in range(F.phi)]) for _ in range(60)]

        def scalar():
            acc = F.zero
            for a in elems:
                for b in elems:
                    acc = acc + a * b
            return acc

        results[f"scalar mul/add, Q(zeta_{N})"] = _best(scalar, repeat)

    results["verify-theorem (7,11)"] = _best(lambda: verify_main_theorem(7, 11), repeat)
    sch = GradingScheme(Z2, 3, 5)
    pairs = [(random_kernel_module(sch, 0, 60, s), random_kernel_module(sch, 1, 60, s + 1)) for s in range(20)]
    results["stable_hom, 20 kernel pairs"] = _best(
        lambda: [stable_hom(X, Y, representatives=False) for X, Y in pairs], repeat)
    return results


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.child:
        print(json.dumps(run_workloads(args.repeat)))
        return 0

    rows = {}
    for label, pure in (("cython", "0"), ("python", "1")):
        env = dict(os.environ, CYCLOCAT_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(args.repeat)],
                             env=env, check=True, capture_output=True, text=True).stdout
        rows[label] = json.loads(out)
    if rows["cython"]["backend"] != "cython":
        print("note: the Cython extension is not built; both columns use the Python kernels")
    names = [k for k in rows["python"] if k != "backend"]
    width = max(map(len, names))
    print(f"{'workload':<{width}}  {'cython':>9}  {'python':>9}  speedup")
    for k in names:
        c, p = rows["cython"][k], rows["python"][k]
        print(f"{k:<{width}}  {c:8.3f}s  {p:8.3f}s  {p / c:6.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
