"""Compare the compiled kernels with the pure-Python fallback.

Each backend runs in its own interpreter (selected with NCSPAN_PURE_PYTHON)
on the same workloads; the best of ``--repeat`` wall-clock times is shown.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def workloads():
    from ncspan import GenericContext, eval_generic, parse_poly, standard_polynomial
    from ncspan.classifier import classify
    from ncspan.matrices import canonical_subspace, skew_basis, skew_ideal_closure

    s4 = standard_polynomial(4)
    deg6 = parse_poly("[x1,x2]^3 + x1^2*x2*x1*x2^2 - x3*x1*x2*x3*x1*x2")

    def generic_s4_d2():
        eval_generic(s4, GenericContext(2, "none", 4))

    def generic_s4_d3():
        eval_generic(s4, GenericContext(3, "none", 4))

    def generic_deg6_d3():
        eval_generic(deg6, GenericContext(3, "none", 3))

    def classify_d4_symplectic():
        classify(parse_poly("x1*x2' - x2*x1' + x1'*x1"), 4, "symplectic", seed=1)

    def closure_d5():
        ks = skew_basis(5, "transpose")
        skew_ideal_closure([ks[0] + canonical_subspace(5, "transpose", "SK").basis[0]], "transpose", 5)

    return {
        "generic s4 d=2": generic_s4_d2,
        "generic s4 d=3": generic_s4_d3,
        "generic degree-6 d=3": generic_deg6_d3,
        "classify d=4 symplectic": classify_d4_symplectic,
        "skew-ideal closure d=5": closure_d5,
    }


def worker(repeat):
    from ncspan import kernels

    out = {"backend": kernels.BACKEND, "times": {}}
    for name, fn in workloads().items():
        best = float("inf")
        for _ in range(repeat):
            start = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - start)
        out["times"][name] = best
    print(json.dumps(out))


def run_backend(pure, repeat):
    env = dict(os.environ, NCSPAN_PURE_PYTHON="1" if pure else "0")
    res = subprocess.run(
        [sys.executable, __file__, "--worker", "--repeat", str(repeat)], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        worker(args.repeat)
        return
    fast = run_backend(False, args.repeat)
    slow = run_backend(True, args.repeat)
    if fast["backend"] != "cython":
        print("note: compiled kernels are not built; both columns use the fallback")
    print(f"{'workload':<28}{fast['backend']:>10}{slow['backend']:>10}{'speedup':>10}")
    for name, t in fast["times"].items():
        s = slow["times"][name]
        print(f"{name:<28}{t:>9.3f}s{s:>9.3f}s{s / t:>9.2f}x")


if __name__ == "__main__":
    main()
