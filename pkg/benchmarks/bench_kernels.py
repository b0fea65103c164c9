"""Compare the compiled and pure-Python kernels on representative workloads.

Each backend runs in its own interpreter (``RTK_PURE_PYTHON`` selects the
fallback), so the comparison covers the code paths used in practice.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, time
from rtk import kernels, linalg as la
from rtk.curvature import curvature_space_basis, random_admissible
from rtk.models import ModelParams, build_model
from rtk.triple import validate_triple
from rtk.lie import killing_rank_signature

def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best

repeat = {repeat}
S = la.standard_symplectic_space(3)
rng = random.Random(1)
mats = [random_admissible(S, rng) for _ in range(40)]
model = build_model(ModelParams("sl", 3))
g = model.triple.algebra

out = {{"backend": kernels.BACKEND}}
out["matmul 6x6 x 1600"] = timed(lambda: [la.matmul(a, b) for a in mats for b in mats], repeat)
out["row reduction: curvature basis, dim 6"] = timed(lambda: curvature_space_basis(S), repeat)
out["Jacobi, sl model n=3"] = timed(lambda: g.jacobi_failures(), repeat)
out["Killing form, sl model n=3"] = timed(lambda: killing_rank_signature(g), repeat)
out["validate_triple, nilpotent n=3"] = timed(
    lambda: validate_triple(build_model(ModelParams("nilpotent", 3, p=1, q=1, rank=2)).triple),
    repeat)
print(json.dumps(out))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env["RTK_PURE_PYTHON"] = "1" if pure else "0"
    res = subprocess.run([sys.executable, "-c", WORKER.format(repeat=repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    compiled = run(False, args.repeat)
    pure = run(True, args.repeat)
    if compiled["backend"] != "cython":
        print("note: compiled kernels are not built; both columns use pure Python")
    print(f"{'workload':40s} {'python [s]':>11s} {compiled['backend'] + ' [s]':>11s} {'speedup':>8s}")
    for key in compiled:
        if key == "backend":
            continue
        p, c = pure[key], compiled[key]
        print(f"{key:40s} {p:11.4f} {c:11.4f} {p / c:8.2f}x")


if __name__ == "__main__":
    main()
