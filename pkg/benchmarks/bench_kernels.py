"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--number N]

Kernel timings call both modules directly.  The end-to-end Desargues search
runs once per backend in a subprocess, because the backend is fixed at
import time.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from moulton import _pykernels

try:
    from moulton import _ckernels
except ImportError:
    _ckernels = None

SEARCH = (
    "import time; from moulton import MoultonPlane, kernels;"
    "from moulton.desargues import find_nonclosing; from moulton.scenarios import kink_box;"
    "t = time.perf_counter(); find_nonclosing(MoultonPlane(1), kink_box(0), 20000, seed=0);"
    "print(kernels.BACKEND, time.perf_counter() - t)"
)


def _inputs(n, seed=0):
    rng = random.Random(seed)
    canon = _pykernels.canon_point

    def tri():
        return canon(rng.randint(-99, 99), rng.randint(-99, 99), rng.randint(1, 40))

    return [(tri(), tri()) for _ in range(n)]


def bench_kernel(mod, name, pairs, number):
    fn = getattr(mod, name)
    if name == "m_meet":
        pairs = [(mod.m_join(2, 1, p, q), mod.m_join(2, 1, q, (1, 0, 1))) for p, q in pairs if p != q]

    def run():
        for p, q in pairs:
            fn(2, 1, p, q)

    return min(timeit.repeat(run, number=number, repeat=3)) / (number * len(pairs))


def bench_search(pure):
    env = dict(os.environ)
    env.pop("MOULTON_PURE", None)
    if pure:
        env["MOULTON_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", SEARCH], env=env, capture_output=True, text=True, check=True)
    backend, seconds = out.stdout.split()
    return backend, float(seconds)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--number", type=int, default=20)
    args = ap.parse_args()
    pairs = [(p, q) for p, q in _inputs(2000) if p != q]
    mods = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'kernel':<12}" + "".join(f"{m:>14}" for m, _ in mods) + ("      speedup" if _ckernels else ""))
    for name in ("m_join", "m_meet"):
        times = [bench_kernel(mod, name, pairs, args.number) for _, mod in mods]
        row = f"{name:<12}" + "".join(f"{t * 1e6:>11.2f} us" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>12.1f}x"
        print(row)
    results = [bench_search(pure=True)] + ([bench_search(pure=False)] if _ckernels else [])
    for backend, seconds in results:
        print(f"search k=1, 20000 attempts, {backend:<7} {seconds:8.2f} s")
    if _ckernels is None:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
