"""Compare the compiled gate kernels against the pure-numpy fallback.

Two views:
  micro  - raw rot/cnot kernel throughput on a single statevector, both
           implementations called directly in this process.
  macro  - full synth + verify wall time per qubit count, one subprocess
           per backend so the import-time selection is exercised for real.

Usage: python benchmarks/compare_backends.py [--n-max N] [--repeats R]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from ucrsynth import _kernels_py
from ucrsynth._backend import BACKEND

try:
    from ucrsynth import _kernels
except ImportError:
    _kernels = None

MACRO_SNIPPET = """\
import json, time
from ucrsynth import apply_circuit, prepare, random_state
from ucrsynth._backend import BACKEND

n, repeats = {n}, {repeats}
best = float("inf")
for r in range(repeats):
    a = random_state(n, 2 * r)
    b = random_state(n, 2 * r + 1)
    start = time.perf_counter()
    result = prepare(a, b)
    apply_circuit(a, result.circuit)
    best = min(best, time.perf_counter() - start)
print(json.dumps({{"backend": BACKEND, "n": n, "seconds": best}}))
"""


def time_kernel(fn, *args, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def micro(n, repeats):
    rng = np.random.default_rng(0)
    amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    r = np.exp(1j * rng.uniform(0, 1, 4))
    rows = []
    for name, mod in (("compiled", _kernels), ("numpy", _kernels_py)):
        if mod is None:
            continue
        trot = time_kernel(mod.rot, amps.copy(), n // 2, *r, repeats=repeats)
        tcnot = time_kernel(mod.cnot, amps.copy(), 0, n - 1, repeats=repeats)
        rows.append((name, trot, tcnot))
    print(f"micro: single kernel call on a {1 << n}-amplitude vector (best of {repeats})")
    print(f"{'backend':>10} {'rot_us':>10} {'cnot_us':>10}")
    for name, trot, tcnot in rows:
        print(f"{name:>10} {trot * 1e6:>10.1f} {tcnot * 1e6:>10.1f}")
    if len(rows) == 2:
        print(f"{'speedup':>10} {rows[1][1] / rows[0][1]:>10.2f} {rows[1][2] / rows[0][2]:>10.2f}")
    print()


def macro(n_max, repeats):
    backends = ["numpy"] if _kernels is None else ["compiled", "numpy"]
    print(f"macro: synth + verify wall time, subprocess per backend (best of {repeats})")
    print(f"{'n':>3} " + " ".join(f"{name + '_ms':>12}" for name in backends))
    for n in range(2, n_max + 1):
        cells = []
        for name in backends:
            env = dict(os.environ, UCRSYNTH_KERNELS=name)
            proc = subprocess.run(
                [sys.executable, "-c", MACRO_SNIPPET.format(n=n, repeats=repeats)],
                capture_output=True,
                text=True,
                env=env,
                check=True,
            )
            row = json.loads(proc.stdout)
            assert row["backend"] == name, row
            cells.append(row["seconds"] * 1e3)
        print(f"{n:>3} " + " ".join(f"{cell:>12.2f}" for cell in cells))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=12, help="largest qubit count")
    parser.add_argument("--repeats", type=int, default=3, help="take the best of this many runs")
    args = parser.parse_args(argv)
    print(f"active backend in this process: {BACKEND}")
    if _kernels is None:
        print("compiled kernels unavailable; micro table shows numpy only")
    print()
    micro(max(args.n_max, 10), args.repeats)
    macro(args.n_max, args.repeats)
    return 0


if __name__ == "__main__":
    sys.exit(main())
