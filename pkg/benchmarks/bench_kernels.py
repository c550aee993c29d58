"""Time the numba kernels against their numpy/Python fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3] [--groups heis3,modext(3,2)]

Both paths are timed in one process (the loop functions are compiled
once up front).  A whole regular-subgroup search is also timed in two
subprocesses, with and without HOLOSKEW_NUMBA=0, to show end-to-end cost.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from holoskew import _kernels as k
from holoskew.catalog import catalog_group
from holoskew.gamma import enumerate_gammas
from holoskew.holomorph import build_holomorph


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def kernel_cases(spec):
    G = catalog_group(spec)
    t, inv = G.table, np.asarray(G.inverse, dtype=np.int64)
    gammas = enumerate_gammas(G)
    maps = gammas[-1].maps.astype(np.int64)
    circ = gammas[-1].circle.astype(np.int64)
    hol = build_holomorph(G)
    amaps, acomp = hol.aut.maps.astype(np.int64), hol.aut.comp.astype(np.int64)
    yield "assoc", lambda: k._assoc_loop(t), lambda: k._assoc_numpy(t)
    yield "brace", lambda: k._brace_loop(t, inv, circ), lambda: k._brace_numpy(t, inv, circ)
    yield "gfe", lambda: k._gfe_loop(t, maps), lambda: k._gfe_numpy(t, maps)
    yield "search", (lambda: k._search_regular_loop(t, amaps, acomp)), \
        (lambda: k._search_regular_loop.py_func(t, amaps, acomp))


SEARCH_SNIPPET = (
    "import time,sys;from holoskew.catalog import catalog_group;"
    "from holoskew.holomorph import enumerate_regular_subgroups as e;"
    "G=catalog_group(sys.argv[1]);t=time.perf_counter();n=len(e(G));"
    "print(n, time.perf_counter()-t)"
)


def end_to_end(spec, numba_on):
    env = dict(os.environ, HOLOSKEW_NUMBA="1" if numba_on else "0")
    out = subprocess.run([sys.executable, "-c", SEARCH_SNIPPET, spec], env=env,
                         capture_output=True, text=True, check=True).stdout.split()
    return int(out[0]), float(out[1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--groups", default="d4,a4,modext(3,2),heis3")
    args = ap.parse_args()
    if not k.USE_NUMBA:
        sys.exit("numba is disabled (HOLOSKEW_NUMBA=0); nothing to compare")
    specs = [s.strip() for s in _split(args.groups)]
    print(f"{'group':<14}{'kernel':<8}{'numba s':>12}{'fallback s':>12}{'speedup':>9}")
    for spec in specs:
        for name, fast, slow in kernel_cases(spec):
            fast()  # compile
            tf, of = best_of(fast, args.repeat)
            ts, os_ = best_of(slow, 1 if name == "search" else args.repeat)
            if name == "search":
                same = np.array_equal(of, os_)
            else:
                same = k._as_violation(of) == os_
            flag = "" if same else "  MISMATCH"
            print(f"{spec:<14}{name:<8}{tf:>12.5f}{ts:>12.5f}{ts / max(tf, 1e-9):>9.1f}{flag}")
    print()
    print(f"{'group':<14}{'subgroups':>10}{'numba s':>12}{'numpy s':>12}")
    for spec in specs:
        n1, t1 = end_to_end(spec, True)
        n0, t0 = end_to_end(spec, False)
        note = "" if n0 == n1 else "  MISMATCH"
        print(f"{spec:<14}{n1:>10}{t1:>12.4f}{t0:>12.4f}{note}")


def _split(text):
    """Split a comma list while keeping commas inside parentheses."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    if cur:
        out.append(cur)
    return out


if __name__ == "__main__":
    main()
