"""Compare the compiled and pure scan kernels on an exhaustive sweep.

Runs the identical cell workload through both backends, checks they
agree, and reports throughput.  The compiled kernel only exists if the
extension built; in that case this script reports the fallback only.

    python3 benchmarks/bench_kernel.py --ell-max 24
"""

import argparse
import time

from ghostcycles import _kernel_py
from ghostcycles.kernel import fits_compiled
from ghostcycles.patterns import length_cells

try:
    from ghostcycles import _kernel_c
except ImportError:
    _kernel_c = None


def sweep(backend, cells, precision):
    start = time.perf_counter()
    patterns = 0
    digest = 0
    for x, y, q, d in cells:
        recs = backend.cell_records(x, y, q, d, precision)
        patterns += len(recs)
        digest ^= recs[-1][2]  # fold in a residue so the loop cannot be elided
    return patterns, time.perf_counter() - start, digest


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ell-max", type=int, default=24)
    ap.add_argument("--precision", type=int, default=64)
    ap.add_argument("--map", default="3,1", help="q,d")
    args = ap.parse_args()
    q, d = (int(v) for v in args.map.split(","))

    cells = [(x, y, q, d) for _ell, y, x in length_cells(args.ell_max)]
    if _kernel_c is not None:
        skipped = sum(not fits_compiled(*c, args.precision) for c in cells)
        if skipped:
            # keep the workloads identical: both backends run the fitting cells
            cells = [c for c in cells if fits_compiled(*c, args.precision)]
            print(f"note: {skipped} cells exceed the compiled kernel's word size; excluded")
        if not cells:
            print("no cells fit the compiled kernel at these settings; nothing to compare")
            return

    n_py, t_py, digest_py = sweep(_kernel_py, cells, args.precision)
    print(f"pure-python: {n_py} patterns in {t_py:.3f}s  ({n_py / t_py:,.0f}/s)")

    if _kernel_c is None:
        print("compiled kernel not built; nothing to compare")
        return

    n_c, t_c, digest_c = sweep(_kernel_c, cells, args.precision)
    print(f"compiled:    {n_c} patterns in {t_c:.3f}s  ({n_c / t_c:,.0f}/s)")
    assert (n_py, digest_py) == (n_c, digest_c), "backends disagree"
    print(f"speedup: {t_py / t_c:.1f}x")


if __name__ == "__main__":
    main()
