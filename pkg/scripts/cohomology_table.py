"""Cohomology table of the graded de Rham complex, with kernel and image ranks.

Usage: python3 scripts/cohomology_table.py [MAX_GRADE]
"""

import sys
import time

from ncborel.homology import cohomology_dims


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    N = int(argv[0]) if argv else 6
    t0 = time.perf_counter()
    tab = cohomology_dims(N)
    dt = time.perf_counter() - t0
    print("grade  k  kernel  image  raw  dim")
    for n in range(N + 1):
        for k in range(4):
            e = tab[(k, n)]
            print(f"{n:>5}  {k}  {e.kernel:>6}  {e.image:>5}  {e.raw:>3}  {e.dim:>3}")
    print(f"\ncomputed in {dt:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
