"""Dimensions of the kernels of box on 0-forms and 1-forms, grade by grade.

Usage: python3 scripts/kernel_catalog.py [MAX_GRADE] [--variant consistent|paper]
"""

import argparse
import sys

from ncborel.cli.formatting import text
from ncborel.waves import kernel_block


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("max_grade", nargs="?", type=int, default=4)
    p.add_argument("--variant", choices=("consistent", "paper"), default="consistent")
    p.add_argument("--show", action="store_true", help="print basis elements too")
    args = p.parse_args(argv)

    for op in ("box0", "box1"):
        print(f"{op}:")
        for n in range(args.max_grade + 1):
            basis = kernel_block(op, n, args.variant)
            print(f"  grade {n}: dimension {len(basis)}")
            if args.show:
                for b in basis:
                    print(f"    {text(b)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
