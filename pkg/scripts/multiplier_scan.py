#!/usr/bin/env python3
"""For every divisor g of x^n+1, list the multiplier units preserving the
code generated by g and the order of the shift-and-multiplier subgroup.

Usage: python scripts/multiplier_scan.py 31
"""

import argparse

from cycaut import (
    CyclicCode,
    build_group,
    divisors_of_xn_minus_1,
    multiplier,
    multiplier_subgroup,
    shift,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n", type=int)
    args = parser.parse_args()
    n = args.n

    for g in divisors_of_xn_minus_1(n):
        code = CyclicCode(n, g)
        units = multiplier_subgroup(code)
        grp = build_group(
            [shift(n)] + [multiplier(a, n) for a in units if a != 1], degree=n
        )
        print(
            f"[{n},{code.dimension}] g={code.generator}  "
            f"units={{{','.join(map(str, units))}}}  order={grp.order()}"
        )


if __name__ == "__main__":
    main()
