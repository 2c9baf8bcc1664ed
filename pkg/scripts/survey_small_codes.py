#!/usr/bin/env python3
"""Survey every binary cyclic code of length <= N: parameters, weight
distribution, and the brute-forced automorphism group order.

Usage: python scripts/survey_small_codes.py [--max-n 8]
"""

import argparse

from cycaut import CyclicCode, brute_force_aut, divisors_of_xn_minus_1


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    args = parser.parse_args()

    for n in range(1, args.max_n + 1):
        for g in divisors_of_xn_minus_1(n):
            code = CyclicCode(n, g)
            autos = brute_force_aut(code, max_n=args.max_n)
            dist = code.weight_distribution()
            weights = " ".join(f"{w}:{c}" for w, c in dist.items())
            print(
                f"[{n},{code.dimension}] g={code.generator}  "
                f"|Aut|={len(autos)}  weights {weights}"
            )


if __name__ == "__main__":
    main()
