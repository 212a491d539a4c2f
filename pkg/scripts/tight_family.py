"""Internal-vertex counts on the chained-squares family.

Prints, for each k, the approximation's count, the optimum 4k-2 (checked
by the exact oracle while n stays within its bound), and the ratio as an
exact fraction.

    python3 scripts/tight_family.py --kmax 25
"""

import argparse
from fractions import Fraction

from mist.assemble import approx_mist
from mist.generators import gen_tight
from mist.oracle import DEFAULT_ORACLE_BOUND, exact_mist


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=25)
    args = ap.parse_args()
    print("k n alg opt ratio opt_checked")
    for k in range(1, args.kmax + 1):
        g = gen_tight(k)
        t, _ = approx_mist(g, "exact", exact_bound=g.n)
        opt = 4 * k - 2 if k > 1 else 2
        checked = g.n <= DEFAULT_ORACLE_BOUND
        if checked:
            assert exact_mist(g)[1] == opt
        ratio = Fraction(opt, t.internal_count)
        print(k, g.n, t.internal_count, opt, f"{ratio.numerator}/{ratio.denominator}",
              "yes" if checked else "no")


if __name__ == "__main__":
    main()
