"""Ratio sweep against the exact optimum over a corpus.

    python3 scripts/ratio_sweep.py --corpus exhaustive:8
    python3 scripts/ratio_sweep.py --corpus random:n=11,m=10-22,count=300,seed=5

Prints a histogram of OPT/ALG and the summary line; exits non-zero on any
ratio violation.
"""

import argparse
import sys
import time
from collections import Counter

from mist.audit import ratio_audit
from mist.corpus import load_corpus


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--corpus", default="exhaustive:7")
    ap.add_argument("--mode", choices=["exact", "heuristic"], default="exact")
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()
    start = time.time()
    summary = ratio_audit(load_corpus(args.corpus), oracle=True, cover_mode=args.mode,
                          on_record=(lambda r: print(r.line())) if args.verbose else None)
    hist = Counter(r.ratio for r in summary.records if r.ratio is not None)
    for ratio, count in sorted(hist.items()):
        print(f"OPT/ALG = {ratio}: {count}")
    routes = Counter(r.route for r in summary.records)
    print("routes:", ", ".join(f"{k}={v}" for k, v in sorted(routes.items())))
    print(summary.line(), f"seconds={time.time() - start:.1f}")
    sys.exit(1 if summary.violations or summary.errors else 0)


if __name__ == "__main__":
    main()
