"""Parse and class counts for (S/S)^n S (S\\S)^n.

Totals and NF counts come from the packed chart; class counts from the
packed recipe DP (slow past n=8). Compares against Catalan(2n) and C(2n, n).

    python3 scripts/modifier_counts.py --max-n 10 --classes-up-to 8
"""
import argparse
import time
from math import comb

from nfccg.chart import parse_exhaustive, parse_nf, recipe_classes
from nfccg.demos import modifiers
from nfccg.grammar import RulePolicy


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--classes-up-to", type=int, default=6)
    ap.add_argument("--max-degree", default="none", help="int or 'none'")
    ap.add_argument("--no-crossing", action="store_true")
    args = ap.parse_args()
    deg = None if args.max_degree == "none" else int(args.max_degree)
    policy = RulePolicy(deg, not args.no_crossing)
    print(f"{'n':>3} {'total':>14} {'catalan(2n)':>14} {'nf':>10} {'classes':>10} {'C(2n,n)':>10} {'secs':>6}")
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        words, g = modifiers(n)
        g = g.with_policy(policy)
        total = parse_exhaustive(words, g).count(g.target)
        nf = parse_nf(words, g).count(g.target)
        classes = "-"
        if n <= args.classes_up_to:
            classes = len(recipe_classes(parse_exhaustive(words, g), g.target))
        cat = comb(4 * n, 2 * n) // (2 * n + 1)
        print(f"{n:>3} {total:>14} {cat:>14} {nf:>10} {classes:>10} {comb(2 * n, n):>10} {time.perf_counter() - t0:>6.1f}")


if __name__ == "__main__":
    main()
