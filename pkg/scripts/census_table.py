"""Tabulate double-coset censuses for embedded symmetric subgroups.

For each pair l <= n in range, prints total double cosets of the embedded
S_l in S_n and how many of them are null for the degree-2 indicator, computed
by the orbit route and cross-checked against the relabeling route.
"""
import argparse
import sys

from fscat import BoundExceeded, normal_form_census, sym_census


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--check", action="store_true",
                        help="also run the relabeling route and compare")
    args = parser.parse_args(argv)

    print(f"{'l':>3} {'n':>3} {'total':>7} {'null':>6}")
    for n in range(args.min_n, args.max_n + 1):
        for l in range(1, n + 1):
            try:
                total, null = sym_census(l, n)
            except BoundExceeded as exc:
                print(f"{l:>3} {n:>3}  skipped: {exc}")
                continue
            tail = ""
            if args.check:
                other = normal_form_census(l, n)
                tail = "  ok" if other == (total, null) else f"  MISMATCH {other}"
            print(f"{l:>3} {n:>3} {total:>7} {null:>6}{tail}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
