"""Hunt for simple objects with degree-2 indicator -1 in tilde categories.

Scans C(S_{n+k}, tilde S_{n-2}) or its even subcategory over a parameter
range and lists every double coset attaining -1, with the parity of its
representative.  The parity matters: an even representative means the
negative simple already lives in the alternating subcategory.
"""
import argparse
import sys
from dataclasses import dataclass

from fscat import BoundExceeded, alt, category_scan, sym, tilde_sym


@dataclass(frozen=True)
class HuntConfig:
    n_lo: int
    n_hi: int
    shift: int
    even_only: bool


def hunt(cfg: HuntConfig) -> int:
    found = 0
    for n in range(cfg.n_lo, cfg.n_hi + 1):
        degree = n + cfg.shift
        ambient = alt(degree) if cfg.even_only else sym(degree)
        label = f"C({'A' if cfg.even_only else 'S'}{degree}, tilde S{n - 2})"
        try:
            report = category_scan(ambient, tilde_sym(n, degree=degree), 2)
        except BoundExceeded as exc:
            print(f"{label}: skipped ({exc})")
            continue
        negatives = {}
        for e in report.entries:
            if e.nu == -1:
                negatives.setdefault(e.rep.to_text(), e.rep.sign)
        summary = ", ".join(f"{k}: {v}" for k, v in report.summary.items())
        print(f"{label}: {summary}")
        for rep, sign in sorted(negatives.items()):
            parity = "even" if sign == 1 else "odd"
            print(f"  -1 at {rep} ({parity} representative)")
            found += 1
    return found


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-lo", type=int, default=4)
    parser.add_argument("--n-hi", type=int, default=10)
    parser.add_argument("--shift", type=int, default=0,
                        help="extra letters in the ambient group")
    parser.add_argument("--even-only", action="store_true",
                        help="scan the alternating subcategory instead")
    args = parser.parse_args(argv)
    found = hunt(HuntConfig(args.n_lo, args.n_hi, args.shift, args.even_only))
    print(f"{found} negative double cosets in range")
    return 0


if __name__ == "__main__":
    sys.exit(main())
