"""Command line driver for indicator scans, censuses and claim checks.

Group arguments are short spec strings: a named family such as sym:7,
cyclic:12 or sym-embed:3,6, or explicit generators like
gens:(1,2)(3,4);(1,3)@4.  When the subgroup spec has smaller degree than the
group it is padded with fixed points.  Output goes to standard output or to
the --out path; --json and --csv select the machine formats.  Exit status is
0 for success or a passing check, 1 for a failing check, 2 for usage errors
and violated bounds.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import config
from .catalog import run_all, verify
from .chartab import character_table
from .config import RunConfig, load_config
from .cosets import double_cosets, stabilizer, sym_census
from .indicators import category_scan, nu_m, vanishing_witness
from .perm import (
    BoundExceeded,
    Permutation,
    PermGroup,
    alt,
    alt_embed,
    conjugate,
    cyclic,
    sym,
    sym_embed,
    sym_prime,
    tilde_sym,
    trivial,
)

_FAMILIES = {
    "sym": (1, sym),
    "alt": (1, alt),
    "cyclic": (1, cyclic),
    "tilde-sym": (1, tilde_sym),
    "sym-embed": (2, sym_embed),
    "alt-embed": (2, alt_embed),
    "sym-prime": (2, sym_prime),
}


@dataclass(frozen=True)
class GroupSpec:
    """Parsed form of a group argument; to_text and parse round-trip."""

    kind: str
    params: tuple[int, ...] = ()
    cycles: tuple[str, ...] = field(default=())
    degree: int | None = None

    def to_text(self) -> str:
        if self.kind == "gens":
            return f"gens:{';'.join(self.cycles)}@{self.degree}"
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"

    def build(self) -> PermGroup:
        if self.kind == "gens":
            perms = [Permutation.from_text(c, self.degree) for c in self.cycles]
            perms = [p for p in perms if not p.is_identity()]
            if not perms:
                return trivial(self.degree)
            return PermGroup(self.degree, perms)
        _, family = _FAMILIES[self.kind]
        return family(*self.params)


def parse_group_spec(text: str) -> GroupSpec:
    s = text.strip()
    head, sep, rest = s.partition(":")
    if not sep:
        raise ValueError(f"cannot parse group spec {text!r}: expected "
                         "family:args, no ':' found")
    if head == "gens":
        body, at, degree_text = rest.rpartition("@")
        if not at:
            raise ValueError(f"cannot parse group spec {text!r}: generator "
                             "lists need a trailing @degree")
        try:
            degree = int(degree_text)
        except ValueError:
            raise ValueError(f"cannot parse group spec {text!r}: bad degree "
                             f"{degree_text!r} after '@'") from None
        if degree < 1:
            raise ValueError(f"cannot parse group spec {text!r}: degree must "
                             "be positive")
        cycles = []
        for i, chunk in enumerate(body.split(";")):
            try:
                cycles.append(Permutation.from_text(chunk, degree).to_text())
            except ValueError as exc:
                raise ValueError(f"cannot parse group spec {text!r}: "
                                 f"generator {i + 1}: {exc}") from None
        return GroupSpec("gens", cycles=tuple(cycles), degree=degree)
    if head not in _FAMILIES:
        pos = len(text) - len(s)
        raise ValueError(f"cannot parse group spec {text!r}: unknown family "
                         f"{head!r} at position {pos}")
    nargs, _ = _FAMILIES[head]
    parts = rest.split(",") if rest else []
    if len(parts) != nargs:
        raise ValueError(f"cannot parse group spec {text!r}: {head} takes "
                         f"{nargs} integer argument(s), got {len(parts)}")
    try:
        params = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"cannot parse group spec {text!r}: non-integer "
                         f"argument in {rest!r}") from None
    return GroupSpec(head, params=params)


def _pad_to(group: PermGroup, degree: int) -> PermGroup:
    """Re-embed a group of smaller degree by appending fixed points."""
    if group.degree == degree:
        return group
    if group.degree > degree:
        raise ValueError(f"subgroup degree {group.degree} exceeds the group "
                         f"degree {degree}")
    tail = tuple(range(group.degree, degree))
    gens = [Permutation._from_raw(g._img + tail) for g in group.generators]
    if not gens:
        return trivial(degree)
    return PermGroup(degree, gens)


def _groups(args) -> tuple[GroupSpec, GroupSpec, PermGroup, PermGroup]:
    gspec = parse_group_spec(args.G)
    hspec = parse_group_spec(args.H)
    group = gspec.build()
    sub = _pad_to(hspec.build(), group.degree)
    return gspec, hspec, group, sub


def _summary_line(report) -> str:
    return ", ".join(f"{k}: {v}" for k, v in report.summary.items())


def _cmd_indicators(args, cfg: RunConfig) -> tuple[int, str]:
    if args.m < 1:
        raise ValueError("m must be a positive integer")
    gspec, hspec, group, sub = _groups(args)
    report = category_scan(group, sub, args.m, gspec.to_text(),
                           hspec.to_text(), seed=cfg.seed)
    if args.json:
        return 0, report.to_json() + "\n"
    if args.csv:
        return 0, report.to_csv()
    lines = [f"degree-{report.m} indicators of C({report.group_label}, "
             f"{report.sub_label})",
             f"simples: {len(report.entries)}",
             f"summary: {_summary_line(report)}"]
    negatives = [e for e in report.entries if e.nu == -1]
    for e in negatives:
        lines.append(f"  -1 at rep {e.rep.to_text()} with chi of degree "
                     f"{e.chi_degree}")
    return 0, "\n".join(lines) + "\n"


def _cmd_double_cosets(args, cfg: RunConfig) -> tuple[int, str]:
    _, _, group, sub = _groups(args)
    decomposition = double_cosets(group, sub)
    if args.json:
        payload = [{"rep": dc.rep.to_text(), "size": dc.size,
                    "n_left": dc.n_left} for dc in decomposition.cosets]
        return 0, json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = [f"{len(decomposition.cosets)} double cosets"]
    for dc in decomposition.cosets:
        lines.append(f"{dc.rep.to_text()} size {dc.size} left-cosets "
                     f"{dc.n_left}")
    return 0, "\n".join(lines) + "\n"


def _cmd_census(args, cfg: RunConfig) -> tuple[int, str]:
    if not 1 <= args.l <= args.n:
        raise ValueError("need 1 <= l <= n")
    total, null = sym_census(args.l, args.n)
    return 0, f"{total},{null}\n"


def _verify_params(args) -> dict:
    return {name: getattr(args, name) for name in ("n", "l", "k")
            if getattr(args, name) is not None}


def _cmd_verify(args, cfg: RunConfig) -> tuple[int, str]:
    try:
        report = verify(args.claim, **_verify_params(args))
    except TypeError as exc:
        raise ValueError(f"wrong parameters for claim {args.claim!r}: "
                         f"{exc}") from None
    code = 1 if report.status == "fail" else 0
    if args.json:
        return code, json.dumps(report.to_payload(with_runtime=False),
                                indent=2, sort_keys=True) + "\n"
    return code, report.line() + "\n"


def _cmd_verify_all(args, cfg: RunConfig) -> tuple[int, str]:
    reports = run_all(args.profile)
    failed = sum(1 for r in reports if r.status == "fail")
    if args.json:
        payload = [r.to_payload(with_runtime=False) for r in reports]
        return (1 if failed else 0,
                json.dumps(payload, indent=2, sort_keys=True) + "\n")
    lines = [r.line() for r in reports]
    skipped = sum(1 for r in reports if r.status == "skipped")
    lines.append(f"{len(reports) - failed - skipped} passed, {failed} failed, "
                 f"{skipped} skipped")
    return (1 if failed else 0), "\n".join(lines) + "\n"


def _example_minus_one() -> tuple[int, str]:
    sub = cyclic(12)
    t = Permutation.from_text("(1,2,3,4,5,6,7,8,9,10,11,12)")
    g = Permutation.from_text("(1,2,7,8)(3,11,9,5)(4,12,10,6)")
    lines = [f"g = {g.to_text()}", "H = cyclic:12 generated by the 12-cycle t",
             f"g^2 equals t^6: {g * g == t ** 6}"]
    gi = g.inverse()
    outside = [conjugate(gi, t), conjugate(gi, t ** 2), conjugate(gi, t ** 3),
               conjugate(g, t ** 4)]
    for u in outside:
        lines.append(f"conjugate {u.to_text()} lies in H: {u in sub}")
    stab = stabilizer(g, sub).group
    lines.append(f"stabilizer of the coset: order {stab.order()}, "
                 "generated by g^2")
    saw_minus_one = False
    for chi in character_table(stab).characters:
        value = nu_m(g, chi, sub, 2)
        saw_minus_one = saw_minus_one or value == -1
        note = "   <-- indicator -1" if value == -1 else ""
        lines.append(f"chi with chi(g^2) = {chi.values[1]}: nu_2 = "
                     f"{value}{note}")
    ok = saw_minus_one and stab.order() == 2 and not any(u in sub
                                                         for u in outside)
    return (0 if ok else 1), "\n".join(lines) + "\n"


def _example_nu_p() -> tuple[int, str]:
    sub = sym_embed(5, 7)
    g = Permutation.from_text("(5,6)", 7)
    witness = vanishing_witness(g, sub, 7)
    stab = stabilizer(g, sub).group
    values = [nu_m(g, chi, sub, 7)
              for chi in character_table(stab).characters]
    lines = ["coset of g = (5,6) in sym:7 over H = sym-embed:5,7, m = 7",
             f"some element of gH has its 7th power in H: {witness}",
             f"stabilizer order {stab.order()}",
             f"nu_7 over the {len(values)} characters: {values}"]
    ok = not witness and not any(values)
    lines.append("all degree-7 indicators vanish" if ok
                 else "unexpected nonzero value")
    return (0 if ok else 1), "\n".join(lines) + "\n"


_EXAMPLES = {"ex-minus-one": _example_minus_one, "ex-nu-p": _example_nu_p}


def _cmd_example(args, cfg: RunConfig) -> tuple[int, str]:
    return _EXAMPLES[args.id]()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fscat",
        description="Frobenius-Schur indicators of group-theoretical "
                    "fusion categories of permutation groups.")
    parser.add_argument("--config", metavar="PATH",
                        help="JSON config file; flags below override it")
    parser.add_argument("--enum-bound", type=int, metavar="N",
                        help="largest subgroup order to enumerate")
    parser.add_argument("--index-bound", type=int, metavar="N",
                        help="largest coset index to traverse")
    parser.add_argument("--seed", type=int, metavar="N",
                        help="seed for the character table search; results "
                             "do not depend on it")
    parser.add_argument("--out", metavar="PATH",
                        help="write output to this file instead of stdout")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("indicators",
                            help="scan all simples of the pair category")
    p.add_argument("--G", required=True, metavar="SPEC")
    p.add_argument("--H", required=True, metavar="SPEC")
    p.add_argument("--m", type=int, default=2, metavar="M")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_indicators)

    p = commands.add_parser("double-cosets",
                            help="list the double cosets of H in G")
    p.add_argument("--G", required=True, metavar="SPEC")
    p.add_argument("--H", required=True, metavar="SPEC")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_double_cosets)

    p = commands.add_parser("census",
                            help="count double cosets of sym-embed:l,n and "
                                 "the null ones among them")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_census)

    p = commands.add_parser("verify", help="run one catalogued check")
    p.add_argument("--claim", required=True, metavar="ID")
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = commands.add_parser("verify-all",
                            help="run a whole verification profile")
    p.add_argument("--profile", default="quick", choices=("quick", "full"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_all)

    p = commands.add_parser("example", help="print one worked instance")
    p.add_argument("--id", required=True, choices=sorted(_EXAMPLES))
    p.set_defaults(func=_cmd_example)
    return parser


def _apply_config(args) -> RunConfig:
    cfg = load_config(args.config)
    if args.enum_bound is not None:
        cfg.enumeration_bound = args.enum_bound
    if args.index_bound is not None:
        cfg.index_bound = args.index_bound
    if args.seed is not None:
        cfg.seed = args.seed
    cfg.validate()
    config.ENUMERATION_BOUND = cfg.enumeration_bound
    config.INDEX_BOUND = cfg.index_bound
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _apply_config(args)
        code, text = args.func(args, cfg)
    except (BoundExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
