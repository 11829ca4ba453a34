"""Command-line interface.

Subcommands: construct, count, enumerate, check-conjecture, verify-proof,
compare.  All output is deterministic for fixed inputs and flags; exact
integers appear in JSON as decimal strings and entropies as floats with 15
significant digits.

Exit codes: 0 success (and no counterexample found); 1 a genuine conjecture
violation; 2 usage, parse, or capacity errors.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from pathlib import Path

from . import core, counting, verification
from .constructions import build_complete_r_partite, build_hrd, \
    build_matching, build_transversal_design_3
from .core import Hypergraph
from .counting import count_auto, count_branch, count_brute
from .enumeration import EnumSpec, enumerate_regular, first_edge_choices
from .errors import CapacityError, InvalidArgumentError, ParseError
from .hgio import read_hypergraph, write_hypergraph
from .verification import check_conjecture, compare_constructions, \
    verify_proof_steps


def _fmt_float(x: float) -> float:
    return float(format(x, ".15g"))


def _read_input(path: str) -> Hypergraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return read_hypergraph(text)


def _apply_caps_env() -> None:
    raw = os.environ.get("HYPERIND_CAPS")
    if not raw:
        return
    parts = raw.split(",")
    if len(parts) != 3:
        raise InvalidArgumentError(
            'HYPERIND_CAPS must be "brute,canon,entropy", e.g. "30,12,24"')
    try:
        brute, canon, ent = (int(p) for p in parts)
    except ValueError:
        raise InvalidArgumentError(f"HYPERIND_CAPS entries must be integers: {raw!r}")
    counting.BRUTE_CAP = brute
    core.CANON_CAP = canon
    verification.ENTROPY_CAP = ent
    counting.LIST_CAP = ent


def _cmd_construct(args) -> int:
    if args.family == "hrd":
        g, _ = build_hrd(args.r, args.d)
    elif args.family == "complete":
        g = build_complete_r_partite(args.r, args.t)
    elif args.family == "td3":
        g = build_transversal_design_3(args.m)
    else:
        g = build_matching(args.r, args.k)
    sys.stdout.write(write_hypergraph(g))
    return 0


def _cmd_count(args) -> int:
    g = _read_input(args.input)
    if args.method == "brute":
        c = count_brute(g)
    elif args.method == "branch":
        c = count_branch(g)
    else:
        c = count_auto(g)
    print(c)
    return 0


def _verdict_json(v) -> dict:
    return {
        "r": v.r, "d": v.d, "n": v.n,
        "ind": str(v.ind_g),
        "lhs": str(v.lhs), "rhs": str(v.rhs),
        "holds": v.holds, "equality": v.equality,
        "slack_bits": _fmt_float(v.slack_bits),
    }


def _cmd_check(args) -> int:
    g = _read_input(args.input)
    v = check_conjecture(g)
    if args.json:
        print(json.dumps(_verdict_json(v)))
    else:
        print(f"r={v.r} d={v.d} n={v.n}")
        print(f"ind(G) = {v.ind_g}")
        print(f"lhs = ind(G)^(rd) = {v.lhs}")
        print(f"rhs = ind(H)^n   = {v.rhs}")
        print(f"holds: {str(v.holds).lower()}  equality: {str(v.equality).lower()}")
        print(f"slack: {format(v.slack_bits, '.15g')} bits per block")
    if not v.holds:
        sys.stdout.write(write_hypergraph(g))
        return 1
    return 0


def _cmd_verify(args) -> int:
    g = _read_input(args.input)
    rep = verify_proof_steps(g)
    if args.json:
        out = {
            "r": rep.r, "d": rep.d, "n": rep.n,
            "ind": str(rep.ind_g),
            "log2_ind": _fmt_float(rep.log2_ind),
            "hrd_bound_bits": _fmt_float(rep.hrd_bound_bits),
            "steps": [
                {"name": s.name, "lhs": _fmt_float(s.lhs),
                 "rhs": _fmt_float(s.rhs), "margin": _fmt_float(s.margin),
                 "pass": s.passed}
                for s in rep.steps
            ],
            "findings": list(rep.findings),
            "all_passed": rep.all_passed,
        }
        print(json.dumps(out))
    else:
        print(f"r={rep.r} d={rep.d} n={rep.n}  ind(G)={rep.ind_g}")
        print(f"log2 ind(G) = {format(rep.log2_ind, '.15g')}"
              f"  bound = {format(rep.hrd_bound_bits, '.15g')}")
        for s in rep.steps:
            status = "PASS" if s.passed else "FAIL"
            print(f"{s.name}: lhs={format(s.lhs, '.15g')}"
                  f" rhs={format(s.rhs, '.15g')}"
                  f" margin={format(s.margin, '.15g')} {status}")
        for f in rep.findings:
            print(f"finding: {f}")
        print("all steps passed" if rep.all_passed else "some steps FAILED")
    return 0


def _cmd_compare(args) -> int:
    rep = compare_constructions(args.r, t=args.t, m=args.m)
    if args.json:
        out = {
            "kind": rep.kind, "r": rep.r, "d": rep.d,
            "ind_hrd": str(rep.ind_hrd), "ind_rival": str(rep.ind_rival),
            "L": rep.L,
            "hrd_power": str(rep.hrd_power),
            "rival_power": str(rep.rival_power),
            "winner": rep.winner,
        }
        print(json.dumps(out))
    else:
        print(f"{rep.kind}: r={rep.r} d={rep.d}")
        print(f"ind(H) = {rep.ind_hrd}  ind(rival) = {rep.ind_rival}")
        print(f"at L={rep.L} vertices: {rep.hrd_power} vs {rep.rival_power}")
        print(f"winner: {rep.winner}")
    return 0


def _enumerate_chunk(payload: tuple) -> tuple[int, list[str], list[str]]:
    """Worker: enumerate one first-edge prefix; returns (count, emissions,
    violations) as ".hg" texts.  Emissions are kept only when requested."""
    r, d, n, up_to_iso, prefix, check, keep = payload
    spec = EnumSpec(r=r, d=d, n=n, up_to_iso=up_to_iso, prefix=prefix)
    emissions: list[str] = []
    violations: list[str] = []

    def visit(g: Hypergraph) -> None:
        if keep or up_to_iso:
            emissions.append(write_hypergraph(g))
        if check and not check_conjecture(g).holds:
            violations.append(write_hypergraph(g))

    count = enumerate_regular(spec, visit)
    return count, emissions, violations


def _cmd_enumerate(args) -> int:
    spec = EnumSpec(r=args.r, d=args.d, n=args.n, up_to_iso=args.up_to_iso)
    keep = args.emit is not None
    if args.workers > 1 and spec.feasible and spec.num_edges > 0:
        payloads = [(args.r, args.d, args.n, args.up_to_iso, ((e),), args.check_conjecture, keep)
                    for e in first_edge_choices(spec)]
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_enumerate_chunk, payloads))
    else:
        results = [_enumerate_chunk(
            (args.r, args.d, args.n, args.up_to_iso, (), args.check_conjecture, keep))]

    total = 0
    emissions: list[str] = []
    violations: list[str] = []
    if args.up_to_iso:
        # dedup across chunks in a single merge stage
        seen: set[str] = set()
        for _, ems, _viol in results:
            for text in ems:
                if text not in seen:
                    seen.add(text)
                    emissions.append(text)
        total = len(emissions)
        if args.check_conjecture:
            violations = [t for t in emissions
                          if not check_conjecture(read_hypergraph(t)).holds]
    else:
        for count, ems, viol in results:
            total += count
            emissions.extend(ems)
            violations.extend(viol)

    if args.emit is not None:
        outdir = Path(args.emit)
        outdir.mkdir(parents=True, exist_ok=True)
        width = max(6, len(str(max(total, 1))))
        for i, text in enumerate(emissions):
            (outdir / f"g{i:0{width}d}.hg").write_text(text)

    print(f"emitted: {total}")
    if args.check_conjecture:
        print(f"checked: {total}")
        print(f"violations: {len(violations)}")
        for text in violations:
            sys.stdout.write(text)
        if violations:
            return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hyperind",
        description="Exact counting and verification for independent sets "
                    "in regular uniform hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named family as .hg text")
    fam = c.add_subparsers(dest="family", required=True)
    f_hrd = fam.add_parser("hrd")
    f_hrd.add_argument("--r", type=int, required=True)
    f_hrd.add_argument("--d", type=int, required=True)
    f_comp = fam.add_parser("complete")
    f_comp.add_argument("--r", type=int, required=True)
    f_comp.add_argument("--t", type=int, required=True)
    f_td3 = fam.add_parser("td3")
    f_td3.add_argument("--m", type=int, required=True)
    f_match = fam.add_parser("matching")
    f_match.add_argument("--r", type=int, required=True)
    f_match.add_argument("--k", type=int, required=True)
    c.set_defaults(func=_cmd_construct)

    cnt = sub.add_parser("count", help="count independent sets of a .hg file")
    cnt.add_argument("input", help='path to a .hg file, or "-" for stdin')
    cnt.add_argument("--method", choices=["auto", "brute", "branch"],
                     default="auto")
    cnt.set_defaults(func=_cmd_count)

    en = sub.add_parser("enumerate",
                        help="generate all d-regular r-uniform hypergraphs on n vertices")
    en.add_argument("--r", type=int, required=True)
    en.add_argument("--d", type=int, required=True)
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--up-to-iso", action="store_true")
    en.add_argument("--check-conjecture", action="store_true")
    en.add_argument("--emit", metavar="DIR")
    en.add_argument("--workers", type=int, default=1)
    en.set_defaults(func=_cmd_enumerate)

    chk = sub.add_parser("check-conjecture",
                         help="exact extremal-bound verdict for one hypergraph")
    chk.add_argument("input")
    chk.add_argument("--json", action="store_true")
    chk.set_defaults(func=_cmd_check)

    ver = sub.add_parser("verify-proof",
                         help="check the entropy proof chain on a quasi-bipartite instance")
    ver.add_argument("input")
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=_cmd_verify)

    cmp_ = sub.add_parser("compare",
                          help="H(r,d) vs a rival construction, exact at a common size")
    cmp_.add_argument("--r", type=int, required=True)
    group = cmp_.add_mutually_exclusive_group(required=True)
    group.add_argument("--t", type=int)
    group.add_argument("--m", type=int)
    cmp_.add_argument("--json", action="store_true")
    cmp_.set_defaults(func=_cmd_compare)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _apply_caps_env()
        return args.func(args)
    except (InvalidArgumentError, ParseError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
