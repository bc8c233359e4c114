"""Command-line front end.

    wordperm perm thue-morse --at 0 --len 9
    wordperm tau fibonacci -n 2..10 --csv
    wordperm delta thue-morse --at 12 --len 7
    wordperm verify doubled-tm thue-morse -n 9..20

Defaults for the horizon and the prefix hard cap come from the packaged
``defaults.json``; ``--config FILE`` overrides them and explicit flags
override both. Exit status: 0 on success, 1 when a suite does not pass or the
engine fails, 2 on usage errors (including malformed word specs).
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from itertools import combinations
from pathlib import Path

from .complexity import rho, tau
from .doubling import delta, restrict, table_for, threshold_for
from .errors import WordPermError, WordSpecError
from .parsing import parse_spec
from .perms import complementary_pair_type, extract_subperm, form_of
from .report import (complexity_rows, format_table, rows_to_csv, rows_to_json,
                     suites_to_json, to_json)
from .suites import SUITES, verify_suite
from .words import Word


class UsageError(Exception):
    pass


def load_config(path: str | None) -> dict:
    config = json.loads(resources.files("wordperm").joinpath("defaults.json").read_text())
    if path:
        try:
            config.update(json.loads(Path(path).read_text()))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc
    return config


def parse_range(text: str) -> range:
    """``"a..b"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b or an integer, got {text!r}")
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or nonpositive range {text!r}")
    return range(lo, hi + 1)


def _output_flags(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="JSON document")
    g.add_argument("--csv", action="store_true", help="CSV table")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wordperm",
                                 description="Permutations of infinite binary words.")
    ap.add_argument("--config", help="JSON file with horizon / hard_cap defaults")
    ap.add_argument("--horizon", type=int, help="start positions scanned")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("word", help="print a factor")
    p.add_argument("spec")
    p.add_argument("--at", type=int, default=0)
    p.add_argument("--len", type=int, default=64)

    p = sub.add_parser("rho", help="factor complexity")
    p.add_argument("spec")
    p.add_argument("-n", type=parse_range, required=True, metavar="A..B")
    _output_flags(p)

    p = sub.add_parser("tau", help="permutation complexity")
    p.add_argument("spec")
    p.add_argument("-n", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--split", action="store_true", help="even/odd start partition")
    _output_flags(p)

    p = sub.add_parser("perm", help="one subpermutation")
    p.add_argument("spec")
    p.add_argument("--at", type=int, required=True)
    p.add_argument("--len", type=int, required=True)

    p = sub.add_parser("delta", help="doubling image of a window")
    p.add_argument("spec")
    p.add_argument("--at", type=int, required=True)
    p.add_argument("--len", type=int, required=True, help="window length n")
    p.add_argument("--restrict", choices=["L", "R", "M"])
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classes", help="run classes and recurrence threshold")
    p.add_argument("spec")

    p = sub.add_parser("pairs", help="complementary pairs in Perm(n)")
    p.add_argument("spec")
    p.add_argument("-n", type=parse_range, required=True, metavar="A..B")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("spec")
    p.add_argument("-n", type=parse_range, required=True, metavar="A..B")
    _output_flags(p)
    return ap


# -- verbs ------------------------------------------------------------------


def cmd_word(word, args, horizon, out):
    out.write(word.factor(args.at, args.at + args.len - 1) + "\n")
    return 0


def cmd_rho(word, args, horizon, out):
    sets = [rho(word, n, horizon) for n in args.n]
    records = [{"word": word.name, "n": fs.n, "rho": fs.count, "converged": fs.converged,
                "horizon": horizon} for fs in sets]
    if args.json:
        out.write(to_json("rho", records))
    elif args.csv:
        out.write("word,n,rho,converged,horizon\n")
        for r in records:
            out.write(f"{r['word']},{r['n']},{r['rho']},{str(r['converged']).lower()},{horizon}\n")
    else:
        out.write(format_table(["n", "rho", "converged"],
                               [[r["n"], r["rho"], r["converged"]] for r in records]))
    return 0


def cmd_tau(word, args, horizon, out):
    rows = complexity_rows(word, args.n, horizon, True if args.split else None)
    if args.json:
        out.write(rows_to_json(rows))
    elif args.csv:
        out.write(rows_to_csv(rows))
    else:
        header = ["n", "tau", "tau_even", "tau_odd", "rho", "formula", "match", "converged"]
        out.write(format_table(header, [[getattr(r, h) if h != "match" else r.match
                                         for h in header] for r in rows]))
    return 0


def cmd_perm(word, args, horizon, out):
    out.write(f"{extract_subperm(word, args.at, args.len)}\n")
    return 0


def cmd_delta(word, args, horizon, out):
    table = table_for(word, horizon)
    res = delta(word, args.at, args.len, cross_check=True, table=table)
    image = restrict(res.image, args.restrict)
    record = res.to_record()
    if args.restrict:
        record[f"image_{args.restrict}"] = str(image)
    if args.json:
        out.write(to_json("delta", record))
        return 0
    sums = ["S_-1=0"] + [f"S_{j}={s}" for j, s in enumerate(res.profile.sums)]
    lines = [
        f"input:       {res.input}",
        f"window:      {res.window}",
        f"classes:     {' '.join(map(str, res.classes))}",
        f"class sizes: {' '.join(f'{c}:{s}' for c, s in zip(table.classes, res.profile.sizes))}",
        f"S table:     {' '.join(sums)}",
        f"image:       {res.image}",
    ]
    if args.restrict:
        lines.append(f"image {args.restrict}:     {image}")
    lines.append(f"cross-check: ok (extraction at {2 * args.at} in {word.derived('double').name})")
    out.write("\n".join(lines) + "\n")
    return 0


def cmd_classes(word, args, horizon, out):
    table = table_for(word, horizon)
    out.write(f"k0={table.k0} k1={table.k1} k={table.k} classes={table.n_classes} "
              f"threshold={threshold_for(word, horizon)}\n")
    out.write(format_table(["index", "class"], list(enumerate(table.classes))))
    return 0


def cmd_pairs(word, args, horizon, out):
    rows = []
    for n in args.n:
        perms = sorted(tau(word, n, horizon, split=False).perms, key=lambda p: p.ranks)
        for p, q in combinations(perms, 2):
            k = complementary_pair_type(p, q)
            if k is not None:
                rows.append([n, k, form_of(p) == form_of(q), str(p), str(q)])
    out.write(format_table(["n", "type", "same_form", "p", "q"], rows))
    return 0


def cmd_verify(word, args, horizon, out):
    report = verify_suite(args.suite, word, args.n, horizon)
    if args.json:
        out.write(suites_to_json([report]))
    elif args.csv:
        out.write("suite,word,n,status,observed,expected,converged\n")
        for r in report.rows:
            out.write(f"{report.suite},{report.word},{r.n},{r.status},\"{r.observed}\","
                      f"\"{r.expected}\",{str(r.converged).lower()}\n")
    else:
        out.write(f"suite {report.suite} on {report.word} (horizon {horizon})\n")
        out.write(format_table(["n", "status", "observed", "expected", "detail"],
                               [[r.n, r.status, r.observed, r.expected, r.detail]
                                for r in report.rows]))
        for r in report.rows:
            for c in r.counterexamples:
                out.write(f"counterexample n={r.n}: {c}\n")
        for note in report.notes:
            out.write(f"note: {note}\n")
        out.write(f"result: {report.status}\n")
    return 0 if report.passed else 1


COMMANDS = {"word": cmd_word, "rho": cmd_rho, "tau": cmd_tau, "perm": cmd_perm,
            "delta": cmd_delta, "classes": cmd_classes, "pairs": cmd_pairs,
            "verify": cmd_verify}


def _describe(args) -> str:
    params = {k: v for k, v in vars(args).items()
              if k not in ("verb", "spec", "config") and v not in (None, False)}
    shown = ", ".join(f"{k}={v.start}..{v.stop - 1}" if isinstance(v, range) else f"{k}={v}"
                      for k, v in sorted(params.items()))
    return f"{args.verb} {args.spec}" + (f" [{shown}]" if shown else "")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        horizon = int(args.horizon or config["horizon"])
        if horizon < 1:
            raise UsageError("horizon must be positive")
        word = Word(parse_spec(args.spec), hard_cap=int(config["hard_cap"]))
        return COMMANDS[args.verb](word, args, horizon, out)
    except (UsageError, WordSpecError) as exc:
        print(f"wordperm: error: {exc}", file=sys.stderr)
        return 2
    except (WordPermError, ValueError) as exc:
        print(f"wordperm: {_describe(args)}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
