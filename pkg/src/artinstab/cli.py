"""Command line entry point: ``artinstab verify | h1 | enumerate``.

Exit codes: 0 every check passed, 1 usage or input error, 2 a verifier
found a counterexample, 3 a cell or class cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .complex import DEFAULT_CELL_CAP, SCHEMA, build_filtration, check_simplicial_identities
from .diagram import (EMPTY_SEED, ArtinSequence, abelianization_rank, classify_finite_type,
                      format_diagram, parse_seed)
from .divisibility import coset_set, verify_decomposition
from .errors import ClassSizeExceeded, CounterexampleFound, DiagramError, ScaleExceeded
from .homology import connectivity_check
from .lemmas import verify_divisor_identities
from .shelling import shelling_report
from .word import DEFAULT_CLASS_CAP, get_monoid, set_default_class_cap

log = logging.getLogger("artinstab")

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _n_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo, hi


def _common(p: argparse.ArgumentParser, max_len=None):
    p.add_argument("--seed", default="empty", help="seed diagram file, or 'empty'")
    p.add_argument("--anchor", type=int, help="seed generator playing sigma_1")
    p.add_argument("--n", type=int)
    p.add_argument("--n-range", type=_n_range, metavar="A..B")
    p.add_argument("--max-len", type=int, default=max_len)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", metavar="PATH", help="write the JSON report here instead of stdout")
    p.add_argument("--cell-cap", type=int, default=DEFAULT_CELL_CAP)
    p.add_argument("--class-cap", type=int, default=DEFAULT_CLASS_CAP)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="artinstab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _common(sub.add_parser("verify", help="run every verifier on C^n(k), k <= max-len"),
            max_len=3)
    _common(sub.add_parser("h1", help="rank of H_1 per level (default levels 1..6)"))
    _common(sub.add_parser("enumerate", help="element and coset counts per length"), max_len=3)
    return parser


def load_sequence(seed: str, anchor: int | None) -> ArtinSequence:
    if seed == "empty":
        d, a = EMPTY_SEED, 1
    else:
        try:
            with open(seed, encoding="utf-8") as fh:
                d, a = parse_seed(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read seed file: {exc}") from None
    return ArtinSequence(d, a if anchor is None else anchor)


def _levels(args, lowest: int) -> list[int]:
    if args.n is not None and args.n_range is not None:
        raise UsageError("give --n or --n-range, not both")
    if args.n_range is not None:
        lo, hi = args.n_range
        ns = list(range(lo, hi + 1))
    else:
        ns = [2 if args.n is None else args.n]
    if any(n < lowest for n in ns):
        raise UsageError(f"levels must be >= {lowest}")
    return ns


def _check_bounds(args):
    if args.max_len is not None and args.max_len < 0:
        raise UsageError("--max-len must be >= 0")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if args.cell_cap < 1 or args.class_cap < 1:
        raise UsageError("caps must be positive")


def _emit(args, report: dict, out):
    text = json.dumps(report, sort_keys=True, indent=1) + "\n"
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_verify(args, out=sys.stdout) -> int:
    seq = load_sequence(args.seed, args.anchor)
    ns = _levels(args, 1)
    L = args.max_len
    report = {"schema": SCHEMA, "command": "verify", "seed": format_diagram(seq.seed, 1),
              "max_len": L, "configs": [], "status": "pass"}
    status = EXIT_OK
    for n in ns:
        cfg = {"n": n}
        report["configs"].append(cfg)
        try:
            log.info("n=%d: simplicial identities", n)
            cfg["simplicial"] = check_simplicial_identities(seq, n, min(L, 3)).to_dict()
            log.info("n=%d: divisor identities", n)
            cfg["identities"] = verify_divisor_identities(
                seq, max_i=min(L, 4), max_j=min(n, 3)).to_dict()
            d = seq.diagram(n)
            cfg["decomposition"] = [verify_decomposition(d, seq.sub_generators(p), L).to_dict()
                                    for p in range(n)]
            log.info("n=%d: shelling", n)
            shell = shelling_report(seq, n, L, cell_cap=args.cell_cap, jobs=args.jobs,
                                    raise_on_failure=False)
            cfg["shelling"] = shell.to_dict()
            if shell.counterexample is not None:
                raise CounterexampleFound(shell.counterexample["message"], shell.counterexample)
            log.info("n=%d: homology", n)
            cfg["connectivity"] = [
                connectivity_check(build_filtration(seq, n, k, cell_cap=args.cell_cap, jobs=args.jobs)).to_dict()
                for k in range(L + 1)]
        except CounterexampleFound as exc:
            cfg["counterexample"] = exc.context
            report["status"] = "fail"
            status = EXIT_COUNTEREXAMPLE
            break
        except (ScaleExceeded, ClassSizeExceeded) as exc:
            cfg["cap_exceeded"] = str(exc)
            report["status"] = "cap"
            status = EXIT_CAP
            break
    _emit(args, report, out)
    return status


def h1_table(seq: ArtinSequence, ns) -> dict:
    rows = []
    for n in ns:
        d = seq.diagram(n)
        rank, torsion = abelianization_rank(d)
        rows.append({"n": n, "rank": rank, "torsion": list(torsion),
                     "type": "+".join(classify_finite_type(d).names)})
    ranks = [r["rank"] for r in rows]
    stable_from = None
    for i in range(len(ranks)):
        if len(set(ranks[i:])) == 1:
            stable_from = rows[i]["n"]
            break
    tail = [r["rank"] for r in rows if r["n"] >= 2]
    return {"schema": SCHEMA, "command": "h1", "rows": rows, "stable_from": stable_from,
            "constant_from_2": len(set(tail)) <= 1}


def cmd_h1(args, out=sys.stdout) -> int:
    seq = load_sequence(args.seed, args.anchor)
    if args.n is None and args.n_range is None:
        args.n_range = (1, 6)
    table = h1_table(seq, _levels(args, 0))
    if args.json:
        _emit(args, table, out)
    else:
        out.write(f"{'n':>3}  {'rank H1':>7}  type\n")
        for r in table["rows"]:
            mark = "  <- stable" if r["n"] == table["stable_from"] else ""
            out.write(f"{r['n']:>3}  {r['rank']:>7}  {r['type']}{mark}\n")
    return EXIT_OK if table["constant_from_2"] else EXIT_COUNTEREXAMPLE


def enumerate_counts(seq: ArtinSequence, n: int, max_len: int) -> dict:
    d = seq.diagram(n)
    mon = get_monoid(d)
    total = [len(mon.elements_of_length(L)) for L in range(max_len + 1)]
    cosets = []
    for p in range(n):
        rep = verify_decomposition(d, seq.sub_generators(p), max_len)
        reduced = coset_set(d, seq.sub_generators(p), max_len)
        cosets.append({"p": p, "counts": rep.coset_counts, "submonoid_counts": rep.submonoid_counts,
                       "convolution_ok": rep.passed, "count": len(reduced)})
    return {"schema": SCHEMA, "command": "enumerate", "n": n, "max_len": max_len,
            "element_counts": total, "cosets": cosets}


def cmd_enumerate(args, out=sys.stdout) -> int:
    seq = load_sequence(args.seed, args.anchor)
    rows = [enumerate_counts(seq, n, args.max_len) for n in _levels(args, 0)]
    if args.json:
        _emit(args, {"schema": SCHEMA, "command": "enumerate", "levels": rows}, out)
        return EXIT_OK
    for r in rows:
        out.write(f"A+_{r['n']}  lengths 0..{r['max_len']}: {','.join(map(str, r['element_counts']))}\n")
        for c in r["cosets"]:
            ok = "ok" if c["convolution_ok"] else "FAIL"
            out.write(f"A+({r['n']};{c['p']}): {','.join(map(str, c['counts']))}  convolution {ok}\n")
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "h1": cmd_h1, "enumerate": cmd_enumerate}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    level = os.environ.get("ARTINSTAB_LOG", "error").upper()
    logging.basicConfig(level=getattr(logging, level, logging.ERROR), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        _check_bounds(args)
        set_default_class_cap(args.class_cap)
        return COMMANDS[args.command](args, out)
    except (UsageError, DiagramError) as exc:
        print(f"artinstab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CounterexampleFound as exc:
        print(f"artinstab: counterexample: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except (ScaleExceeded, ClassSizeExceeded) as exc:
        print(f"artinstab: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
