"""Command line front end.

`superlab verify` replays the packaged check suites and writes a JSON
report whose content is deterministic for a fixed seed.  `check`, `eval`,
`envelope`, `young`, and `catalog` expose the underlying operations one at
a time: vanishing checks with witnesses, single evaluations, Grassmann
envelope export, Young symmetrizers on a word, and catalog inspection.

Exit codes: 0 when every requested check passes (or the command produced
its output), 1 when a check fails, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .catalog import CONSTRUCTORS, standard_entries
from .superalgebras import envelope, evaluate, is_identity, is_superidentity, to_json
from .polynomials import superize
from .suites import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_SEED,
    SUITE_NAMES,
    SuiteError,
    witness_str,
    parse_element,
    resolve_algebra,
    resolve_entry,
    resolve_polys,
    run_suite,
)
from .tableaux import YoungTable, format_assoc_poly, phi, psi

__all__ = ["main"]


def _env_seed():
    raw = os.environ.get("SUPERLAB_SEED")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise SuiteError(f"SUPERLAB_SEED must be an integer, got {raw!r}") from None


def _pick_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = _env_seed()
    if env is not None:
        return env
    return DEFAULT_SEED


def _parse_mapping(text: str, what: str) -> dict:
    """``"1=e,2=a1+x"`` to {1: "e", 2: "a1+x"}."""
    out = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, eq, value = chunk.partition("=")
        if not eq or not value.strip():
            raise SuiteError(f"bad {what} entry {chunk!r}, expected VAR=VALUE")
        try:
            var = int(key)
        except ValueError:
            raise SuiteError(f"{what} variable {key!r} is not an integer") from None
        out[var] = value.strip()
    if not out:
        raise SuiteError(f"empty {what} mapping")
    return out


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    report = run_suite(
        suite=args.suite,
        manifest=args.manifest,
        jobs=args.jobs,
        seed=_pick_seed(args),
        max_degree=args.max_degree,
    )
    for r in report.results:
        mark = "ok  " if r.ok else "FAIL"
        print(f"{mark} {r.id} - {r.detail}")
    print(report.summary())
    if args.report:
        Path(args.report).write_text(report.to_json())
        print(f"report written to {args.report}")
    return 0 if report.ok else 1


def _cmd_check(args) -> int:
    A = resolve_algebra(args.algebra)
    polys = resolve_polys(args.poly, args.max_degree)
    checker = is_superidentity if args.mode == "superidentity" else is_identity
    for f in polys:
        ok, w = checker(A, f)
        if not ok:
            print(f"fails: {witness_str(w)}")
            return 1
    print("holds")
    return 0


def _cmd_eval(args) -> int:
    A = resolve_algebra(args.algebra)
    polys = resolve_polys(args.poly, args.max_degree)
    if len(polys) != 1:
        raise SuiteError("eval needs a reference to a single polynomial")
    assign_raw = _parse_mapping(args.assign, "assignment")
    parities = {v: 0 for v in assign_raw}
    if args.parities:
        for v, p in _parse_mapping(args.parities, "parity").items():
            if p not in ("0", "1"):
                raise SuiteError(f"parity for variable {v} must be 0 or 1")
            parities[v] = int(p)
    assign = {v: parse_element(A, expr) for v, expr in assign_raw.items()}
    val = evaluate(superize(polys[0], parities), A, assign)
    print(repr(val) if val.coords else "0")
    return 0


def _cmd_envelope(args) -> int:
    A = resolve_algebra(args.algebra)
    E = envelope(A, args.n)
    text = to_json(E.to_table())
    if args.out:
        Path(args.out).write_text(text)
        print(f"{E.name}: dimension {E.dim}, written to {args.out}")
    else:
        sys.stdout.write(text)
        print(f"{E.name}: dimension {E.dim}", file=sys.stderr)
    return 0


def _cmd_young(args) -> int:
    filling = None
    if args.filling:
        filling = [
            [int(tok) for tok in row.split()]
            for row in args.filling.split(";")
        ]
    try:
        t = YoungTable(args.rows, args.cols, filling)
    except ValueError as exc:
        raise SuiteError(str(exc)) from None
    word = tuple(int(tok) for tok in args.word.split())
    op = phi if args.fn == "phi" else psi
    print(format_assoc_poly(op(t, word)))
    return 0


def _cmd_catalog(args) -> int:
    if args.catalog_cmd == "list":
        for entry in standard_entries():
            A = entry.algebra
            varieties = ", ".join(entry.varieties) or "-"
            print(f"{entry.name}  dim {A.dim}  [{varieties}]")
        return 0
    # export
    if args.n:
        ref = f"catalog:{args.name}({','.join(str(v) for v in args.n)})"
    else:
        ref = f"catalog:{args.name}"
    entry = resolve_entry(ref)
    text = to_json(entry.algebra)
    if args.out:
        Path(args.out).write_text(text)
        print(f"{entry.name}: dimension {entry.algebra.dim}, "
              f"written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superlab",
        description="Verify identities and superidentities of the packaged "
                    "nonassociative superalgebras.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_degree(p):
        p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE,
                       help="cap for symmetric-sum polynomial families "
                            f"(default {DEFAULT_MAX_DEGREE})")

    p = sub.add_parser("verify", help="run a named check suite")
    p.add_argument("--suite", default="all",
                   choices=("all",) + SUITE_NAMES,
                   help="which suite to run (default all)")
    p.add_argument("--report", metavar="PATH",
                   help="write the JSON report here")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads (default 1)")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for randomized checks "
                        "(default $SUPERLAB_SEED, then a fixed constant)")
    p.add_argument("--manifest", metavar="PATH", default=None,
                   help="alternative TOML manifest (default: packaged)")
    add_degree(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("check", help="check one polynomial on one algebra")
    p.add_argument("--algebra", required=True,
                   help="catalog:NAME, catalog:NAME:ARG, or file:PATH")
    p.add_argument("--poly", required=True,
                   help="lib:NAME, family:NAME:ARG, or polynomial text")
    p.add_argument("--mode", default="superidentity",
                   choices=("superidentity", "identity"),
                   help="graded check with Koszul signs, or sign-free "
                        "(default superidentity)")
    add_degree(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("eval", help="evaluate one polynomial at a point")
    p.add_argument("--algebra", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--assign", required=True, metavar="MAP",
                   help='assignment like "1=e,2=x,3=a1+x"')
    p.add_argument("--parities", metavar="MAP", default=None,
                   help='variable parities like "1=0,2=1" (default all 0)')
    add_degree(p)
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("envelope",
                       help="export a Grassmann envelope as algebra JSON")
    p.add_argument("--algebra", required=True)
    p.add_argument("--n", type=int, required=True,
                   help="number of Grassmann generators")
    p.add_argument("--out", metavar="PATH",
                   help="write JSON here instead of stdout")
    p.set_defaults(handler=_cmd_envelope)

    p = sub.add_parser("young", help="print a Young symmetrizer of a word")
    p.add_argument("fn", choices=("phi", "psi"),
                   help="column-then-row or row-then-column symmetrizer")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--word", required=True, metavar="LETTERS",
                   help='word to symmetrize, like "1 2 3 4"')
    p.add_argument("--filling", metavar="ROWS", default=None,
                   help='explicit filling, rows separated by ";", '
                        'like "1 2;3 4" (default row-major)')
    p.set_defaults(handler=_cmd_young)

    p = sub.add_parser("catalog", help="list or export catalog entries")
    csub = p.add_subparsers(dest="catalog_cmd", required=True)
    pl = csub.add_parser("list", help="list entries with dimensions")
    pl.set_defaults(handler=_cmd_catalog)
    pe = csub.add_parser("export", help="export one entry as algebra JSON")
    pe.add_argument("--name", required=True,
                    help="constructor name, like jord_Bn")
    pe.add_argument("--n", type=int, action="append", default=[],
                    help="constructor argument (repeat for several)")
    pe.add_argument("--out", metavar="PATH",
                    help="write JSON here instead of stdout")
    pe.set_defaults(handler=_cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except SuiteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
