"""Command-line interface.

Subcommands:

* ``gen``          generate one weight's relations (json / csv / tex / zeta)
* ``verify-table`` check weights 3-4 against the built-in reference table
* ``rank``         exact rank of a relation family at one weight
* ``member``       reduce a family against the confluence echelon basis
* ``eval``         evaluate one word numerically
* ``check``        run a seeded verification suite

Exit status: 0 when everything asked for passed, 1 on any failure,
2 on usage errors (argparse's convention).
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .linalg import conjectural_dimension, in_span, rank, to_vector
from .numeric import PrecisionConfig, eval_hyperlog, eval_hyperlog_mp, eval_mzv
from .reference import verify_reference_table
from .relations import generate_confluence, generate_duality, generate_rds
from .serialize import record_to_json, records_to_csv, records_to_tex
from .suites import SUITES, run_suite
from .words import ONE, Z, contains, in_a0, parse_word, render_word
from .zeta import to_zeta_string


def _cmd_gen(args) -> int:
    records = generate_confluence(args.weight, mode=args.mode)
    if args.nonzero:
        records = [r for r in records if not r.is_zero()]
    if args.format == "json":
        for rec in records:
            print(record_to_json(rec))
    elif args.format == "csv":
        sys.stdout.write(records_to_csv(records))
    elif args.format == "tex":
        sys.stdout.write(records_to_tex(records))
    else:  # zeta
        for rec in records:
            print(f"{rec.source}: {rec.zeta_form} = 0")
    return 0


def _cmd_verify_table(args) -> int:
    rows = verify_reference_table()
    failed = 0
    for src, ok, detail in rows:
        print(f"{'PASS' if ok else 'FAIL'}  {src}: {detail}")
        failed += not ok
    print(f"{len(rows) - failed}/{len(rows)} rows verified")
    return 1 if failed else 0


def _families(name: str, k: int):
    gens = {
        "cf": lambda: generate_confluence(k),
        "rds": lambda: generate_rds(k),
        "duality": lambda: generate_duality(k),
    }
    if name == "all":
        return {f: g() for f, g in gens.items()}
    return {name: gens[name]()}


def _cmd_rank(args) -> int:
    k = args.weight
    for family, records in _families(args.family, k).items():
        vecs = [to_vector(r.body, k) for r in records]
        r, _ = rank(vecs, k)
        dim = 2 ** (k - 2) if k >= 2 else 1
        dk = conjectural_dimension(k)
        note = f"dim {dim}, conjectural dimension d_{k} = {dk}, dim - d_{k} = {dim - dk}"
        print(f"weight {k} {family}: {len(records)} generators, rank {r}  ({note})")
    return 0


def _cmd_member(args) -> int:
    k = args.weight
    base = generate_confluence(k)
    _, basis = rank([to_vector(r.body, k) for r in base], k)
    records = generate_rds(k) if args.family == "rds" else generate_duality(k)
    failed = 0
    for rec in records:
        ok = in_span(rec.body, basis)
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {rec.family} {rec.source}: "
              f"{'inside' if ok else 'OUTSIDE'} the confluence span")
    print(f"{len(records) - failed}/{len(records)} generators inside the span "
          f"(confluence rank {basis.rank})")
    return 1 if failed else 0


def _cmd_eval(args) -> int:
    from mpmath import mp

    from .algebra import NCPoly

    w = parse_word(args.word)
    cfg = PrecisionConfig(digits=args.digits)
    if w != 1 and in_a0(w):
        val = eval_mzv(w, cfg)
        print(f"L({render_word(w)}) = {mp.nstr(val, cfg.digits)}")
        print(f"zeta form: {to_zeta_string(NCPoly._raw({w: 1}))}")
        return 0
    if args.z is None:
        print("error: this word needs --z R (real, > 1)", file=sys.stderr)
        return 2
    if contains(w, Z) and contains(w, ONE):
        val = eval_hyperlog(w, args.z, cfg=cfg)
        print(f"L({render_word(w)}; z={args.z}) = {val}"
              "  (mixed-letter quadrature, double precision)")
    else:
        val = eval_hyperlog_mp(w, args.z, cfg)
        print(f"L({render_word(w)}; z={args.z}) = {mp.nstr(val, cfg.digits)}")
    return 0


def _cmd_check(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        results = run_suite(name, max_weight=args.max_weight, samples=args.samples,
                            seed=args.seed)
        print(f"[{name}]")
        for res in results:
            print(" " + res.line())
            failed += not res.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mzv", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"mzv {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate relations at one weight")
    g.add_argument("--weight", type=int, required=True)
    g.add_argument("--mode", choices=("shuffle", "stuffle"), default="shuffle")
    g.add_argument("--nonzero", action="store_true", help="drop zero bodies")
    g.add_argument("--format", choices=("json", "csv", "tex", "zeta"), default="json")
    g.set_defaults(func=_cmd_gen)

    v = sub.add_parser("verify-table", help="check weights 3-4 against the reference table")
    v.set_defaults(func=_cmd_verify_table)

    r = sub.add_parser("rank", help="exact rank of a relation family")
    r.add_argument("--weight", type=int, required=True)
    r.add_argument("--family", choices=("cf", "rds", "duality", "all"), default="cf")
    r.set_defaults(func=_cmd_rank)

    m = sub.add_parser("member", help="span-inclusion report against the confluence basis")
    m.add_argument("--weight", type=int, required=True)
    m.add_argument("--family", choices=("rds", "duality"), required=True)
    m.set_defaults(func=_cmd_member)

    e = sub.add_parser("eval", help="evaluate one word numerically")
    e.add_argument("--word", required=True)
    e.add_argument("--z", type=float, default=None, help="puncture position (real > 1)")
    e.add_argument("--digits", type=int, default=30)
    e.set_defaults(func=_cmd_eval)

    c = sub.add_parser("check", help="run a verification suite")
    c.add_argument("--suite", choices=(*sorted(SUITES), "all"), default="all")
    c.add_argument("--max-weight", type=int, default=5)
    c.add_argument("--samples", type=int, default=100)
    c.add_argument("--seed", type=int, default=20260809)
    c.set_defaults(func=_cmd_check)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
