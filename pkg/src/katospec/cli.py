"""Command line interface.

Exit codes: 0 for success or a true verdict, 1 for a false verdict,
2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from . import bits, io
from .enumeration import enumerate_monoids, enumerate_posets
from .errors import InputError, SearchSpaceTooLarge
from .exponential import exponential
from .monoid import monoid_from_json, spec
from .rings import check_exp_example, check_unions_of_primes, mult_monoid, ring_from_json, ring_spec
from .space import BasedSpace, FiniteSpace, soberify, specialization_order, to_dot
from .suite import run_suite, write_census_csv
from .theorems import brenner_report, classify, exp_characterization_report, hochster_report

log = logging.getLogger("katospec")


def _plain(x) -> FiniteSpace:
    return x.space if isinstance(x, BasedSpace) else x


def _emit(args, doc, poset=None, labels=None):
    if args.dot and poset is not None:
        sys.stdout.write(to_dot(poset, labels))
    else:
        sys.stdout.write(io.dumps(doc) + "\n")
    if args.plot and poset is not None:
        from .plotting import hasse_figure

        hasse_figure(poset, args.plot, labels)


def cmd_spec(args) -> int:
    s = spec(monoid_from_json(io.load(args.file)))
    labels = ["{" + ",".join(map(str, bits.to_list(p))) + "}" for p in s.points]
    _emit(args, s.to_json(), s.order, labels)
    return 0


def cmd_exp(args) -> int:
    x = io.space_from_json(io.load(args.file))
    if not isinstance(x, BasedSpace):
        x = BasedSpace(x, x.opens)
    e = exponential(x)
    labels = ["[" + ",".join(map(str, bits.to_list(p.rep))) + "]" for p in e.points]
    _emit(args, e.to_json(), specialization_order(e.based.space), labels)
    return 0


def cmd_check(args) -> int:
    x = _plain(io.space_from_json(io.load(args.file)))
    brenner = brenner_report(x)
    doc = {"brenner": brenner.to_json(), "hochster": hochster_report(x).to_json()}
    try:
        doc["expchar"] = exp_characterization_report(x).to_json()
    except (SearchSpaceTooLarge, InputError) as exc:
        doc["expchar"] = {"skipped": str(exc)}
    poset = specialization_order(x) if brenner.t0 else None
    _emit(args, doc, poset)
    return 0 if brenner.verdict else 1


def cmd_realize(args) -> int:
    x = _plain(io.space_from_json(io.load(args.file)))
    result = classify(x)
    _emit(args, result.to_json(), specialization_order(x) if result.report.t0 else None)
    return 0 if result.is_spectrum else 1


def cmd_sober(args) -> int:
    x = soberify(io.poset_from_json(io.load(args.file)))
    _emit(args, io.space_to_json(x), specialization_order(x))
    return 0


def cmd_ringspec(args) -> int:
    r = ring_from_json(io.load(args.file))
    unions, exp_ok = check_unions_of_primes(r), check_exp_example(r)
    doc = {
        "ring_primes": [[r.label(i) for i in bits.members(p)] for p in ring_spec(r)],
        "monoid_primes": [[r.label(i) for i in bits.members(p)] for p in spec(mult_monoid(r)).points],
        "unions_of_primes": unions,
        "exp_example": exp_ok,
    }
    _emit(args, doc)
    return 0 if unions and exp_ok else 1


def cmd_enumerate(args) -> int:
    if args.monoids is not None:
        doc = [m.to_json() for m in enumerate_monoids(args.monoids)]
    else:
        doc = [io.poset_to_json(p) for p in enumerate_posets(args.posets)]
    _emit(args, doc)
    return 0


def cmd_suite(args) -> int:
    start = time.perf_counter()
    rows, summary = run_suite(args.max_order, args.max_size, args.seed)
    log.info("suite finished in %.1fs", time.perf_counter() - start)
    sys.stdout.write(io.dumps({"summary": summary, "rows": rows}) + "\n")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        from .plotting import census_figures

        write_census_csv(rows, os.path.join(args.out, "census.csv"))
        census_figures(rows, args.out)
    return 0 if summary["all_pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--dot", action="store_true", help="DOT order diagram where one exists")
    common.add_argument("--plot", metavar="PNG", help="also draw the order diagram to this file")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="katospec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, what in [
        ("spec", cmd_spec, "monoid JSON"),
        ("exp", cmd_exp, "space JSON"),
        ("check", cmd_check, "space JSON"),
        ("realize", cmd_realize, "space JSON"),
        ("sober", cmd_sober, "poset JSON"),
        ("ringspec", cmd_ringspec, "ring JSON"),
    ]:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file", help=what)
        p.set_defaults(func=func)

    p = sub.add_parser("enumerate", parents=[common])
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--monoids", type=int, metavar="N")
    which.add_argument("--posets", type=int, metavar="N")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("suite", parents=[common])
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="DIR", help="write census.csv and figures here")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (InputError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
