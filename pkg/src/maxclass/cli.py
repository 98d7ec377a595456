"""Command-line front end.

Every subcommand reads and writes the JSON sequence format.  Exit status:
0 when all checked assertions hold, 1 when one is violated, 2 when a node
or time limit cut a search short.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .algebra import CentralizerSequence, check_consistency, lie_power_profile
from .constituents import check_constituent_bounds, split_constituents
from .constructions import (ABELIAN_MAXIMAL_IDEAL, CODIM2_ABELIAN, exceptional_sequence,
                            exceptional_simulate, metabelian_sequence, witt_sequence)
from .harness.reports import verify_first_length, verify_length2q, witt_reduction_obstruction
from .harness.search import SearchConfig, search_sequences
from .polyclass import allowed_lemma_pairs, classify_lemma, classify_theorem
from .scalar import Scalar
from .transforms import normalize, subalgebra_from_type1, translate, ugolini_extend

OK, VIOLATED, LIMITED = 0, 1, 2


def _read_seq(args) -> CentralizerSequence:
    if not args.input:
        raise SystemExit("--input is required")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    return CentralizerSequence.from_json(text)


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=None)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _degree(args, seq) -> int:
    return args.degree if args.degree is not None else seq.degree


def cmd_check(args) -> int:
    seq = _read_seq(args)
    report = check_consistency(seq, _degree(args, seq), workers=args.threads)
    _emit(args, report.to_dict())
    return OK if report.consistent else VIOLATED


def cmd_constituents(args) -> int:
    seq = _read_seq(args)
    if args.degree is not None:
        seq = seq.to_degree(args.degree)
    profile = split_constituents(seq)
    out = profile.to_dict()
    bounds = check_constituent_bounds(profile)
    out["bounds"] = bounds.to_dict()
    if seq.n >= 2:
        out["lie_power_profile"] = list(lie_power_profile(seq, seq.degree).degrees)
    _emit(args, out)
    return OK if bounds.ok else VIOLATED


def cmd_translate(args) -> int:
    seq = _read_seq(args)
    _emit(args, translate(seq, Scalar.parse(args.delta, seq.characteristic)).to_dict())
    return OK


def cmd_subalgebra(args) -> int:
    _emit(args, subalgebra_from_type1(_read_seq(args), args.n).to_dict())
    return OK


def cmd_extend(args) -> int:
    seq = _read_seq(args)
    for _ in range(args.times):
        seq = ugolini_extend(seq)
    _emit(args, seq.to_dict())
    return OK


def cmd_normalize(args) -> int:
    _emit(args, normalize(_read_seq(args)).to_dict())
    return OK


def cmd_exceptional(args) -> int:
    build = exceptional_simulate if args.simulate else exceptional_sequence
    _emit(args, build(args.p, args.q, args.m, args.degree).to_dict())
    return OK


def cmd_metabelian(args) -> int:
    seq = metabelian_sequence(args.n, args.variant, args.degree, args.p)
    _emit(args, seq.to_dict())
    return OK


def cmd_witt(args) -> int:
    if args.reduce_mod:
        report = witt_reduction_obstruction(args.reduce_mod, args.degree)
        _emit(args, report.to_dict())
        return OK if report.obstructed else VIOLATED
    _emit(args, witt_sequence(args.degree).to_dict())
    return OK


def cmd_polyclass(args) -> int:
    if args.lemma:
        variant = "strict" if args.strict else "standard"
        pairs = classify_lemma(args.p, args.kmax, variant)
        allowed = allowed_lemma_pairs(args.p, args.kmax, variant)
        unexpected = [kv for kv in pairs if kv not in allowed]
        _emit(args, {"p": args.p, "kmax": args.kmax, "variant": variant,
                     "pairs": [{"k": k, "a": a} for k, a in pairs],
                     "unexpected": [{"k": k, "a": a} for k, a in unexpected],
                     "ok": not unexpected})
        return VIOLATED if unexpected else OK
    report = classify_theorem(args.p, args.kmax, samples=args.samples)
    _emit(args, report.to_dict())
    return OK if report.ok else VIOLATED


def cmd_search(args) -> int:
    prefix = tuple(int(v) for v in args.prefix.split(",")) if args.prefix else ()
    cfg = SearchConfig(args.p, args.n, args.degree, prefix=prefix, ell=args.ell,
                       normalize=not args.no_normalize, node_limit=args.node_limit,
                       time_limit=args.time_limit)
    res = search_sequences(cfg, threads=args.threads)
    lines = [s.to_json() for s in res.sequences]
    status = {"complete": res.complete, "limit": res.limit, "found": len(res.sequences),
              "nodes": res.nodes, "frontier": [list(f) for f in res.frontier]}
    if not res.complete:
        lines.append(json.dumps({"partial": status}))
    _emit(args, "\n".join(lines) if lines else "")
    logging.getLogger(__name__).info("search: %s", {k: v for k, v in status.items()
                                                    if k != "frontier"})
    return OK if res.complete else LIMITED


def cmd_verify_first_length(args) -> int:
    report = verify_first_length(args.p, args.degree, node_limit=args.node_limit,
                                 time_limit=args.time_limit, threads=args.threads)
    _emit(args, report.to_dict())
    if not report.ok:
        return VIOLATED
    return LIMITED if report.partial else OK


def cmd_verify_length2q(args) -> int:
    report = verify_length2q(args.p, args.q, args.degree, node_limit=args.node_limit,
                             time_limit=args.time_limit, threads=args.threads)
    _emit(args, report.to_dict())
    if not report.ok:
        return VIOLATED
    return OK if report.complete else LIMITED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="sequence JSON file, '-' for stdin")
    common.add_argument("--degree", type=int, help="degree bound D")
    common.add_argument("--output", help="write result here instead of stdout")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--node-limit", type=int, default=None)
    common.add_argument("--time-limit", type=float, default=None, help="seconds")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="maxclass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    add("check", cmd_check, "consistency report for a sequence")
    add("constituents", cmd_constituents, "constituent profile and length bounds")
    sp = add("translate", cmd_translate, "add a constant to every entry (type p only)")
    sp.add_argument("--delta", required=True)
    sp = add("subalgebra", cmd_subalgebra, "type-n subalgebra of a type-1 sequence")
    sp.add_argument("--n", type=int, required=True)
    sp = add("extend", cmd_extend, "extend type n to type n-1")
    sp.add_argument("--times", type=int, default=1)
    add("normalize", cmd_normalize, "scale the first nonzero entry to 1")
    sp = add("exceptional", cmd_exceptional, "sequence of E(p,q,m)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--simulate", action="store_true", help="use the divided-power realization")
    sp = add("metabelian", cmd_metabelian, "all-zero or all-one sequence")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, default=0, help="characteristic (0 for Q)")
    sp.add_argument("--variant", choices=[ABELIAN_MAXIMAL_IDEAL, CODIM2_ABELIAN],
                    default=CODIM2_ABELIAN)
    sp = add("witt", cmd_witt, "Witt sequence over Q")
    sp.add_argument("--reduce-mod", type=int, default=None,
                    help="instead search for a reduction modulo this prime")
    sp = add("polyclass", cmd_polyclass, "polynomial coefficient classification")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--lemma", action="store_true", help="classify (k, a) pairs")
    sp.add_argument("--strict", action="store_true", help="strict range for --lemma")
    sp.add_argument("--samples", type=int, default=None, help="random monic g instead of all")
    sp = add("search", cmd_search, "enumerate consistent prefixes (JSON lines)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ell", type=int, default=None)
    sp.add_argument("--prefix", default="", help="comma-separated leading entries")
    sp.add_argument("--no-normalize", action="store_true")
    sp = add("verify-first-length", cmd_verify_first_length, "first-length report at type p")
    sp.add_argument("--p", type=int, required=True)
    sp = add("verify-length2q", cmd_verify_length2q, "ordinariness when ell = 2q")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    return parser


_NEEDS_DEGREE = {"exceptional", "metabelian", "witt", "search", "verify-first-length",
                 "verify-length2q"}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command in _NEEDS_DEGREE and args.degree is None:
        parser.error(f"{args.command} needs --degree")
    try:
        return args.func(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VIOLATED


if __name__ == "__main__":
    sys.exit(main())
