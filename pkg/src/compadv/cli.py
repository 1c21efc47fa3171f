"""Command-line front end. Every command prints JSON, except ``simulate`` which prints CSV."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import coding, competition, families, kraft, oracle, simulate
from .core import (CompAdvError, check_profile, format_number, source_from_dict,
                   source_to_dict)
from .verdict import Method

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


def _profile(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of lengths: {text!r}")


def _indices(text: str) -> frozenset[int]:
    if not text.strip():
        return frozenset()
    return frozenset(_profile(text))


def _source_arg(text: str):
    """JSON array/object, or the path of a file holding one."""
    if not text.lstrip().startswith(("[", "{")):
        path = Path(text)
        if not path.is_file():
            raise argparse.ArgumentTypeError(f"neither JSON nor a readable file: {text!r}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"bad source JSON: {exc}")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=None))


def _num(x, args):
    return format_number(x, args.float)


def _source_out(s, args) -> dict:
    d = source_to_dict(s)
    d["probabilities"] = [_num(p, args) for p in s.probabilities]
    return d


def cmd_huffman(args):
    s = source_from_dict(args.source)
    if args.all:
        profiles = sorted(coding.huffman_profiles(s))
        _emit({"profiles": [list(p) for p in profiles]})
        return
    _, p = coding.huffman(s)
    _emit({"profile": list(p), "expected_length": _num(coding.expected_length(s, p), args)})


def cmd_shannon_fano(args):
    s = source_from_dict(args.source)
    p = coding.shannon_fano(s)
    _emit({"profile": list(p), "expected_length": _num(coding.expected_length(s, p), args)})


def cmd_compete(args):
    s = source_from_dict(args.source)
    _emit(competition.compete(s, args.a, args.b).to_dict(args.float))


def cmd_check(args):
    s = source_from_dict(args.source)
    p = args.profile if args.profile is not None else coding.huffman(s)[1]
    method = Method(args.method)
    if method is Method.LEAF_CONDITION:
        tree = kraft.huffman_tree_for(s, check_profile(p, s.n))
        verdict = kraft.leaf_condition(s, tree, kraft.LeafScope(args.leaf_scope))
    else:
        verdict = kraft.is_competitively_optimal(s, p, method)
    out = verdict.to_dict()
    out["profile"] = list(p)
    _emit(out)


def cmd_exists(args):
    s = source_from_dict(args.source)
    ok, witness = kraft.exists_competitively_optimal_code(s)
    _emit({"exists": ok, "witness": None if witness is None else list(witness)})


def cmd_family(args):
    if args.name == "one-third":
        inst = families.family_one_third(args.n, args.eps)
    else:
        inst = families.family_sf_gap(args.n, args.eps)
    d = inst.to_dict()
    d["source"] = _source_out(inst.source, args)
    for key in ("predicted_advantage", "predicted_avg_length_gap", "avg_length_gap_bound"):
        value = getattr(inst, key)
        d[key] = None if value is None else _num(value, args)
    _emit(d)


def cmd_fixture(args):
    if args.name == "two-huffman":
        s, profiles = families.fixture_two_huffman(), families.TWO_HUFFMAN_PROFILES
    else:
        s, profiles = families.fixture_four_codes()
    _emit({"source": _source_out(s, args),
           "profiles": {k: list(v) for k, v in profiles.items()}})


def cmd_partition(args):
    _emit(kraft.huffman_kraft_partition(args.profile, args.subset).to_dict())


def cmd_completion(args):
    universe = args.universe if args.universe is not None else range(len(args.profile))
    b = kraft.kraft_completion(args.profile, universe, args.subset, args.j)
    _emit({"completion": sorted(b)})


def cmd_dominate(args):
    c = kraft.construct_dominating_profile(args.profile, args.u, args.v)
    out = {"profile": list(c)}
    if args.source is not None:
        s = source_from_dict(args.source)
        out["advantage"] = _num(competition.advantage(s, c, args.profile), args)
    _emit(out)


def cmd_simulate(args):
    cfg = simulate.ExperimentConfig(args.n_min, args.n_max, args.samples, args.seed,
                                    Method(args.method), kraft.LeafScope(args.leaf_scope))
    report = simulate.run_experiment(cfg, args.threads)
    if args.output:
        simulate.write_report(report, args.output, "json" if args.json else None)
    if args.json:
        if not args.output:
            _emit(report.to_dict())
    else:
        sys.stdout.write(simulate.format_csv(report))


def cmd_enumerate(args):
    if args.max_len is not None and args.max_len < 1 and args.n > 1:
        raise CompAdvError("max-len must be positive")
    profiles = list(oracle.enumerate_complete_profiles(args.n, args.max_len))
    out = {"n": args.n, "count": len(profiles)}
    if not args.count:
        out["profiles"] = [list(p) for p in profiles]
    _emit(out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--float", action="store_true",
                        help="print numbers as floats instead of exact rationals")

    parser = argparse.ArgumentParser(prog="compadv",
                                     description="Competitive optimality of prefix codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def with_source(p, required=True):
        p.add_argument("--source", type=_source_arg, required=required,
                       help="JSON array of probabilities (e.g. '[\"1/3\",\"2/3\"]') or a file")
        return p

    p = with_source(add("huffman", cmd_huffman, "Huffman length profile"))
    p.add_argument("--all", action="store_true", help="every profile reachable through ties")
    with_source(add("shannon-fano", cmd_shannon_fano, "Shannon-Fano length profile"))

    p = with_source(add("compete", cmd_compete, "compare two profiles symbol by symbol"))
    p.add_argument("--a", type=_profile, required=True)
    p.add_argument("--b", type=_profile, required=True)

    p = with_source(add("check", cmd_check, "competitive optimality verdict"))
    p.add_argument("--profile", type=_profile, default=None,
                   help="defaults to the canonical Huffman profile")
    p.add_argument("--method", choices=[m.value for m in Method], default="subset")
    p.add_argument("--leaf-scope", choices=["all", "root"], default="all")

    with_source(add("exists-optimal", cmd_exists,
                    "is any expected-length-optimal code competitively optimal"))

    p = add("family", cmd_family, "extremal source families")
    p.add_argument("--name", choices=["one-third", "sf-gap"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", required=True, help="rational, e.g. 1/30")

    p = add("fixture", cmd_fixture, "named example sources and codes")
    p.add_argument("--name", choices=["two-huffman", "four-codes"], required=True)

    p = add("partition", cmd_partition, "Huffman-Kraft partition of a subset")
    p.add_argument("--profile", type=_profile, required=True)
    p.add_argument("--subset", type=_indices, required=True)

    p = add("completion", cmd_completion, "complete a subset to Kraft sum 2^-j")
    p.add_argument("--profile", type=_profile, required=True)
    p.add_argument("--subset", type=_indices, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--universe", type=_indices, default=None)

    p = with_source(add("dominate", cmd_dominate, "build a code beating a profile"),
                    required=False)
    p.add_argument("--profile", type=_profile, required=True)
    p.add_argument("--u", type=_indices, required=True)
    p.add_argument("--v", type=_indices, required=True)

    p = add("simulate", cmd_simulate, "flat-Dirichlet Monte Carlo")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--method", choices=[m.value for m in simulate.SIM_METHODS],
                   default="leaf")
    p.add_argument("--leaf-scope", choices=["all", "root"], default="root")
    p.add_argument("--threads", type=int, default=None,
                   help=f"worker threads (default ${simulate.THREADS_ENV} or CPU count)")
    p.add_argument("--output", default=None, help="also write the report to this path")
    p.add_argument("--json", action="store_true", help="JSON report instead of CSV")

    p = add("enumerate", cmd_enumerate, "complete length profiles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--count", action="store_true", help="print only the count")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if getattr(args, "eps", None) is not None:
        from .core import parse_rational
        try:
            args.eps = parse_rational(args.eps)
        except ValueError as exc:
            print(f"compadv: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        args.func(args)
    except (CompAdvError, ValueError) as exc:
        print(f"compadv: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def main() -> None:
    sys.exit(run())
