"""Command line entry point: ``goppastrata <command> --config <path|name> ...``.

Exit status: 0 success, 1 usage error, 2 verification failure, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import config as cfg
from .agcode import encode, true_min_distance
from .curves import RATIONAL
from .decoder import decode_geometric, decode_toeplitz_g0
from .errors import GoppaStrataError, TooLargeToExhaust
from .harness import DEFAULT_BUDGET, ChannelModel, ExperimentSpec, add_words, random_message, rng_for, simulate, verify
from .secantgeom import stratify_all

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_word(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(",", " ").split()]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _table(rows: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def cmd_code(args) -> int:
    code = cfg.load_code(args.config)
    if args.action == "build":
        _emit(cfg.dumps(cfg.code_to_dict(code)), args.out)
    else:
        p = code.params()
        rows = [("field", repr(code.field)), ("curve", code.curve.family)] + [(k, v) for k, v in p.items()]
        rows.append(("multipliers", " ".join(map(str, code.multipliers))))
        _emit(_table(rows) + "\n\ngenerator:\n" + str(code.generator) + "\n\nparity:\n" + str(code.parity), args.out)
    return EXIT_OK


def cmd_encode(args) -> int:
    code = cfg.load_code(args.config)
    if args.message is not None:
        msg = parse_word(args.message)
    elif args.seed is not None:
        msg = random_message(code, rng_for(args.seed))
    else:
        raise UsageError("encode needs --message or --seed")
    cw = encode(code, msg)
    _emit(json.dumps({"message": list(msg), "codeword": list(cw)}), args.out)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    code = cfg.load_code(args.config)
    if args.word is None or args.weight is None or args.seed is None:
        raise UsageError("corrupt needs --word, --weight and --seed")
    x = parse_word(args.word)
    if len(x) != code.n:
        raise UsageError(f"word has length {len(x)}, expected n = {code.n}")
    if not 0 <= args.weight <= code.n:
        raise UsageError(f"weight must lie in [0, {code.n}]")
    y, e = ChannelModel(args.weight).transmit(code, x, rng_for(args.seed))
    _emit(json.dumps({"received": list(y), "error": list(e), "rng": "numpy.random.PCG64", "seed": args.seed}), args.out)
    return EXIT_OK


def cmd_decode(args) -> int:
    code = cfg.load_code(args.config)
    if args.word is not None:
        words = [parse_word(args.word)]
    elif args.input is not None:
        words = [parse_word(line) for line in Path(args.input).read_text().splitlines() if line.strip()]
    else:
        raise UsageError("decode needs --word or --in")
    names = ["geometric", "toeplitz"] if args.decoder == "both" else [args.decoder]
    if "toeplitz" in names and code.curve.family != RATIONAL:
        raise UsageError("the toeplitz decoder only applies to the rational family")
    funcs = {"geometric": decode_geometric, "toeplitz": decode_toeplitz_g0}
    lines = []
    for i, y in enumerate(words):
        if len(y) != code.n:
            raise UsageError(f"word {i} has length {len(y)}, expected n = {code.n}")
        for name in names:
            r = funcs[name](code, y)
            lines.append(json.dumps({"word": i, "decoder": name, **r.to_json()}, sort_keys=True))
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_strata(args) -> int:
    code = cfg.load_code(args.config)
    census = stratify_all(code, budget=args.budget)
    summary = census.summary()
    if args.out:
        Path(args.out).write_text(census.to_csv())
        Path(args.out).with_suffix(".json").write_text(cfg.dumps(summary) + "\n")
    rows = [("syndromes", summary["total"])]
    rows += [(f"h_D = {h}", n) for h, n in summary["stratum_sizes"].items()]
    rows += [(k, v) for k, v in summary["stability_counts"].items()]
    rows += [("multi-witness points", summary["multi_witness_points"]),
             ("fraction h_D > t", f"{summary['fraction_h_above_t']:.4f}")]
    print(_table(rows))
    return EXIT_OK


def cmd_verify(args) -> int:
    code = cfg.load_code(args.config)
    rep = verify(code, budget=args.budget, seed=args.seed or 0)
    print(_table([(c.name, f"{'PASS' if c.passed else 'FAIL'}  {c.detail}") for c in rep.checks]))
    if args.out:
        Path(args.out).write_text(cfg.dumps(rep.to_json()) + "\n")
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_distance(args) -> int:
    code = cfg.load_code(args.config)
    dmin = true_min_distance(code, budget=args.budget)
    _emit(json.dumps({"true_min_distance": dmin, "designed_distance": code.d}), args.out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    weights = [int(w) for w in args.weights.split(",")] if args.weights else [args.weight]
    if weights == [None]:
        raise UsageError("simulate needs --weights or --weight")
    try:
        spec = ExperimentSpec(args.config, weights, args.trials, args.seed, args.exhaustive, args.decoder,
                              args.budget, args.out)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = simulate(spec)
    if not args.out:
        print(cfg.dumps(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="config file path or shipped config name")
    common.add_argument("--seed", type=int)
    common.add_argument("--weight", type=int)
    common.add_argument("--decoder", choices=["geometric", "toeplitz", "both"], default="geometric")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--out")

    p = _Parser(prog="goppastrata", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("code", parents=[common], help="build or describe a code")
    c.add_argument("action", choices=["build", "info"])
    c.set_defaults(func=cmd_code)

    e = sub.add_parser("encode", parents=[common], help="encode a message")
    e.add_argument("--message")
    e.set_defaults(func=cmd_encode)

    k = sub.add_parser("corrupt", parents=[common], help="add a random error of fixed weight")
    k.add_argument("--word")
    k.set_defaults(func=cmd_corrupt)

    d = sub.add_parser("decode", parents=[common], help="decode received words")
    d.add_argument("--word")
    d.add_argument("--in", dest="input")
    d.set_defaults(func=cmd_decode)

    s = sub.add_parser("strata", parents=[common], help="secant-height census of all syndromes")
    s.set_defaults(func=cmd_strata)

    v = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("distance", parents=[common], help="exhaustive minimum distance")
    m.set_defaults(func=cmd_distance)

    r = sub.add_parser("simulate", parents=[common], help="run a decoding experiment")
    r.add_argument("--weights", help="comma-separated error weights")
    r.add_argument("--trials", type=int, default=1000)
    r.add_argument("--exhaustive", action="store_true")
    r.set_defaults(func=cmd_simulate)
    return p


def cli_run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except TooLargeToExhaust as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, GoppaStrataError, FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_run())


if __name__ == "__main__":
    main()
