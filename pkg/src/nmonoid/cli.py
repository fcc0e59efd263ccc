"""Command-line front end.

Exit codes: 0 for yes or success, 1 for a semantic no, 2 for any error.
"""

import argparse
import random
import sys
from pathlib import Path

from . import formats
from .circuits import circuit_equal, random_circuit
from .codes import complement, completion, enumeration_cap, get_cap, is_maximal_joinless
from .errors import CrossCheckFailed, NMonoidError, ParseError
from .monoid import eval_word, factorize_gmg, word_equal
from .oracle import oracle_compose_check, oracle_equal
from .sampling import random_joinless_code, random_rm0_table
from .tables import apply, classify, compose, normalize
from .words import Context

YES, NO, ERROR = 0, 1, 2


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise NMonoidError(f"{path}: {exc.strerror}") from None


def _load(parse, path):
    try:
        return parse(_read(path))
    except ParseError as exc:
        exc.path = path
        raise


def _emit(text, out=None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cross_check(ok, what):
    if not ok:
        raise CrossCheckFailed(f"oracle disagrees with {what}")


def cmd_check(args):
    f = _load(formats.parse_table, args.file)
    print(classify(f).name)
    return YES


def cmd_compose(args):
    f = _load(formats.parse_table, args.f)
    g = _load(formats.parse_table, args.g)
    h = compose(f, g)
    if args.oracle:
        _cross_check(oracle_compose_check(f, g, h), "compose")
    _emit(formats.format_table(h), args.output)
    return YES


def cmd_normalize(args):
    f = _load(formats.parse_table, args.file)
    phi = normalize(f)
    if args.oracle:
        _cross_check(oracle_equal(f, phi), "normalize")
    _emit(formats.format_table(phi), args.output)
    return YES


def cmd_equal(args):
    gens = _load(formats.parse_gens, args.gens)
    answer = word_equal(gens, args.u, args.v, certificate=args.certificate)
    if args.oracle:
        fu, fv = eval_word(gens, args.u), eval_word(gens, args.v)
        _cross_check(oracle_equal(fu, fv) == answer, "word_equal")
    print("equal" if answer else "not equal")
    return YES if answer else NO


def cmd_eval(args):
    gens = _load(formats.parse_gens, args.gens)
    f = eval_word(gens, args.word)
    try:
        x = formats.parse_word(gens.ctx, args.point)
    except ParseError as exc:
        raise NMonoidError(f"point: {exc.message}") from None
    y = apply(f, x)
    if y is None:
        print("undefined")
        return NO
    print(formats.format_word(y.coords))
    return YES


def _code_op(op):
    def run(args):
        C = _load(formats.parse_code, args.file)
        _emit(formats.format_code(op(C)), args.output)
        return YES

    return run


def cmd_maximal(args):
    C = _load(formats.parse_code, args.file)
    answer = is_maximal_joinless(C)
    print("maximal" if answer else "not maximal")
    return YES if answer else NO


def cmd_factorize(args):
    f = _load(formats.parse_table, args.file)
    fac = factorize_gmg(f)
    if args.oracle:
        _cross_check(oracle_equal(compose(fac.g2, compose(fac.h, fac.g1)), normalize(f)),
                     "factorize")
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    for name in ("g2", "h", "g1"):
        (out / f"{name}.nm").write_text(formats.format_table(getattr(fac, name)), encoding="utf-8")
    print(f"case {fac.case}")
    return YES


def cmd_circuit_equal(args):
    c1 = _load(formats.parse_circuit, args.c1)
    c2 = _load(formats.parse_circuit, args.c2)
    answer = circuit_equal(c1, c2, cross_check=args.oracle)
    print("equal" if answer else "not equal")
    return YES if answer else NO


def cmd_random(args):
    rng = random.Random(args.seed)
    if args.kind == "circuit":
        c = random_circuit(rng, args.inputs, args.gates)
        sys.stdout.write(formats.format_circuit(c))
        return YES
    ctx = Context(args.n, args.k)
    if args.kind == "table":
        sys.stdout.write(formats.format_table(random_rm0_table(rng, ctx, args.maxlen, nonzero=True)))
    else:
        sys.stdout.write(formats.format_code(random_joinless_code(rng, ctx, args.maxlen)))
    return YES


def _global_flags(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--cap", type=int, default=default, help="enumeration cap")
    parser.add_argument(
        "--oracle",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="cross-check results with the brute-force oracle",
    )
    parser.add_argument("--seed", type=int, default=default, help="seed for random")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    parser = argparse.ArgumentParser(
        prog="nmonoid", description="Right-ideal morphisms of n-dimensional free monoids."
    )
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "validate a table and print its class")
    p.add_argument("file")
    p = add("compose", cmd_compose, "table of F o G (G acts first)")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("-o", "--output")
    p = add("normalize", cmd_normalize, "normal form of a table")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p = add("equal", cmd_equal, "decide the word problem")
    p.add_argument("-g", "--gens", required=True)
    p.add_argument("--certificate", action="store_true", help="use the truncated certificate")
    p.add_argument("u")
    p.add_argument("v")
    p = add("eval", cmd_eval, "apply an evaluated word to a point")
    p.add_argument("-g", "--gens", required=True)
    p.add_argument("-w", "--word", required=True)
    p.add_argument("-x", "--point", required=True)
    for name, op, text in (
        ("complete", completion, "complete a joinless code to a maximal one"),
        ("complement", complement, "elements added by the completion"),
    ):
        p = add(name, _code_op(op), text)
        p.add_argument("file")
        p.add_argument("-o", "--output")
    p = add("maximal", cmd_maximal, "is the code a maximal joinless code")
    p.add_argument("file")
    p = add("factorize", cmd_factorize, "write g2.nm, h.nm, g1.nm with f = g2 h g1")
    p.add_argument("file")
    p.add_argument("-d", "--dir", default=".")
    p = add("circuit-equal", cmd_circuit_equal, "do two circuits compute the same function")
    p.add_argument("c1")
    p.add_argument("c2")
    p = add("random", cmd_random, "print a random table, code or circuit")
    p.add_argument("kind", choices=("table", "code", "circuit"))
    p.add_argument("-n", type=int, default=2)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--maxlen", type=int, default=2)
    p.add_argument("--inputs", type=int, default=3)
    p.add_argument("--gates", type=int, default=4)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else YES
    if args.seed is None:
        args.seed = 0
    try:
        if args.cap is not None and args.cap < 1:
            raise NMonoidError("--cap must be positive")
        with enumeration_cap(args.cap or get_cap()):
            return args.func(args)
    except ParseError as exc:
        where = getattr(exc, "path", "<input>")
        print(f"{where}:{exc.line}:{exc.column}: {exc.message}", file=sys.stderr)
    except ValueError as exc:  # includes every NMonoidError
        print(f"error: {exc}", file=sys.stderr)
    return ERROR


if __name__ == "__main__":
    sys.exit(main())
