"""Command line front end.

Machine output is one key=value pair per line; --pretty switches to a
human layout.  Exit codes: 0 success, 1 negative verdict (eq, check),
2 parse error, 3 precondition failure, 4 internal assertion.
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys
import time

from .analysis import Analysis, equal, format_main_path
from .context import apply_all, hole_type, plug
from .formula import BOOL, BOOL_ALT, FormulaSyntaxError, format_imp, parse_type
from .lam import (
    EnumerationBoundExceeded, TermError, alt_type_probe, assign_term, boolean_nets,
    classify, closed_forms, enumerate_normal, format_table, format_term,
    read_boolean, truth_table,
)
from .net import NetSyntaxError, dr_check, format_net, is_proof_net, node_text, parse_net, validate_structure
from .rewrite import format_trace, normalize
from .separation import SeparationError, instantiate_net, separate

PARSE_ERRORS = (FormulaSyntaxError, NetSyntaxError, TermError)


class Report:
    def __init__(self, pretty=False, out=None):
        self.pretty = pretty
        self.out = out or sys.stdout

    def kv(self, key, value):
        if self.pretty:
            print(f"{key.replace('_', ' ')}: {value}", file=self.out)
        else:
            print(f"{key}={value}", file=self.out)

    def text(self, s):
        self.out.write(s if s.endswith("\n") else s + "\n")


def _read(path) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def read_net(path):
    return parse_net(_read(path))


def _type(text):
    return parse_type(text).formula


# -- commands ----------------------------------------------------------------

def cmd_check(args, rep):
    net = read_net(args.net)
    problems = validate_structure(net)
    for p in problems:
        rep.kv("error", p)
    rep.kv("structure", "invalid" if problems else "ok")
    if problems:
        return 1
    ok = dr_check(net, method=args.method)
    rep.kv("dr", "pass" if ok else "fail")
    rep.kv("proof_net", "yes" if ok and is_proof_net(net) else "no")
    rep.kv("conclusions", " ".join(node_text(net.nodes[c]) for c in net.conclusions()))
    return 0 if ok else 1


def cmd_normalize(args, rep):
    net = read_net(args.net)
    trace = []
    rng = random.Random(args.seed) if args.strategy == "random" else None
    out = normalize(net, strategy=args.strategy, rng=rng, trace=trace)
    text = format_net(out)
    if args.output:
        _write(args.output, text)
        rep.kv("steps", len(trace))
        rep.kv("output", args.output)
    else:
        rep.text(text)
    if args.trace:
        _write(args.trace, format_trace(trace, tsv=args.trace_format == "tsv"))
    return 0


def cmd_eq(args, rep):
    a, b = normalize(read_net(args.a)), normalize(read_net(args.b))
    same = equal(a, b)
    if args.dump_paths:
        for tag, net in (("a", a), ("b", b)):
            an = Analysis(net)
            for v in an.roots():
                for mp in an.paths(v):
                    rep.kv(f"path_{tag}", format_main_path(net, mp, an.addr))
    rep.kv("equal", "true" if same else "false")
    return 0 if same else 1


def cmd_enumerate(args, rep):
    a = _type(args.type)
    nets = enumerate_normal(a)
    if args.count:
        rep.text(str(len(nets)))
        return 0
    if args.emit == "nets":
        # keep the output a valid net file when a single net is selected
        rep.text(f"# type={format_imp(a)}\n# count={len(nets)}")
    else:
        rep.kv("type", format_imp(a))
        rep.kv("count", len(nets))
    picked = list(enumerate(nets, 1))
    if args.index is not None:
        if not 1 <= args.index <= len(nets):
            raise SeparationError(f"index {args.index} out of range 1..{len(nets)}")
        picked = [picked[args.index - 1]]
    for i, net in picked:
        if args.emit == "terms":
            rep.kv(f"term_{i}", format_term(assign_term(net)))
        elif args.emit == "nets":
            rep.text(f"# net {i}\n" + format_net(net))
        elif args.emit == "table":
            n = _arity_over(a)
            rep.kv(f"table_{i}", "".join(map(str, truth_table(net, n))))
    return 0


def _arity_over(a):
    n = 0
    while a != BOOL:
        if getattr(a, "left", None) != BOOL:
            raise SeparationError("truth tables need a type B -o ... -o B")
        a, n = a.right, n + 1
    return n


def cmd_classify(args, rep):
    n = args.n
    got = classify(n, exhaustive=not args.formula_only)
    want = closed_forms(n)
    for k in ("a", "b", "c", "d", "total", "nonconstant", "distinct"):
        rep.kv(k, got[k])
    for k in ("a", "b", "c", "d", "total", "nonconstant", "distinct"):
        rep.kv(f"formula_{k}", want[k])
    rep.kv("matches_formula", "true" if all(got[k] == want[k] for k in want) else "false")
    return 0


def _boolean_arg(text):
    if text in ("0", "1"):
        return boolean_nets()[int(text)]
    return read_net(text)


def cmd_eval(args, rep):
    fun = read_net(args.net)
    if args.plug:
        arg = read_net(args.plug)
        if arg.conclusion_formula() != hole_type(fun):
            arg = instantiate_net(arg, BOOL)
        fun = plug(fun, arg)
    if args.table is not None:
        table = truth_table(normalize(fun), args.table)
        rep.text(format_table(table, args.table))
        return 0
    value = read_boolean(apply_all(fun, [_boolean_arg(x) for x in args.args]))
    rep.text(str(value))
    return 0


def cmd_separate(args, rep):
    if args.all_pairs:
        return _separate_all(args, rep)
    if not (args.a and args.b):
        raise SeparationError("separate needs two net files or --all-pairs TYPE")
    t1, t2 = read_net(args.a), read_net(args.b)
    res = separate(t1, t2)
    for name, conc in res.stages:
        rep.kv(f"stage_{name}", conc)
    rep.kv("composition_1", res.compositions[0])
    rep.kv("composition_2", res.compositions[1])
    rep.kv("rule", res.assignment.rule)
    rep.kv("assignment", res.assignment)
    rep.kv("negated", "true" if res.negated else "false")
    rep.kv("context_hole", format_imp(hole_type(res.context)))
    rep.kv("context_nodes", len(res.context.nodes))
    rep.kv("plug_1", res.results[0])
    rep.kv("plug_2", res.results[1])
    text = format_net(res.context)
    if args.output:
        _write(args.output, text)
        rep.kv("output", args.output)
    elif args.emit_context:
        rep.text(text)
    return 0


def _separate_all(args, rep):
    a = _type(args.all_pairs)
    nets = enumerate_normal(a)
    passed = failed = 0
    start = time.perf_counter()
    for x, y in itertools.combinations(nets, 2):
        try:
            separate(x, y)
            passed += 1
        except AssertionError:
            failed += 1
    rep.kv("type", format_imp(a))
    rep.kv("nets", len(nets))
    rep.kv("pairs", passed + failed)
    rep.kv("passed", passed)
    rep.kv("failed", failed)
    if args.verbose:
        rep.kv("seconds", f"{time.perf_counter() - start:.2f}")
    return 0 if not failed else 4


def cmd_probe(args, rep):
    r = alt_type_probe(args.max_n)
    rep.kv("type", format_imp(BOOL_ALT))
    rep.kv("booleans", r["count"])
    for n, tables in r["tables"].items():
        rep.kv(f"functions_{n}", " ".join("".join(map(str, t)) for t in tables))
    rep.kv("constant_found", "true" if r["constant_found"] else "false")
    rep.kv("all_parity", "true" if r["all_parity"] else "false")
    return 0


# -- wiring ------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="imllnets", description="IMLL proof nets and separation")
    p.add_argument("--pretty", action="store_true", help="human readable output")
    p.add_argument("--verbose", action="store_true", help="add timings to reports")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="validate a net and run the correctness criterion")
    s.add_argument("net")
    s.add_argument("--method", choices=["auto", "exhaustive", "contract"], default="auto")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("normalize", help="cut elimination and eta expansion")
    s.add_argument("net")
    s.add_argument("-o", "--output")
    s.add_argument("--trace", help="write the reduction trace to this file")
    s.add_argument("--trace-format", choices=["text", "tsv"], default="text")
    s.add_argument("--strategy", choices=["default", "random"], default="default")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(run=cmd_normalize)

    s = sub.add_parser("eq", help="compare normal forms; exit 0 if equal, 1 if not")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--dump-paths", action="store_true")
    s.set_defaults(run=cmd_eq)

    s = sub.add_parser("enumerate", help="closed normal nets of a type")
    s.add_argument("type")
    s.add_argument("--count", action="store_true", help="print only the count")
    s.add_argument("--emit", choices=["terms", "nets", "table"])
    s.add_argument("--index", type=int, help="only the i-th net (1-based)")
    s.set_defaults(run=cmd_enumerate)

    s = sub.add_parser("classify", help="case counts for B^n -o B")
    s.add_argument("n", type=int)
    s.add_argument("--formula-only", action="store_true", help="closed forms without enumerating")
    s.set_defaults(run=cmd_classify)

    s = sub.add_parser("eval", help="boolean value of a net applied to arguments")
    s.add_argument("net")
    s.add_argument("args", nargs="*", help="0, 1 or net files of B")
    s.add_argument("--plug", help="treat NET as a context and plug this net first")
    s.add_argument("--table", type=int, metavar="N", help="print the truth table over N arguments")
    s.set_defaults(run=cmd_eval)

    s = sub.add_parser("separate", help="synthesize a context sending A to 0 and B to 1")
    s.add_argument("a", nargs="?")
    s.add_argument("b", nargs="?")
    s.add_argument("-o", "--output", help="write the context here")
    s.add_argument("--emit-context", action="store_true", help="print the context after the report")
    s.add_argument("--all-pairs", metavar="TYPE", help="separate every pair of nets of TYPE")
    s.set_defaults(run=cmd_separate)

    s = sub.add_parser("probe", help="definable functions over B'")
    s.add_argument("--max-n", type=int, default=2)
    s.set_defaults(run=cmd_probe)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    rep = Report(pretty=args.pretty)
    try:
        return args.run(args, rep)
    except PARSE_ERRORS as e:
        print(f"error=parse: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error=io: {e}", file=sys.stderr)
        return 3
    except (SeparationError, EnumerationBoundExceeded, ValueError) as e:
        print(f"error=precondition: {e}", file=sys.stderr)
        return 3
    except AssertionError as e:
        print(f"error=internal: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
