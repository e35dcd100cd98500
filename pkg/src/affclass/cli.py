"""Command-line front end.

Exit codes: 0 success, 1 usage or validation error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .analysis import OPS, op_table, subclass_report
from .classifier import (
    affine_representative,
    check_index,
    class_size_log2,
    classify,
    fixed_positions,
    iter_member_rules,
    num_classes,
    partition,
    recursive_classes,
    signature,
)
from .config import FORMATS, RunConfig, ValidationError, check_materialize
from .serialize import format_rule
from .truthtable import TruthTable, from_bits, from_hex
from .verify import run_checks


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _read_function(args) -> TruthTable:
    given = [v for v in (args.rule, args.hex, args.bits) if v is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --rule, --hex, --bits")
    if args.rule is not None:
        if args.n is None:
            raise UsageError("--rule needs --n")
        if args.n > serialize.DECIMAL_MAX_N:
            raise UsageError(f"decimal --rule is limited to n <= {serialize.DECIMAL_MAX_N}; use --hex")
        if not args.rule.isdigit():
            raise ValidationError(f"not a decimal rule number: {args.rule!r}")
        return TruthTable(args.n, int(args.rule))
    f = from_hex(args.hex, args.n) if args.hex is not None else from_bits(args.bits)
    if args.n is not None and f.n != args.n:
        raise ValidationError(f"input encodes n={f.n}, not n={args.n}")
    return f


def cmd_fixed_positions(args, cfg: RunConfig) -> int:
    pos = list(fixed_positions(args.n))
    if cfg.output_format == "json":
        _emit(json.dumps({"n": args.n, "positions": pos}))
    else:
        _emit(",".join(map(str, pos)))
    return 0


def cmd_classify(args, cfg: RunConfig) -> int:
    f = _read_function(args)
    if f.n > cfg.max_n_table:
        raise ValidationError(f"n={f.n} exceeds the table cap {cfg.max_n_table}")
    k = classify(f)
    aff = affine_representative(f.n, k)
    report = {
        "n": f.n,
        "rule": format_rule(f.n, f.rule),
        "class": k,
        "signature": list(signature(f).bits),
        "affine": format_rule(f.n, aff.rule),
        "hd": (f.rule ^ aff.rule).bit_count(),
    }
    if cfg.output_format == "csv":
        keys = list(report)
        row = ["".join(map(str, v)) if isinstance(v, list) else v for v in report.values()]
        _emit(",".join(keys) + "\n" + ",".join(map(str, row)))
    else:
        _emit(json.dumps(report))
    return 0


def cmd_class(args, cfg: RunConfig) -> int:
    n, k = args.n, args.index
    if args.limit is None and not args.stream:
        check_materialize(n, cfg.max_n_materialize)
    if args.limit is not None and args.limit < 0:
        raise ValidationError("--limit must be non-negative")
    rules = iter_member_rules(n, k)
    if args.limit is not None:
        rules = (r for _, r in zip(range(args.limit), rules))
    if cfg.output_format == "json":
        _emit(serialize.members_to_json(n, k, rules))
    elif cfg.output_format == "csv":
        out = sys.stdout
        out.write("class,member\n")
        for r in rules:
            out.write(f"{k},{format_rule(n, r)}\n")
    else:
        out = sys.stdout
        for r in rules:
            out.write(f"{format_rule(n, r)}\n")
    return 0


def cmd_subclasses(args, cfg: RunConfig) -> int:
    report = subclass_report(args.n, args.index, cfg.max_n_materialize)
    render = {"json": serialize.report_to_json, "csv": serialize.report_to_csv,
              "text": serialize.report_to_text}[cfg.output_format]
    _emit(render(report))
    return 0


def cmd_table(args, cfg: RunConfig) -> int:
    n, k = args.n, args.index
    check_materialize(n, cfg.max_n_materialize)
    if cfg.output_format == "json":
        _emit(serialize.table_to_json(op_table(n, k, args.op, cfg.max_n_materialize)))
    elif cfg.output_format == "csv":
        serialize.write_table_csv(sys.stdout, n, k, args.op)
    else:
        table = op_table(n, k, args.op, cfg.max_n_materialize)
        width = len(str(int(table.cells.max()))) if table.cells.size else 1
        width = max(width, len(str(int(table.axis.max()))), len(args.op))
        head = [args.op.upper().rjust(width)] + [str(a).rjust(width) for a in table.axis.tolist()]
        lines = [" ".join(head)]
        for label, row in zip(table.axis.tolist(), table.cells.tolist()):
            lines.append(" ".join([str(label).rjust(width)] + [str(c).rjust(width) for c in row]))
        _emit("\n".join(lines))
    return 0


def cmd_affines(args, cfg: RunConfig) -> int:
    n = args.n
    rules = [format_rule(n, affine_representative(n, k).rule) for k in range(1, num_classes(n) + 1)]
    if cfg.output_format == "json":
        _emit(json.dumps({"n": n, "affines": rules}))
    elif cfg.output_format == "csv":
        _emit("class,affine\n" + "\n".join(f"{k},{r}" for k, r in enumerate(rules, start=1)))
    else:
        _emit(",".join(map(str, rules)))
    return 0


def cmd_partition(args, cfg: RunConfig) -> int:
    n = args.n
    if args.construction_order:
        if args.method != "recursive":
            raise UsageError("--construction-order only applies to --method recursive")
        classes = [(i, cls) for i, cls in enumerate(recursive_classes(n, cfg.max_n_materialize), 1)]
    else:
        part = partition(n, args.method, cfg.max_n_materialize)
        classes = [(k, part.members(k)) for k in range(1, len(part) + 1)]
    if cfg.output_format == "json":
        _emit(json.dumps({
            "n": n, "method": args.method,
            "classes": [{"class": k, "members": [format_rule(n, r) for r in cls]} for k, cls in classes],
        }))
    elif cfg.output_format == "csv":
        lines = ["class,member"] + [f"{k},{format_rule(n, r)}" for k, cls in classes for r in cls]
        _emit("\n".join(lines))
    else:
        _emit("\n".join(f"{k}: " + ",".join(str(format_rule(n, r)) for r in cls) for k, cls in classes))
    return 0


def cmd_verify(args, cfg: RunConfig) -> int:
    results = run_checks(args.n, args.golden, cfg.max_n_materialize)
    failed = [r for r in results if not r.passed]
    if cfg.output_format == "json":
        _emit(json.dumps({"n": args.n, "golden": args.golden, "passed": not failed,
                          "checks": [vars(r) for r in results]}))
    else:
        for r in results:
            _emit(r.line())
        size = 1 << (1 << args.n)
        _emit(f"{'PASS' if not failed else 'FAIL'}: {len(results) - len(failed)}/{len(results)} checks, "
              f"{size} functions, {num_classes(args.n)} classes of {1 << class_size_log2(args.n)}")
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--max-n", type=int, default=argparse.SUPPRESS,
                        help="materialization cap (default 4, or $AFFCLASS_MAX_N)")

    p = _Parser(prog="affclass", parents=[common],
                description="Classes of Boolean functions with one affine function each.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, n_required=True):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("--n", type=int, required=n_required, help="number of variables")
        sp.set_defaults(func=func)
        return sp

    add("fixed-positions", cmd_fixed_positions, "positions shared by every member of a class")

    sp = add("classify", cmd_classify, "class of one function", n_required=False)
    sp.add_argument("--rule", help="decimal rule number (n <= 5)")
    sp.add_argument("--hex", help="MSB-first hex truth table")
    sp.add_argument("--bits", help="MSB-first binary truth table")

    sp = add("class", cmd_class, "members of one class, ascending")
    sp.add_argument("--index", type=int, required=True)
    sp.add_argument("--limit", type=int)
    sp.add_argument("--stream", action="store_true", help="allow unbounded output above the cap")

    sp = add("subclasses", cmd_subclasses, "members grouped by distance to the affine member")
    sp.add_argument("--index", type=int, required=True)

    sp = add("table", cmd_table, "xor or cvt table of one class")
    sp.add_argument("--index", type=int, required=True)
    sp.add_argument("--op", choices=OPS, required=True)

    add("affines", cmd_affines, "affine functions in class order")

    sp = add("partition", cmd_partition, "every class with its members")
    sp.add_argument("--method", choices=("fixed", "recursive"), default="fixed")
    sp.add_argument("--construction-order", action="store_true",
                    help="recursive method only: keep the order the product emits")

    sp = add("verify", cmd_verify, "replay the property suites (and golden data for n=3)")
    sp.add_argument("--golden", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_env(
            output_format=getattr(args, "format", None),
            max_n_materialize=getattr(args, "max_n", None),
        )
        if args.n is not None and args.n < 1:
            raise ValidationError(f"--n must be >= 1, got {args.n}")
        if getattr(args, "index", None) is not None:
            check_index(args.n, args.index)
        return args.func(args, cfg)
    except (ValidationError, UsageError) as exc:
        print(f"affclass: error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
