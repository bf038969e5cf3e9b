"""Command-line front end: ``schurweyl {rsk,amplitude,state,verify,bench}``.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .engine import SchurWeylLabel, amplitude, build_graph, expand_state
from .oracle import budget_from_env
from .rsk import DoubleGTPattern, RSKError, render_diamond, rsk_forward, rsk_inverse, tableaux_to_double
from .surd import SurdSum
from .sweeps import bench_rows, verify_all
from .young import format_tableau, parse_tableau

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def int_list(text: str) -> tuple:
    try:
        vals = tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def tableau_arg(text: str) -> tuple:
    try:
        return parse_tableau(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def n_range(text: str) -> list:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or a..b, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return list(range(lo, hi + 1))


def _label(args) -> SchurWeylLabel:
    try:
        return SchurWeylLabel(args.lam, args.t, args.y, args.n or 0)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit(args, command: str, inputs: dict, result, exact: bool, text: str):
    if args.format == "json":
        env = {"command": command, "inputs": inputs, "result": result, "exact": exact}
        print(json.dumps(env, indent=2))
    else:
        print(text)


# -- subcommands -------------------------------------------------------------

def cmd_rsk(args) -> int:
    if args.inverse:
        if args.input:
            raw = sys.stdin.read() if args.input == "-" else open(args.input).read()
            try:
                data = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise InputError(f"cannot parse {args.input}: {exc}") from None
            data = data.get("result", data)
            try:
                d = DoubleGTPattern.from_json(data)
            except (KeyError, TypeError, ValueError) as exc:
                raise InputError(f"not a double GT pattern: {exc}") from None
        elif args.t is not None and args.y is not None:
            if not args.n:
                raise InputError("--inverse with --t/--y needs --n")
            try:
                d = tableaux_to_double(args.t, args.y, args.n)
            except ValueError as exc:
                raise InputError(str(exc)) from None
        else:
            raise InputError("--inverse needs --input FILE or --t and --y")
        try:
            f = rsk_inverse(d)
        except RSKError as exc:
            raise InputError(str(exc)) from None
        _emit(args, "rsk", {"inverse": True, **d.to_json()}, list(f), True, ",".join(map(str, f)))
        return EXIT_OK

    if args.config is None or not args.n:
        raise InputError("rsk needs --config and --n")
    try:
        d = rsk_forward(args.config, args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    t, y = d.tableaux()
    text = "\n".join([render_diamond(d), "", f"t = ({format_tableau(t)})", f"y = ({format_tableau(y)})"])
    _emit(args, "rsk", {"config": list(args.config), "n": args.n}, d.to_json(), True, text)
    return EXIT_OK


def cmd_amplitude(args) -> int:
    lab = _label(args)
    if len(args.config) != lab.N:
        raise InputError(f"configuration has {len(args.config)} nodes, label has N={lab.N}")
    if any(not 1 <= k <= lab.n for k in args.config):
        raise InputError(f"configuration letters must lie in 1..{lab.n}")
    value = amplitude(args.config, lab)
    inputs = {"config": list(args.config), **lab.to_json()}
    result = {"amplitude": value.to_json()}
    text = f"{value}    ({float(value):.12g})"
    if args.show_graph:
        graph = build_graph(args.config, lab)
        result["graph"] = graph.to_json()
        text = graph.render() + "\n\n" + text
    _emit(args, "amplitude", inputs, result, True, text)
    return EXIT_OK


def cmd_state(args) -> int:
    lab = _label(args)
    state = expand_state(lab)
    width = max((len(str(a)) for a in state.amplitudes.values()), default=1)
    lines = [f"{''.join(map(str, f)) if lab.n <= 9 else ','.join(map(str, f))}   "
             f"{str(a):>{width}}   {float(a): .12f}" for f, a in state.amplitudes.items()]
    lines.append(f"norm^2 = {state.norm_squared()}")
    exact = all(isinstance(a, SurdSum) for a in state.amplitudes.values())
    _emit(args, "state", lab.to_json(), state.to_json(), exact, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.N < 1 or args.n < 1:
        raise InputError("--N and --n must be positive")
    budget = args.budget if args.budget is not None else budget_from_env()
    stages = verify_all(args.N, args.n, budget=budget, max_orbit=args.max_orbit)
    ok = all(s.passed for s in stages)
    inputs = {"N": args.N, "n": args.n, "budget": budget, "max_orbit": args.max_orbit}
    text = "\n".join(s.line() for s in stages) + f"\n{'OK' if ok else 'FAILED'}"
    _emit(args, "verify", inputs, {"passed": ok, "stages": [s.to_json() for s in stages]}, True, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bench(args) -> int:
    if args.n < 1:
        raise InputError("--n must be positive")
    budget = args.budget if args.budget is not None else budget_from_env()
    rows = bench_rows(args.N_range, args.n, budget=budget, repeats=args.repeats)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    inputs = {"N": args.N_range, "n": args.n, "budget": budget}
    _emit(args, "bench", inputs, rows, False, buf.getvalue().rstrip("\n"))
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="text")

    label = argparse.ArgumentParser(add_help=False)
    label.add_argument("--lambda", dest="lam", type=int_list, required=True, help="partition, e.g. 3,1")
    label.add_argument("--t", type=tableau_arg, required=True, help="Weyl tableau, e.g. 123/2")
    label.add_argument("--y", type=tableau_arg, required=True, help="standard tableau, e.g. 134/2")
    label.add_argument("--n", type=int, default=0, help="number of spin states (default: inferred)")

    parser = argparse.ArgumentParser(prog="schurweyl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rsk", parents=[common], help="forward or inverse RSK on GT patterns")
    p.add_argument("--config", type=int_list, help="comma-separated letters, e.g. 3,1,2,3,2")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--input", help="JSON double pattern for --inverse ('-' for stdin)")
    p.add_argument("--t", type=tableau_arg)
    p.add_argument("--y", type=tableau_arg)
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("amplitude", parents=[common, label], help="one amplitude <f|lambda t y>")
    p.add_argument("--config", type=int_list, required=True)
    p.add_argument("--show-graph", action="store_true")
    p.set_defaults(func=cmd_amplitude)

    p = sub.add_parser("state", parents=[common, label], help="expand a state over its orbit")
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("verify", parents=[common], help="consistency sweeps for given N and n")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--budget", type=int, default=None, help="largest N for the factorial oracle")
    p.add_argument("--max-orbit", type=int, default=200,
                   help="largest orbit given a full unitarity check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="timing table, graph method vs oracle (CSV)")
    p.add_argument("--N-range", dest="N_range", type=n_range, required=True, help="e.g. 4..8")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:  # e.g. malformed SW_BUDGET
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
