"""Batch command-line front end: synth | verify | stats | estimate.

Exit codes: 0 success, 1 verification (or closed-form) failure, 2 invalid
flags.  All output is deterministic; identical invocations with identical
seeds produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .blocked import BlockParams, synth_combined
from .circuit import Circuit, compute_stats
from .estimator import fanout_adder_cost, shor_dlog_estimate
from .fanout import synth_fanout_tree
from .netlist import NetlistError, export_netlist, parse_netlist
from .oracles import adder_oracle, fanout_oracle
from .ripple import synth_ripple
from .sim import VerifyReport, verify_exhaustive, verify_random

#: Default policy: exhaustive when at most this many free wires, else trials.
EXHAUSTIVE_DEFAULT_LIMIT = 20


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qadd", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_kind_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--kind", choices=["ripple", "combined", "fanout-tree"])
        p.add_argument("--n", type=int, help="operand width")
        p.add_argument("--d", type=int, help="depth parameter of the combined adder")
        p.add_argument("--t", type=int, help="fan-out target count")
        p.add_argument("--f", type=int, help="fan-out length bound")

    p_synth = sub.add_parser("synth", help="write a netlist for a synthesized circuit")
    add_kind_flags(p_synth)
    p_synth.add_argument("-o", "--output", metavar="FILE")

    p_verify = sub.add_parser("verify", help="check a synthesized circuit against its oracle")
    add_kind_flags(p_verify)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--trials", type=int, default=1000)
    p_verify.add_argument("--exhaustive", action="store_true")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("-o", "--output", metavar="FILE")

    p_stats = sub.add_parser("stats", help="print circuit statistics")
    p_stats.add_argument("netlist", nargs="?", metavar="FILE")
    add_kind_flags(p_stats)
    p_stats.add_argument("--json", action="store_true")
    p_stats.add_argument("-o", "--output", metavar="FILE")

    p_est = sub.add_parser("estimate", help="evaluate a closed-form cost estimate")
    p_est.add_argument("--target", choices=["adder-fanout", "shor-dlog"], required=True)
    p_est.add_argument("--n", type=int)
    p_est.add_argument("--e", type=int, help="adder depth parameter")
    p_est.add_argument("--f", type=int, help="fan-out length bound")
    p_est.add_argument("--d", type=int, help="combined-adder depth parameter")
    p_est.add_argument("--adder", choices=["ripple", "combined", "fanout"])
    p_est.add_argument("--json", action="store_true")
    p_est.add_argument("-o", "--output", metavar="FILE")

    return parser


def _require(args: argparse.Namespace, names: list[str], forbid: list[str]) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--kind {args.kind} requires --{name}")
    for name in forbid:
        if getattr(args, name) is not None:
            raise UsageError(f"--kind {args.kind} does not take --{name}")


def _build(args: argparse.Namespace):
    """Synthesize the requested circuit and its packed oracle."""
    if args.kind is None:
        raise UsageError("--kind is required")
    if args.kind == "ripple":
        _require(args, ["n"], ["d", "t", "f"])
        circuit = synth_ripple(args.n)
        _, packed = adder_oracle(circuit)
    elif args.kind == "combined":
        _require(args, ["n", "d"], ["t", "f"])
        circuit = synth_combined(BlockParams(args.n, args.d))
        _, packed = adder_oracle(circuit)
    else:
        _require(args, ["t", "f"], ["n", "d"])
        targets = list(range(1, args.t + 1))
        circuit = synth_fanout_tree(0, targets, args.f)
        _, packed = fanout_oracle(circuit, 0, targets)
    return circuit, packed


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _cmd_synth(args: argparse.Namespace) -> int:
    circuit, _ = _build(args)
    _emit(export_netlist(circuit), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    circuit, packed = _build(args)
    free = circuit.wire_count - len(circuit.ancilla)
    if args.exhaustive or free <= EXHAUSTIVE_DEFAULT_LIMIT:
        report: VerifyReport = verify_exhaustive(circuit, packed_oracle=packed)
        mode = "exhaustive"
    else:
        report = verify_random(
            circuit, packed_oracle=packed, trials=args.trials, seed=args.seed
        )
        mode = "random"
    if args.json:
        _emit(_json_text(report.to_json_dict()), args.output)
    else:
        seed = report.seed if report.seed is not None else "-"
        _emit(
            f"verify {args.kind} [{mode}]: cases {report.total_cases}  "
            f"failures {len(report.failures)}  "
            f"ancilla-violations {len(report.ancilla_violations)}  seed {seed}\n",
            args.output,
        )
    return 0 if report.ok else 1


RIPPLE_CLOSED_FORMS = (
    ("depth", lambda n: 5 * n - 3),
    ("size", lambda n: 7 * n - 6),
    ("count_cnot", lambda n: 5 * n - 5),
    ("count_toffoli", lambda n: 2 * n - 1),
    ("ancilla_count", lambda n: 0),
)


def _cmd_stats(args: argparse.Namespace) -> int:
    if args.netlist is not None and args.kind is not None:
        raise UsageError("pass either a netlist file or --kind, not both")
    if args.netlist is not None:
        with open(args.netlist) as handle:
            circuit: Circuit = parse_netlist(handle.read())
        ripple_n = None
    else:
        circuit, _ = _build(args)
        ripple_n = args.n if args.kind == "ripple" else None
    stats = compute_stats(circuit)
    if args.json:
        _emit(_json_text(stats.to_json_dict()), args.output)
    else:
        lines = [f"{key} {value}" for key, value in stats.to_json_dict().items()]
        _emit("\n".join(lines) + "\n", args.output)
    if ripple_n is not None and ripple_n >= 3:
        observed = stats.to_json_dict()
        for key, formula in RIPPLE_CLOSED_FORMS:
            if observed[key] != formula(ripple_n):
                sys.stderr.write(
                    f"closed-form mismatch: {key} = {observed[key]}, "
                    f"expected {formula(ripple_n)}\n"
                )
                return 1
    return 0


def _cmd_estimate(args: argparse.Namespace) -> int:
    if args.n is None:
        raise UsageError("estimate requires --n")
    if args.target == "adder-fanout":
        if args.e is None or args.f is None:
            raise UsageError("--target adder-fanout requires --e and --f")
        if args.adder is not None or args.d is not None:
            raise UsageError("--target adder-fanout does not take --adder/--d")
        estimate = fanout_adder_cost(args.n, args.e, args.f)
    else:
        adder = args.adder or "ripple"
        estimate = shor_dlog_estimate(args.n, adder=adder, d=args.d, e=args.e, f=args.f)
    if args.json:
        _emit(_json_text(estimate.to_json_dict()), args.output)
    else:
        payload = estimate.to_json_dict()
        lines = [f"formula {payload['formula_id']}"]
        lines += [
            f"{key} {payload[key]}" for key in ("qubits_total", "ancilla", "depth", "size")
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return int(exc.code or 0)
    try:
        if args.command == "synth":
            return _cmd_synth(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "stats":
            return _cmd_stats(args)
        return _cmd_estimate(args)
    except UsageError as err:
        sys.stderr.write(f"error: {err}\n")
        parser.print_usage(sys.stderr)
        return 2
    except (ValueError, NetlistError, OSError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
