"""Command line interface.

One executable, verb subcommands, deterministic machine-readable output.
Exit codes: 0 success, 1 domain error, 2 usage error.  Data goes to the
output stream (or --out file), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cesaro import SequenceSpec, cesaro_sum, is_divergent
from .errors import DomainError
from .gf import Prime
from .gi import GiElem
from .groups import SUBGROUP_KINDS, element_order, enumerate_subgroup, find_gs_generator
from .polar import to_polar
from .transform import TransformTable, ff_dtft, ffzt_eval, ffzt_table, iffzt
from .zplane import RenderSpec, ZPlane, build_plane, order_trajectory, render_svg, render_text


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _add_prime(sub) -> None:
    sub.add_argument("--p", type=int, required=True, help="odd prime with p = 3 (mod 4)")


def _add_sequence_flags(sub) -> None:
    sub.add_argument(
        "--basic",
        "--seq",
        dest="basic",
        help="basic sequence: impulse | step | expo:A,a",
    )
    sub.add_argument("--left", help="nonzero values left of n=0 as 'n:v,n:v' pairs")
    sub.add_argument("--prefix", help="values at n = 0.. as a comma list")
    sub.add_argument("--tail", help="periodic tail values as a comma list")


def _parse_int_list(parser, text: str, flag: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        parser.error(f"{flag} expects a comma-separated list of integers")


def _sequence_from_args(parser, args, prime: Prime) -> SequenceSpec:
    explicit = args.left or args.prefix or args.tail
    if args.basic and explicit:
        parser.error("--basic/--seq cannot be combined with --left/--prefix/--tail")
    if args.basic:
        name, _, params = args.basic.partition(":")
        if name == "impulse":
            return SequenceSpec.impulse(prime)
        if name == "step":
            return SequenceSpec.unit_step(prime)
        if name == "expo":
            parts = params.split(",")
            if len(parts) != 2:
                parser.error("expo takes two parameters: expo:A,a")
            try:
                amp, ratio = int(parts[0]), int(parts[1])
            except ValueError:
                parser.error("expo parameters must be integers")
            try:
                return SequenceSpec.exponential(prime, amp, ratio)
            except DomainError as exc:
                parser.error(str(exc))
        parser.error(f"unknown basic sequence {args.basic!r}")
    if not explicit:
        parser.error("a sequence is required: --basic/--seq or --left/--prefix/--tail")
    left = []
    if args.left:
        for pair in args.left.split(","):
            n, _, v = pair.partition(":")
            try:
                left.append((int(n), int(v)))
            except ValueError:
                parser.error("--left expects 'n:v' pairs with integer n and v")
    prefix = _parse_int_list(parser, args.prefix, "--prefix") if args.prefix else []
    tail = _parse_int_list(parser, args.tail, "--tail") if args.tail else [0]
    try:
        return SequenceSpec(prime, tuple(left), tuple(prefix), tuple(tail))
    except DomainError as exc:
        parser.error(str(exc))


def _parse_element(parser, prime: Prime, text: str, flag: str) -> GiElem:
    try:
        return GiElem.parse(prime, text)
    except DomainError:
        parser.error(f"{flag} expects an element like 'a+bj', got {text!r}")


def _epsilon_from_args(parser, args, prime: Prime) -> GiElem | None:
    if getattr(args, "epsilon", None) is None:
        return None
    eps = _parse_element(parser, prime, args.epsilon, "--epsilon")
    if element_order(eps) != 2 * (prime.value + 1):
        parser.error(f"--epsilon {args.epsilon!r} does not generate the phase group")
    return eps


def _value_str(value) -> str:
    return "divergent" if is_divergent(value) else str(value)


def _write(args, payload: str | bytes) -> None:
    out = getattr(args, "out", None)
    if isinstance(payload, bytes):
        if out:
            with open(out, "wb") as fh:
                fh.write(payload)
        else:
            sys.stdout.buffer.write(payload)
            sys.stdout.buffer.flush()
    else:
        if out:
            with open(out, "w", encoding="utf-8", newline="") as fh:
                fh.write(payload)
        else:
            sys.stdout.write(payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zgf",
        description="Exact Z transform, Cesaro summation and Z plane over GF(p)",
    )
    parser.add_argument("--version", action="version", version=f"zgf {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("group", help="enumerate a named subgroup of GI(p)*")
    _add_prime(sub)
    sub.add_argument("--kind", choices=SUBGROUP_KINDS, default="unimodular")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out")

    sub = commands.add_parser("polar", help="convert an element to polar form")
    _add_prime(sub)
    sub.add_argument("--element", required=True)
    sub.add_argument("--epsilon", help="override the pinned phase-group generator")

    sub = commands.add_parser("zplane", help="render the Z plane")
    _add_prime(sub)
    sub.add_argument("--epsilon")
    sub.add_argument("--format", choices=("svg", "text", "json"), default="svg")
    sub.add_argument("--no-labels", action="store_true")
    sub.add_argument("--out")

    sub = commands.add_parser("trajectory", help="render the powers of an element")
    _add_prime(sub)
    sub.add_argument("--element", required=True)
    sub.add_argument("--epsilon")
    sub.add_argument("--format", choices=("svg", "text", "json"), default="svg")
    sub.add_argument("--no-labels", action="store_true")
    sub.add_argument("--out")

    sub = commands.add_parser("cesaro", help="Cesaro-sum a sequence's series")
    _add_prime(sub)
    _add_sequence_flags(sub)

    ffzt = commands.add_parser("ffzt", help="Z transform operations")
    actions = ffzt.add_subparsers(dest="action", required=True)

    sub = actions.add_parser("eval", help="transform value at one point")
    _add_prime(sub)
    _add_sequence_flags(sub)
    sub.add_argument("--z", required=True)

    sub = actions.add_parser("table", help="transform values at every nonzero point")
    _add_prime(sub)
    _add_sequence_flags(sub)
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out")

    sub = actions.add_parser("invert", help="recover x[n] from a saved table")
    sub.add_argument("--table", required=True)
    sub.add_argument("--n", type=int, required=True)

    sub = commands.add_parser("dtft", help="Fourier transform on the unit circle")
    _add_prime(sub)
    _add_sequence_flags(sub)
    sub.add_argument("--theta", type=int, required=True)
    sub.add_argument("--epsilon")

    return parser


def _prime_from_args(parser, args) -> Prime:
    try:
        return Prime(args.p)
    except DomainError as exc:
        parser.error(str(exc))


def _cmd_group(parser, args) -> None:
    prime = _prime_from_args(parser, args)
    records = [
        {"element": str(z), "order": element_order(z)}
        for z in enumerate_subgroup(prime, args.kind)
    ]
    if args.format == "json":
        _write(args, _dumps(records))
    else:
        rows = ["element,order"] + [f"{r['element']},{r['order']}" for r in records]
        _write(args, "\n".join(rows) + "\n")


def _cmd_polar(parser, args) -> None:
    prime = _prime_from_args(parser, args)
    z = _parse_element(parser, prime, args.element, "--element")
    pf = to_polar(z, _epsilon_from_args(parser, args, prime))
    _write(
        args,
        _dumps(
            {
                "p": prime.value,
                "element": str(z),
                "r": pf.r.value,
                "theta": pf.theta,
                "epsilon": str(pf.base),
            }
        ),
    )


def _plane_dict(plane: ZPlane) -> dict:
    return {
        "p": plane.prime.value,
        "epsilon": str(plane.epsilon),
        "circles": [
            {
                "radius": c.radius.value,
                "points": [{"theta": t, "element": str(e)} for t, e in c.points],
            }
            for c in plane.circles
        ],
    }


def _cmd_zplane(parser, args) -> None:
    prime = _prime_from_args(parser, args)
    plane = build_plane(prime, _epsilon_from_args(parser, args, prime))
    if args.format == "json":
        _write(args, _dumps(_plane_dict(plane)))
    elif args.format == "text":
        _write(args, render_text(plane))
    else:
        _write(args, render_svg(plane, spec=RenderSpec(labels=not args.no_labels)))


def _cmd_trajectory(parser, args) -> None:
    prime = _prime_from_args(parser, args)
    z = _parse_element(parser, prime, args.element, "--element")
    eps = _epsilon_from_args(parser, args, prime)
    traj = order_trajectory(z, eps)
    if args.format == "json":
        payload = {
            "p": prime.value,
            "start": str(z),
            "order": traj.order,
            "steps": [
                {"k": k, "element": str(e), "r": pf.r.value, "theta": pf.theta}
                for k, e, pf in traj.steps
            ],
        }
        _write(args, _dumps(payload))
        return
    plane = build_plane(prime, eps)
    if args.format == "text":
        _write(args, render_text(plane, overlay=traj))
    else:
        _write(args, render_svg(plane, overlay=traj, spec=RenderSpec(labels=not args.no_labels)))


def _cmd_cesaro(parser, args) -> None:
    prime = _prime_from_args(parser, args)
    x = _sequence_from_args(parser, args, prime)
    verdict = cesaro_sum(x)
    payload: dict = {"converges": verdict.converges}
    if verdict.converges:
        payload["sigma"] = verdict.sigma.value
    payload["P"] = verdict.period
    _write(args, _dumps(payload))


def _cmd_ffzt_eval(parser, args) -> None:
    prime = _prime_from_args(parser, args)
    x = _sequence_from_args(parser, args, prime)
    z = _parse_element(parser, prime, args.z, "--z")
    value = ffzt_eval(x, z)
    _write(args, _dumps({"p": prime.value, "z": str(z), "value": _value_str(value)}))


def _cmd_ffzt_table(parser, args) -> None:
    prime = _prime_from_args(parser, args)
    x = _sequence_from_args(parser, args, prime)
    table = ffzt_table(x)
    if args.format == "json":
        _write(args, table.to_json())
    else:
        rows = ["z,value"] + [f"{z},{_value_str(v)}" for z, v in table.entries()]
        _write(args, "\n".join(rows) + "\n")


def _cmd_ffzt_invert(parser, args) -> None:
    table = TransformTable.load(args.table)
    value = iffzt(table, args.n)
    _write(args, _dumps({"n": args.n, "value": value.value}))


def _cmd_dtft(parser, args) -> None:
    prime = _prime_from_args(parser, args)
    x = _sequence_from_args(parser, args, prime)
    eps = _epsilon_from_args(parser, args, prime) or find_gs_generator(prime)
    gs_order = 2 * (prime.value + 1)
    if not 0 <= args.theta < gs_order:
        parser.error(f"--theta must lie in [0, {gs_order - 1}]")
    value = ff_dtft(x, args.theta, eps)
    _write(
        args,
        _dumps(
            {
                "p": prime.value,
                "theta": args.theta,
                "z": str(eps**args.theta),
                "value": _value_str(value),
            }
        ),
    )


_HANDLERS = {
    ("group", None): _cmd_group,
    ("polar", None): _cmd_polar,
    ("zplane", None): _cmd_zplane,
    ("trajectory", None): _cmd_trajectory,
    ("cesaro", None): _cmd_cesaro,
    ("ffzt", "eval"): _cmd_ffzt_eval,
    ("ffzt", "table"): _cmd_ffzt_table,
    ("ffzt", "invert"): _cmd_ffzt_invert,
    ("dtft", None): _cmd_dtft,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handler = _HANDLERS[(args.command, getattr(args, "action", None))]
    try:
        handler(parser, args)
    except SystemExit as exc:  # parser.error from argument interpretation
        return exc.code if isinstance(exc.code, int) else 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
