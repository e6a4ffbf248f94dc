"""Command line front end.

Verbs: components, kgroup, llc, basechange, autoinduce, kmap,
repring-bc.  Results go to stdout (JSON by default, --format table for
a readable listing); errors go to stderr as {"error", "detail"}
documents.  Exit codes: 0 success, 2 usage or validation problem,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dual import (
    ComplexComponent,
    RealComponent,
    enumerate_components_complex,
    enumerate_components_real,
)
from .errors import UsageError
from .ktheory import apply_hom, k_ai_hom, k_bc_hom, k_group, repring_bc
from .langlands import (
    auto_induce_point,
    base_change_point,
    llc_complex,
    llc_complex_inv,
    llc_real,
    llc_real_inv,
)
from .serialize import (
    component_to_doc,
    kclass_from_doc,
    kclass_to_doc,
    kgroup_to_doc,
    parameter_from_doc,
    parameter_to_doc,
    point_from_doc,
    point_to_doc,
    render,
    repring_from_doc,
    repring_to_doc,
)


class _Parser(argparse.ArgumentParser):
    # route argparse's own failures through the JSON error path
    def error(self, message):
        raise UsageError(message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _plain_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None


def _read_payload(text: str):
    if text == "-":
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON payload: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="temperedk", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("components", parents=[common],
                       help="list tempered-dual components up to a label bound")
    p.add_argument("--field", choices=("R", "C"), required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--max-label", type=_plain_int, required=True)
    p.set_defaults(func=_cmd_components)

    p = sub.add_parser("kgroup", parents=[common],
                       help="K-theory generators and schema for one group")
    p.add_argument("--field", choices=("R", "C"), required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--max-label", type=_positive_int, required=True)
    p.add_argument("--degree", type=int, choices=(0, 1))
    p.set_defaults(func=_cmd_kgroup)

    p = sub.add_parser("llc", parents=[common],
                       help="parameter to tempered point (--parameter) or back (--point)")
    p.add_argument("--field", choices=("R", "C"))
    p.add_argument("--parameter", metavar="JSON")
    p.add_argument("--point", metavar="JSON")
    p.set_defaults(func=_cmd_llc)

    p = sub.add_parser("basechange", parents=[common],
                       help="base change on points: GL(n,R) to GL(n,C)")
    p.add_argument("--point", metavar="JSON", required=True)
    p.set_defaults(func=_cmd_basechange)

    p = sub.add_parser("autoinduce", parents=[common],
                       help="automorphic induction on points: GL(n,C) to GL(2n,R)")
    p.add_argument("--point", metavar="JSON", required=True)
    p.set_defaults(func=_cmd_autoinduce)

    p = sub.add_parser("kmap", parents=[common],
                       help="apply base change (bc) or automorphic induction (ai) to a K-class")
    p.add_argument("--map", choices=("bc", "ai"), required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--max-label", type=_positive_int)
    p.add_argument("--class", dest="kclass", metavar="JSON", required=True)
    p.set_defaults(func=_cmd_kmap)

    p = sub.add_parser("repring-bc", parents=[common],
                       help="restriction R(U(1)) -> R(Z/2Z) on a character-ring element")
    p.add_argument("--element", metavar="JSON", required=True)
    p.set_defaults(func=_cmd_repring)

    return parser


def _cmd_components(args) -> dict:
    if args.field == "R":
        comps = enumerate_components_real(args.n, args.max_label)
    else:
        comps = enumerate_components_complex(args.n, args.max_label)
    return {
        "field": args.field,
        "n": args.n,
        "max_label": args.max_label,
        "count": len(comps),
        "components": [component_to_doc(c) for c in comps],
    }


def _cmd_kgroup(args) -> dict:
    group = k_group(args.field, args.n, args.max_label)
    degrees = (0, 1) if args.degree is None else (args.degree,)
    return kgroup_to_doc(group, degrees)


def _cmd_llc(args) -> dict:
    if (args.parameter is None) == (args.point is None):
        raise UsageError("provide exactly one of --parameter or --point")
    if args.parameter is not None:
        param = parameter_from_doc(_read_payload(args.parameter))
        if args.field is not None and args.field != param.side:
            raise UsageError(f"--field {args.field} does not match the payload side {param.side}")
        point = llc_real(param) if param.side == "R" else llc_complex(param)
        return point_to_doc(point)
    point = point_from_doc(_read_payload(args.point))
    side = point.component.field
    if args.field is not None and args.field != side:
        raise UsageError(f"--field {args.field} does not match the payload field {side}")
    param = llc_real_inv(point) if side == "R" else llc_complex_inv(point)
    return parameter_to_doc(param)


def _cmd_basechange(args) -> dict:
    return point_to_doc(base_change_point(point_from_doc(_read_payload(args.point))))


def _cmd_autoinduce(args) -> dict:
    return point_to_doc(auto_induce_point(point_from_doc(_read_payload(args.point))))


def _payload_label_bound(x) -> int:
    bound = 1
    for gen, _ in x.terms:
        if isinstance(gen, RealComponent):
            bound = max(bound, max(gen.discrete, default=1))
        elif isinstance(gen, ComplexComponent):
            bound = max(bound, max((abs(l) for l in gen.labels), default=1))
    return bound


def _cmd_kmap(args) -> dict:
    x = kclass_from_doc(_read_payload(args.kclass))
    max_label = args.max_label if args.max_label is not None else _payload_label_bound(x)
    hom = k_bc_hom(args.n, max_label) if args.map == "bc" else k_ai_hom(args.n, max_label)
    return kclass_to_doc(apply_hom(hom, x))


def _cmd_repring(args) -> dict:
    return repring_to_doc(repring_bc(repring_from_doc(_read_payload(args.element))))


def parse_command(argv) -> argparse.Namespace:
    """Validate a command line into an option record (UsageError if bad)."""
    return build_parser().parse_args(argv)


def execute(cmd: argparse.Namespace) -> dict:
    """Run a validated command and return its result document."""
    return cmd.func(cmd)


def _print_error(exc: BaseException) -> None:
    doc = {"error": type(exc).__name__, "detail": str(exc)}
    print(json.dumps(doc, sort_keys=True), file=sys.stderr)


def main(argv=None) -> int:
    try:
        cmd = parse_command(argv)
        output = render(execute(cmd), cmd.format)
    except ValueError as exc:
        _print_error(exc)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        _print_error(exc)
        return 3
    print(output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
