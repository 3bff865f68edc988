"""Command-line interface.

Three subcommands:

* ``enumerate`` streams every tableau of one size as canonical JSON
  lines (or just counts them, still by running the enumerator).
* ``map`` reads JSON lines from stdin and applies the routing bijection
  forwards (tableau to permutation) or backwards.  Bad lines become
  JSON error records on stderr; processing continues, and the exit
  code is 2 if any line failed.
* ``verify`` runs one registered claim and writes its report as JSON
  to stdout with a one-line human summary on stderr.

Exit codes: 0 success, 1 a verified claim failed, 2 usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .claims import CLAIMS, run_claim
from .tableaux import (
    canonical_json,
    enumerate_tableaux,
    is_valid,
    tableau_from_dict,
    tableau_to_dict,
)
from .typeb import (
    btableau_from_dict,
    btableau_to_dict,
    enumerate_btableaux,
    from_symmetric_perm,
    is_valid_btableau,
    to_symmetric_perm,
)
from .zigzag import from_permutation, to_permutation

ENUMERATION_CAPS = {"a": 10, "b": 6}


def _perm_from_dict(data) -> tuple[int, ...]:
    if not isinstance(data, dict) or set(data) != {"perm"}:
        raise ValueError('expected exactly the key "perm"')
    values = data["perm"]
    if not isinstance(values, list) or not all(
        isinstance(v, int) for v in values
    ):
        raise ValueError("perm must be a list of integers")
    return tuple(values)


def _apply_map(kind: str, direction: str, data) -> dict:
    if kind == "a":
        if direction == "forward":
            t = tableau_from_dict(data)
            if not is_valid(t):
                raise ValueError("filling breaks the tableau rules")
            return {"perm": list(to_permutation(t))}
        return tableau_to_dict(from_permutation(_perm_from_dict(data)))
    if direction == "forward":
        t = btableau_from_dict(data)
        if not is_valid_btableau(t):
            raise ValueError("filling breaks the tableau rules")
        return {"perm": list(to_symmetric_perm(t))}
    return btableau_to_dict(from_symmetric_perm(_perm_from_dict(data)))


def _cmd_enumerate(args) -> int:
    if args.n < 0:
        print("error: --n must be nonnegative", file=sys.stderr)
        return 2
    cap = ENUMERATION_CAPS[args.type]
    if args.n > cap and not args.allow_large:
        print(
            f"error: --n {args.n} exceeds the type-{args.type} cap of {cap};"
            " pass --allow-large to proceed",
            file=sys.stderr,
        )
        return 2
    if args.type == "a":
        objects = enumerate_tableaux(args.n)
        to_dict = tableau_to_dict
    else:
        objects = enumerate_btableaux(args.n)
        to_dict = btableau_to_dict
    if args.format == "count":
        print(sum(1 for _ in objects))
    else:
        for obj in objects:
            print(canonical_json(to_dict(obj)))
    return 0


def _cmd_map(args) -> int:
    saw_errors = False
    for lineno, line in enumerate(sys.stdin, 1):
        line = line.strip()
        if not line:
            continue
        try:
            data = json.loads(line)
            print(canonical_json(_apply_map(args.type, args.direction, data)))
        except Exception as exc:  # keep going; report the line and reason
            saw_errors = True
            print(
                canonical_json({"line": lineno, "error": str(exc)}),
                file=sys.stderr,
            )
    return 2 if saw_errors else 0


def _cmd_verify(args) -> int:
    try:
        report = run_claim(args.claim, args.max_n, args.threads)
    except (KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return 2
    print(canonical_json(report.to_dict()))
    print(
        f"{report.claim}: {report.status}"
        f" (n up to {report.n_range[1]}, {report.wall_time_s:.3f}s)",
        file=sys.stderr,
    )
    return 0 if report.status == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permtab",
        description="enumerate permutation tableaux, map them to"
        " permutations and back, and verify the library's identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser(
        "enumerate", help="stream all tableaux of one size as JSON lines"
    )
    p_enum.add_argument("--type", choices=("a", "b"), required=True)
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument(
        "--format", choices=("jsonl", "count"), default="jsonl"
    )
    p_enum.add_argument(
        "--allow-large",
        action="store_true",
        help="lift the built-in size cap",
    )
    p_enum.set_defaults(func=_cmd_enumerate)

    p_map = sub.add_parser(
        "map", help="apply the bijection to JSON lines from stdin"
    )
    p_map.add_argument(
        "--direction", choices=("forward", "inverse"), required=True
    )
    p_map.add_argument("--type", choices=("a", "b"), required=True)
    p_map.set_defaults(func=_cmd_map)

    p_verify = sub.add_parser("verify", help="machine-check one claim")
    p_verify.add_argument("--claim", choices=sorted(CLAIMS), required=True)
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
