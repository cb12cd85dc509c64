"""Command-line client for the counting operations.

The CLI contains no counting logic of its own: every subcommand builds the
same request document the HTTP service accepts and either executes it
in-process (default) or posts it to a running server (--server URL).  Output
is a human-readable line by default or one JSON document with --json; values
are always exact strings.

Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 search budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import queries
from .errors import BudgetExceededError, UsageError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; the contract here is 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise _UsageExit(message)


class _UsageExit(Exception):
    pass


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="primfact",
        description="Exact counts of primitive transposition factorizations.",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    parser.add_argument(
        "--server",
        metavar="URL",
        help="send the query to a running primfact service instead of "
        "computing in-process",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    count = sub.add_parser("count", help="primitive factorizations of a permutation")
    count.add_argument("--perm", required=True, help='"(1 2 3)" or "2,3,1"')
    count.add_argument("--length", type=int, help="factorization length k")
    count.add_argument("--type", help='factorization type, e.g. "2,1"')
    count.add_argument(
        "--method", default="auto", choices=["auto", "brute", "jm", "character"]
    )

    minimal = sub.add_parser("minimal", help="minimal primitive factorization counts")
    minimal.add_argument("--cycle-type", required=True, help='non-reduced, e.g. "6,4"')
    minimal.add_argument("--type", help="restrict to one factorization type")

    full_cycle = sub.add_parser(
        "full-cycle", help="primitive factorizations of an n-cycle at genus g"
    )
    full_cycle.add_argument("--n", type=int, required=True)
    full_cycle.add_argument("--genus", type=int, default=0)
    full_cycle.add_argument("--method", default="cf", choices=["cf", "sinh", "brute"])

    hurwitz = sub.add_parser("hurwitz", help="minimal transitive factorization counts")
    hurwitz.add_argument("--cycle-type", required=True)
    hurwitz.add_argument(
        "--genus", type=int, help="transitive count of a full cycle at this genus"
    )

    phi = sub.add_parser("phi", help="generating function of counts by length")
    phi.add_argument("--cycle-type", required=True)
    phi.add_argument("--order", type=int, default=0, help="series truncation order")
    phi.add_argument(
        "--closed-form", action="store_true", help="print the rational function"
    )

    correlator = sub.add_parser(
        "correlator", help="Haar-unitary permutation correlator"
    )
    correlator.add_argument("--perm", required=True)
    correlator.add_argument("--dim", type=int, required=True, help="matrix dimension N")
    correlator.add_argument("--method", default="gram", choices=["gram", "character"])

    verify = sub.add_parser("verify", help="run a cross-method verification suite")
    verify.add_argument(
        "--suite",
        default="all",
        choices=["all", "minimal", "jm", "character", "matrix"],
    )
    verify.add_argument("--max-n", type=int, default=4)
    verify.add_argument("--jobs", type=int, default=1)

    serve = sub.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def _local_query(endpoint: str, payload: dict) -> dict:
    runners: dict[str, Callable[..., queries.QueryResult]] = {
        "count": lambda p: queries.run_count(
            p["perm"], p.get("length"), p.get("type"), p.get("method", "auto")
        ),
        "minimal": lambda p: queries.run_minimal(p["cycle_type"], p.get("type")),
        "full-cycle": lambda p: queries.run_full_cycle(
            p["n"], p.get("genus", 0), p.get("method", "cf")
        ),
        "hurwitz": lambda p: queries.run_hurwitz(p["cycle_type"], p.get("genus")),
        "phi": lambda p: queries.run_phi(
            p["cycle_type"], p.get("order", 0), p.get("closed_form", False)
        ),
        "correlator": lambda p: queries.run_correlator(
            p["perm"], p["dim"], p.get("method", "gram")
        ),
    }
    if endpoint == "verify":
        report = queries.run_verify(
            payload.get("suite", "all"), payload.get("max_n", 4), payload.get("jobs", 1)
        )
        return queries.verify_report_dict(report)
    return runners[endpoint](payload).to_dict()


def _http_query(server: str, endpoint: str, payload: dict) -> dict:
    import httpx

    response = httpx.post(
        server.rstrip("/") + "/" + endpoint, json=payload, timeout=600.0
    )
    if response.status_code == 400 or response.status_code == 422:
        raise UsageError(str(response.json().get("detail", response.text)))
    if response.status_code == 503:
        detail = str(response.json().get("detail", response.text))
        raise BudgetExceededError(0, 0) from RuntimeError(detail)
    response.raise_for_status()
    return response.json()


def _payload(args: argparse.Namespace) -> tuple[str, dict]:
    command = args.command
    if command == "count":
        return command, {
            "perm": args.perm,
            "length": args.length,
            "type": args.type,
            "method": args.method,
        }
    if command == "minimal":
        return command, {"cycle_type": args.cycle_type, "type": args.type}
    if command == "full-cycle":
        return command, {"n": args.n, "genus": args.genus, "method": args.method}
    if command == "hurwitz":
        return command, {"cycle_type": args.cycle_type, "genus": args.genus}
    if command == "phi":
        return command, {
            "cycle_type": args.cycle_type,
            "order": args.order,
            "closed_form": args.closed_form,
        }
    if command == "correlator":
        return command, {"perm": args.perm, "dim": args.dim, "method": args.method}
    if command == "verify":
        return command, {"suite": args.suite, "max_n": args.max_n, "jobs": args.jobs}
    raise _UsageExit(f"unknown command {command!r}")


def _describe(document: dict) -> str:
    query = document["query"]
    args = ", ".join(f"{k}={v}" for k, v in query.items() if k != "op")
    value = document["value"]
    if isinstance(value, list):
        value = "[" + ", ".join(value) + "]"
    return (
        f"{query['op']}({args}) = {value}  "
        f"[{document['method']}, {document['elapsed_ms']} ms]"
    )


def _print_verify(document: dict) -> None:
    for case in document["cases"]:
        status = "PASS" if case["passed"] else "FAIL"
        line = f"{status}  {case['key']}  ({case['elapsed_ms']} ms)"
        if case["detail"]:
            line += f"  {case['detail']}"
        print(line)
    total = len(document["cases"])
    failed = sum(1 for c in document["cases"] if not c["passed"])
    verdict = "ok" if document["passed"] else f"{failed} case(s) failed"
    print(f"suite {document['suite']} (max n {document['max_n']}): {total} cases, {verdict}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageExit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    try:
        endpoint, payload = _payload(args)
        if args.server:
            document = _http_query(args.server, endpoint, payload)
        else:
            document = _local_query(endpoint, payload)
    except _UsageExit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET

    if args.command == "verify":
        if args.json:
            print(json.dumps(document, indent=2))
        else:
            _print_verify(document)
        return EXIT_OK if document["passed"] else EXIT_VERIFY_FAILED

    if args.json:
        print(json.dumps(document, indent=2))
    else:
        print(_describe(document))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
