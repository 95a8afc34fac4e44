"""Command-line client for the profile toolkit service.

Every subcommand sends one request to the HTTP API and renders the
response.  By default the requests run against an in-process instance of
the service, so no server is needed for batch use; ``--server URL``
points the same client at a remote instance instead.

Exit codes: 0 on success, 1 on documented negative answers ("no
solutions", no nontrivial factor, reducible), 2 on usage, parse or
capacity errors.
"""

from __future__ import annotations

import argparse
import sys


class ClientError(Exception):
    """A request failed; the message is the service's error detail."""


class ServiceClient:
    """Minimal JSON-over-POST client, in-process by default."""

    def __init__(self, server: str | None = None):
        if server:
            import httpx

            self._http = httpx.Client(base_url=server)
        else:
            import warnings

            with warnings.catch_warnings():
                # some fastapi/starlette builds warn on import of the test client
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service.app import app

            self._http = TestClient(app)

    def post(self, path: str, payload: dict) -> dict:
        response = self._http.post(path, json=payload)
        if response.status_code != 200:
            try:
                detail = response.json().get("detail")
            except Exception:
                detail = response.text
            raise ClientError(str(detail))
        return response.json()


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as handle:
        return handle.read()


def _print_solutions(data: dict, mode: str) -> int:
    if mode == "count":
        print(data["count"])
        return 0
    if data["count"] == 0:
        print("no solutions")
        return 1
    print(data["text"], end="")
    return 0


def cmd_profile(client: ServiceClient, args: argparse.Namespace) -> int:
    data = client.post("/profile", {"fds": _read_input(args.file)})
    print(data["profile"])
    return 0


def cmd_table(client: ServiceClient, args: argparse.Namespace) -> int:
    data = client.post("/table", {"max_size": args.max_size})
    print(data["text"], end="")
    return 0


def cmd_factor(client: ServiceClient, args: argparse.Namespace) -> int:
    data = client.post("/factor", {"profile": args.profile})
    if data["irreducible"]:
        print("irreducible")
        return 1
    for factors in data["factorisations"]:
        print(" * ".join(factors) if factors else "(1)")
    return 0


def cmd_divisors(client: ServiceClient, args: argparse.Namespace) -> int:
    data = client.post("/divisors", {"profile": args.profile})
    for divisor in data["divisors"]:
        print(divisor)
    return 0


def cmd_irreducible(client: ServiceClient, args: argparse.Namespace) -> int:
    data = client.post("/irreducible", {"profile": args.profile})
    if data["irreducible"]:
        print("irreducible")
        return 0
    print("reducible")
    return 1


def cmd_solve(client: ServiceClient, args: argparse.Namespace) -> int:
    data = client.post(
        "/solve",
        {
            "system": _read_input(args.file),
            "mode": args.mode,
            "max_candidates": args.max_candidates,
            "threads": args.threads,
        },
    )
    return _print_solutions(data, args.mode)


def cmd_sat(client: ServiceClient, args: argparse.Namespace) -> int:
    data = client.post(
        "/sat",
        {
            "cnf": _read_input(args.file),
            "single": args.single,
            "mode": args.mode,
            "max_candidates": args.max_candidates,
            "threads": args.threads,
        },
    )
    return _print_solutions(data, args.mode)


def cmd_census(client: ServiceClient, args: argparse.Namespace) -> int:
    data = client.post("/census", {"n": args.n, "cap": args.cap})
    print(data["machine" if args.machine else "table"], end="")
    return 0


def cmd_realize(client: ServiceClient, args: argparse.Namespace) -> int:
    data = client.post("/realize", {"profile": args.profile, "dot": args.dot})
    print(data["dot" if args.dot else "fds"], end="")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("topoprof.service.app:app", host=args.host, port=args.port)
    return 0


def _add_solver_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mode", choices=("first", "all", "count"), default="all")
    parser.add_argument(
        "--max-candidates",
        type=int,
        default=None,
        metavar="N",
        help="cap on the candidate-space size (default 10^8)",
    )
    parser.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topoprof",
        description="Profile algebra of finite dynamical systems (thin client of the HTTP service).",
    )
    parser.add_argument("--server", metavar="URL", default=None, help="remote service base URL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="profile of a dynamical system file")
    p.add_argument("file", help="dynamical system file ('-' for stdin)")
    p.set_defaults(handler=cmd_profile)

    p = sub.add_parser("table", help="multiplication table of all profiles up to a size")
    p.add_argument("max_size", type=int)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("factor", help="all factorisations into irreducibles")
    p.add_argument("profile")
    p.set_defaults(handler=cmd_factor)

    p = sub.add_parser("divisors", help="all divisors of a profile")
    p.add_argument("profile")
    p.set_defaults(handler=cmd_divisors)

    p = sub.add_parser("irreducible", help="irreducibility verdict")
    p.add_argument("profile")
    p.set_defaults(handler=cmd_irreducible)

    p = sub.add_parser("solve", help="solve an equation system file")
    p.add_argument("file", help="equation system file ('-' for stdin)")
    _add_solver_flags(p)
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("sat", help="solve a one-in-three instance via profile equations")
    p.add_argument("file", help="oitcnf file ('-' for stdin)")
    p.add_argument("--single", action="store_true", help="aggregate the system into one equation")
    _add_solver_flags(p)
    p.set_defaults(handler=cmd_sat)

    p = sub.add_parser("census", help="reducibility census of profiles up to a size")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=20, help="safety cap on n (default 20)")
    p.add_argument("--machine", action="store_true", help="machine-readable lines")
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser("realize", help="build a witness system for a profile")
    p.add_argument("profile")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of the system format")
    p.set_defaults(handler=cmd_realize)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        return cmd_serve(args)
    try:
        client = ServiceClient(args.server)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.handler(client, args)
    except (ClientError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
