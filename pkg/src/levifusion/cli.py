"""Command-line client for the fusion service.

Every subcommand builds the same request models the HTTP API uses and, by
default, runs them in process; ``--url`` sends them to a running service
instead.  Output is JSON on stdout, diagnostics are JSON on stderr.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.request

from .errors import LeviFusionError
from .service import handlers, schemas

_USAGE_EXIT = 1
_MISMATCH_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(json.dumps({"error": "usage", "detail": message}), file=sys.stderr)
        raise SystemExit(_USAGE_EXIT)


def _vertex_list(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_diagram_args(p: argparse.ArgumentParser, with_labels: bool = True):
    p.add_argument("--family", choices=list("ABCDEFG"))
    p.add_argument("--rank", type=int)
    if with_labels:
        p.add_argument("--plus", type=_vertex_list, default=[],
                       help="comma-separated J1 vertices")
        p.add_argument("--minus", type=_vertex_list, default=[],
                       help="comma-separated J2 vertices")
        p.add_argument("--input", help="read the labeled diagram from a JSON file")


def _diagram_from_args(args) -> schemas.DiagramIn:
    if getattr(args, "input", None):
        with open(args.input) as fh:
            obj = json.load(fh)
        return schemas.DiagramIn(**obj)
    if args.family is None or args.rank is None:
        raise LeviFusionError("--family and --rank are required (or use --input)")
    return schemas.DiagramIn(family=args.family, rank=args.rank,
                             plus=getattr(args, "plus", []),
                             minus=getattr(args, "minus", []))


def _post(url: str, path: str, payload: dict) -> dict:
    req = urllib.request.Request(
        url.rstrip("/") + path,
        data=json.dumps(payload).encode(),
        headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(req) as resp:
            return json.loads(resp.read())
    except urllib.error.HTTPError as e:
        body = e.read().decode(errors="replace")
        raise LeviFusionError(f"server returned {e.code}: {body}") from e


def _dispatch(args, path: str, request_model, handler) -> dict:
    if args.url:
        return _post(args.url, path, request_model.model_dump())
    return handler(request_model).model_dump()


def build_parser() -> _Parser:
    parser = _Parser(prog="levifusion",
                     description="Fusion of labeled Dynkin diagrams.")
    parser.add_argument("--url", help="send requests to a running service")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fuse", help="compute the fusion subset J")
    _add_diagram_args(p)
    p.add_argument("--method", choices=list(schemas.Method.__args__),
                   default="auto")
    p.add_argument("--relaxed-pattern4", action="store_true")

    p = sub.add_parser("partition", help="Jordan partition of the labeling (types A/D)")
    _add_diagram_args(p)

    p = sub.add_parser("conjugacy", help="decide Weyl-conjugacy of two subsets")
    p.add_argument("--family", choices=list("ABCDEFG"), required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--j", type=_vertex_list, required=True)
    p.add_argument("--jprime", type=_vertex_list, required=True)
    p.add_argument("--orbit-oracle", action="store_true",
                   help="use the root-orbit brute force instead of move closure")

    p = sub.add_parser("enumerate", help="full fusion table as JSON lines")
    p.add_argument("--family", choices=list("ABCDEFG"), required=True)
    p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("verify", help="exhaustive multi-method verification")
    p.add_argument("--family", choices=list("ABCDEFG"), required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--methods", help="comma-separated: weight,partition,epattern,oracle,fold,fold_a")
    p.add_argument("--sparse", action="store_true",
                   help="include assignments with unlabeled vertices")
    p.add_argument("--branch-ties", action="store_true",
                   help="exhaustively branch over tie and peeling choices")
    p.add_argument("--relaxed-pattern4", action="store_true")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except LeviFusionError as e:
        print(json.dumps({"error": type(e).__name__, "detail": str(e)}),
              file=sys.stderr)
        return _USAGE_EXIT
    except OSError as e:
        print(json.dumps({"error": "io", "detail": str(e)}), file=sys.stderr)
        return _USAGE_EXIT


def _run(args) -> int:
    if args.command == "fuse":
        req = schemas.FuseRequest(diagram=_diagram_from_args(args),
                                  method=args.method,
                                  relaxed_pattern4=args.relaxed_pattern4)
        print(json.dumps(_dispatch(args, "/fuse", req, handlers.handle_fuse)))
        return 0
    if args.command == "partition":
        req = schemas.PartitionRequest(diagram=_diagram_from_args(args))
        print(json.dumps(_dispatch(args, "/partition", req,
                                   handlers.handle_partition)))
        return 0
    if args.command == "conjugacy":
        req = schemas.ConjugacyRequest(family=args.family, rank=args.rank,
                                       j=args.j, j_prime=args.jprime,
                                       orbit_oracle=args.orbit_oracle)
        print(json.dumps(_dispatch(args, "/conjugacy", req,
                                   handlers.handle_conjugacy)))
        return 0
    if args.command == "enumerate":
        req = schemas.EnumerateRequest(family=args.family, rank=args.rank)
        out = _dispatch(args, "/enumerate", req, handlers.handle_enumerate)
        for record in out["records"]:
            print(json.dumps(record))
        return 0
    if args.command == "verify":
        methods = args.methods.split(",") if args.methods else None
        req = schemas.VerifyRequest(family=args.family, rank=args.rank,
                                    methods=methods, sparse=args.sparse,
                                    branch_ties=args.branch_ties,
                                    relaxed_pattern4=args.relaxed_pattern4,
                                    workers=args.workers)
        out = _dispatch(args, "/verify", req, handlers.handle_verify)
        print(json.dumps(out))
        return 0 if out["ok"] else _MISMATCH_EXIT
    if args.command == "serve":
        import uvicorn

        from .service.app import app
        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
