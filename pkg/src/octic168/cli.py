"""Command-line front end: a thin client of the certification service.

All math runs behind the HTTP API.  By default the CLI talks to an
in-process ASGI instance of the service, so no server needs to be
running; `--server URL` points it at a remote instance instead, and
`serve` starts one.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage
or I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys

import httpx

USAGE_ERROR = 2
MATH_FAILURE = 1


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=None)
    from fastapi.testclient import TestClient

    from .service import create_app

    return TestClient(create_app(), base_url="http://octic168.internal")


def _write_out(path: str | None, content: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(content)
        if not content.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(content)


def cmd_certify(args) -> int:
    payload: dict = {"include_text": args.format == "text"}
    if args.params:
        try:
            with open(args.params, encoding="utf-8") as fh:
                payload["params"] = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read parameter file: {exc}", file=sys.stderr)
            return USAGE_ERROR
    with _client(args.server) as client:
        resp = client.post("/api/v1/certify", json=payload)
    if resp.status_code != 200:
        print(f"error: service returned {resp.status_code}: {resp.text}", file=sys.stderr)
        return USAGE_ERROR
    body = resp.json()
    if args.format == "text":
        content = body["text"]
    else:
        content = json.dumps(body["certificate"], indent=1, sort_keys=True)
    try:
        _write_out(args.out, content)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if not body["passed"]:
        print("certification FAILED:", file=sys.stderr)
        for d in body["certificate"].get("diagnostics", []):
            print(f"  {d}", file=sys.stderr)
        return MATH_FAILURE
    return 0


def cmd_sample(args) -> int:
    with _client(args.server) as client:
        resp = client.post(
            "/api/v1/sample", json={"seed": args.seed, "count": args.count}
        )
    if resp.status_code != 200:
        print(f"error: service returned {resp.status_code}: {resp.text}", file=sys.stderr)
        return USAGE_ERROR
    body = resp.json()
    if args.json:
        content = json.dumps(body, indent=1, sort_keys=True)
        try:
            _write_out(args.out, content)
        except OSError as exc:
            print(f"error: cannot write output: {exc}", file=sys.stderr)
            return USAGE_ERROR
    else:
        for total in body["totals"]:
            print(total)
    return 0 if body["all_generic"] else MATH_FAILURE


def cmd_show(args) -> int:
    with _client(args.server) as client:
        resp = client.get(f"/api/v1/show/{args.target}")
    if resp.status_code == 404:
        print(f"error: unknown target {args.target!r}", file=sys.stderr)
        return USAGE_ERROR
    if resp.status_code != 200:
        print(f"error: service returned {resp.status_code}", file=sys.stderr)
        return USAGE_ERROR
    print(resp.json()["content"])
    return 0


def cmd_render(args) -> int:
    with _client(args.server) as client:
        resp = client.post(
            "/api/v1/render",
            json={"resolution": args.resolution, "bounds": args.bounds, "jobs": args.jobs},
        )
    if resp.status_code == 422:
        print(f"error: invalid render configuration: {resp.text}", file=sys.stderr)
        return USAGE_ERROR
    if resp.status_code != 200:
        print(f"error: service returned {resp.status_code}", file=sys.stderr)
        return USAGE_ERROR
    body = resp.json()
    try:
        _write_out(args.out, body["obj"])
    except OSError as exc:
        print(f"error: cannot write mesh: {exc}", file=sys.stderr)
        return USAGE_ERROR
    print(f"wrote {body['vertices']} vertices, {body['faces']} faces", file=sys.stderr)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octic168",
        description="Exact certification of the 168-node octic surface.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="URL of a running service (default: run the service in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cert = sub.add_parser("certify", help="run the full certification")
    p_cert.add_argument("--params", help="JSON parameter file (defaults to the 168-node member)")
    p_cert.add_argument("--out", help="output path (default: stdout)")
    p_cert.add_argument("--format", choices=("json", "text"), default="json")
    p_cert.set_defaults(func=cmd_certify)

    p_sample = sub.add_parser("sample", help="certify random generic family members")
    p_sample.add_argument("--seed", type=int, required=True)
    p_sample.add_argument("--count", type=int, default=1)
    p_sample.add_argument("--json", action="store_true", help="structured output")
    p_sample.add_argument("--out", help="output path for --json (default: stdout)")
    p_sample.set_defaults(func=cmd_sample)

    p_show = sub.add_parser("show", help="print exact objects")
    p_show.add_argument("target", choices=("P", "q", "F", "params", "final-equation"))
    p_show.set_defaults(func=cmd_show)

    p_render = sub.add_parser("render", help="export an OBJ isosurface mesh")
    p_render.add_argument("--resolution", type=int, default=48)
    p_render.add_argument("--bounds", type=float, default=3.0)
    p_render.add_argument("--jobs", type=int, default=1)
    p_render.add_argument("--out", required=True)
    p_render.set_defaults(func=cmd_render)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8168)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        return args.func(args)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
