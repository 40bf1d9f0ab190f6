"""Command-line front door.

The CLI is a thin client over the service API: by default it mounts the
FastAPI app in-process (no network), and --server points it at a running
instance instead.  Exit codes: 0 all verified, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

import httpx

from .reports import VERIFY_CHECKS
from .serialize import dumps, matrix_from_json, render_matrix

USAGE_ERROR = 2
VERIFY_FAILURE = 1


class UsageError(Exception):
    pass


def _client(server: Optional[str]) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app, raise_server_exceptions=False)


def _add_spec_args(p: argparse.ArgumentParser):
    p.add_argument("--family", choices=["frt", "dd", "c1", "c2", "ext", "custom"])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument(
        "--spec",
        metavar="FILE",
        help="family spec as a JSON file (required for custom A/M blocks)",
    )


def _spec_payload(args) -> dict:
    if args.spec:
        with open(args.spec, "r", encoding="utf-8") as fh:
            return json.load(fh)
    if not (args.family and args.n and args.r):
        raise UsageError("--family/--n/--r or --spec are required")
    return {"kind": args.family, "n": args.n, "r": args.r}


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_range(text: str) -> list:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return [int(lo), int(hi)]
    v = int(text)
    return [v, v]


def _request(client: httpx.Client, url: str, payload: dict) -> dict:
    resp = client.post(url, json=payload)
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except Exception:
            detail = resp.text
        raise UsageError(f"{url} -> {resp.status_code}: {detail}")
    return resp.json()


def _latex_block(args) -> int:
    # partition LaTeX output into r x r blocks like the displayed matrices
    if args.spec:
        with open(args.spec, "r", encoding="utf-8") as fh:
            return int(json.load(fh).get("r", 0))
    return args.r or 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qseed",
        description="Defining matrices, quasi-commutation matrices and "
        "quantum seeds of quantized matrix algebras, exactly.",
    )
    parser.add_argument("--server", help="base URL of a running service instance")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-h", help="emit the defining matrix H")
    _add_spec_args(p)
    p.add_argument("--format", choices=["json", "csv", "latex"], default="json")
    p.add_argument("--out")

    p = sub.add_parser("build-lambda", help="emit the quasi-commutation matrix")
    _add_spec_args(p)
    p.add_argument("--format", choices=["json", "csv", "latex"], default="json")
    p.add_argument("--out")

    p = sub.add_parser(
        "analyze", help="corank, determinant, block counts, degrees, center"
    )
    _add_spec_args(p)
    p.add_argument("--m", type=int, action="append", default=[], help="root order(s)")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run one closed-form-vs-oracle verification")
    p.add_argument("checkname", choices=list(VERIFY_CHECKS), metavar="check")
    _add_spec_args(p)
    p.add_argument("--cap", type=int, help="symbolic minor-order cap override")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--out")

    p = sub.add_parser("sweep", help="closed forms vs oracles over a grid")
    p.add_argument(
        "--family",
        action="append",
        choices=["frt", "dd", "c1", "c2", "ext"],
        help="repeatable; default dd, frt, c1, c2",
    )
    p.add_argument("--n", default="2..6", help="range LO..HI (default 2..6)")
    p.add_argument("--r", default="2..6", help="range LO..HI (default 2..6)")
    p.add_argument("--m", type=int, action="append", default=[])
    p.add_argument("--workers", type=int, help="override QSEED_WORKERS")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    return parser


def _sweep_csv(report: dict) -> str:
    lines = ["family,n,r,corank,det,blocks1,blocks2,blocks4,verdict"]
    for row in report["rows"]:
        lines.append(
            ",".join(
                str(x)
                for x in (
                    row["family"],
                    row["n"],
                    row["r"],
                    row["corank"],
                    row["det"] if row["det"] is not None else "",
                    row["blocks"]["1"],
                    row["blocks"]["2"],
                    row["blocks"]["4"],
                    row["verdict"],
                )
            )
        )
    return "\n".join(lines) + "\n"


def _run(args, client: httpx.Client) -> int:
    if args.command in ("build-h", "build-lambda"):
        url = "/build/h" if args.command == "build-h" else "/build/lambda"
        data = _request(client, url, {"spec": _spec_payload(args)})
        matrix = matrix_from_json(data["matrix"])
        _emit(render_matrix(matrix, args.format, block=_latex_block(args)), args.out)
        return 0

    if args.command == "analyze":
        data = _request(client, "/analyze", {"spec": _spec_payload(args), "m": args.m})
        _emit(dumps(data), args.out)
        return 0

    if args.command == "verify":
        payload = {"spec": _spec_payload(args)}
        if args.cap is not None:
            payload["cap"] = args.cap
        data = _request(client, f"/verify/{args.checkname}", payload)
        _emit(dumps(data), args.out)
        print(f"{args.checkname}: {data['status'].upper()}", file=sys.stderr)
        return 0 if data["status"] == "pass" else VERIFY_FAILURE

    if args.command == "sweep":
        payload = {
            "families": args.family or ["dd", "frt", "c1", "c2"],
            "n": _parse_range(args.n),
            "r": _parse_range(args.r),
            "m": args.m,
        }
        if args.workers:
            payload["workers"] = args.workers
        data = _request(client, "/sweep", payload)
        _emit(_sweep_csv(data) if args.format == "csv" else dumps(data), args.out)
        print(f"sweep: {data['status'].upper()}", file=sys.stderr)
        return 0 if data["status"] == "pass" else VERIFY_FAILURE

    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with _client(args.server) as client:
            return _run(args, client)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except httpx.HTTPError as exc:
        print(f"error: transport failure: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
