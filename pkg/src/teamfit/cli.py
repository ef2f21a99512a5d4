"""Batch command-line surface.

Exit codes: 0 success, 1 validation / data failure, 2 usage error.
`--output json` emits the canonical serialization of the report; the table
mode shows the same numbers rounded to 3 decimals.
"""
from __future__ import annotations

import argparse
import sys

from .persistence import Workspace, WorkspaceError, load_workspace
from .projection import Horizon
from .validation import InvalidCapacityError, ModelError
from . import reports


def _fmt(v) -> str:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        return str(v)
    if isinstance(v, int):
        return str(v)
    return f"{v:.3f}"


def _table(rows: list[dict], columns: list[str]) -> str:
    cells = [[_fmt(row.get(c, "")) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) if cells else len(c)
              for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def _emit(report: dict, args, table_fn) -> None:
    if args.output == "json":
        sys.stdout.write(reports.render(report) + "\n")
    else:
        sys.stdout.write(table_fn(report) + "\n")


def _horizon(args) -> Horizon:
    return Horizon(args.horizon)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="teamfit",
        description="Rank, classify and assemble individuals; evaluate device fit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, workspace=True):
        if workspace:
            p.add_argument("--workspace", "-w", required=True,
                           help="workspace JSON file")
        p.add_argument("--output", choices=("table", "json"), default="table")
        p.add_argument("--horizon", type=float, default=0.0, metavar="T",
                       help="projection horizon in periods (default 0)")

    p = sub.add_parser("validate", help="validate a workspace file")
    p.add_argument("file", help="workspace JSON file")
    p.add_argument("--output", choices=("table", "json"), default="table")

    p = sub.add_parser("score", help="per-profile Choquet and weighted-mean scores")
    common(p)
    p.add_argument("--capacity", required=True, metavar="NAME")

    p = sub.add_parser("rank", help="rank candidates under a capacity")
    common(p)
    p.add_argument("--capacity", required=True, metavar="NAME")
    p.add_argument("--top", type=int, default=None, metavar="N")

    p = sub.add_parser("classify", help="prototype-class membership report")
    common(p)
    p.add_argument("--model", required=True, metavar="NAME")
    p.add_argument("--minorities", action="store_true",
                   help="also list profiles no class claims")

    p = sub.add_parser("gap", help="upgrade effort to join a class")
    common(p)
    p.add_argument("--model", required=True, metavar="NAME")
    p.add_argument("--class", dest="class_id", required=True, metavar="ID")
    p.add_argument("--profile", required=True, metavar="ID")

    p = sub.add_parser("team", help="select a team of size k")
    common(p)
    p.add_argument("--capacity", required=True, metavar="NAME")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--combine", choices=("coverage", "mean"), default="coverage")
    p.add_argument("--method", choices=("exact", "greedy", "auto"), default="auto")

    p = sub.add_parser("device", help="device-to-population coverage")
    common(p)
    p.add_argument("--device", required=True, metavar="NAME")
    p.add_argument("--min-coverage", type=float, default=None, metavar="R")

    p = sub.add_parser("serve", help="serve the HTTP API over a workspace")
    p.add_argument("--workspace", "-w", required=True)
    p.add_argument("--addr", default="127.0.0.1:8000", metavar="HOST:PORT")
    p.add_argument("--cors-origin", action="append", default=None,
                   help="restrict CORS to this origin (repeatable; default: any)")

    return parser


def _score_table(report: dict) -> str:
    return _table(report["scores"], ["id", "choquet", "weighted_mean"])


def _rank_table(report: dict) -> str:
    return _table(report["ranking"], ["rank", "id", "score"])


def _classify_table(report: dict) -> str:
    rows = [{"id": p["id"],
             "assigned": ",".join(p["assigned"]) or "-",
             "degrees": "  ".join(f"{c}={d:.3f}" for c, d in sorted(p["degrees"].items()))}
            for p in report["profiles"]]
    out = _table(rows, ["id", "assigned", "degrees"])
    if "minorities" in report:
        out += "\nminorities: " + (", ".join(report["minorities"]) or "-")
    return out


def _gap_table(report: dict) -> str:
    rows = [{"criterion": cid, "required": report["required"][cid],
             "deficit": report["deficits"][cid]}
            for cid in sorted(report["required"])]
    out = _table(rows, ["criterion", "required", "deficit"])
    ttr = report["time_to_ready"]
    out += f"\ntime_to_ready: {'unreachable' if ttr is None else _fmt(ttr)}"
    if report.get("reachable_within") is not None:
        out += f"\nreachable within horizon: {report['reachable_within']}"
    if report["unreachable"] and report["reachable_with_full_motivation"]:
        out += "\nnote: reachable if motivation were raised to 1"
    return out


def _team_table(report: dict) -> str:
    lines = [
        "members: " + ", ".join(report["members"]),
        "objective: " + _fmt(report["objective"]),
        "method: " + report["method_used"],
        "team vector: " + "  ".join(
            f"{c}={v:.3f}" for c, v in sorted(report["team_vector"].items())),
    ]
    return "\n".join(lines)


def _device_table(report: dict) -> str:
    rows = [{"function": fid, "coverage": cov}
            for fid, cov in sorted(report["per_function"].items())]
    out = _table(rows, ["function", "coverage"])
    if "recommended" in report:
        out += "\nrecommended: " + (
            ", ".join(e["id"] for e in report["recommended"]) or "-")
        out += "\nexcluded: " + (
            ", ".join(e["id"] for e in report["excluded"]) or "-")
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "validate":
            try:
                load_workspace(args.file)
            except WorkspaceError as e:
                if args.output == "json":
                    sys.stdout.write(reports.render(
                        {"ok": False, "errors": [str(e)]}) + "\n")
                else:
                    sys.stderr.write(f"invalid: {e}\n")
                return 1
            if args.output == "json":
                sys.stdout.write(reports.render({"ok": True, "errors": []}) + "\n")
            else:
                sys.stdout.write("ok\n")
            return 0

        ws = load_workspace(args.workspace)

        if args.command == "score":
            report = reports.score_report(
                ws, ws.capacity(args.capacity), _horizon(args),
                capacity_name=args.capacity)
            _emit(report, args, _score_table)
        elif args.command == "rank":
            report = reports.rank_report(
                ws, ws.capacity(args.capacity), _horizon(args),
                top=args.top, capacity_name=args.capacity)
            _emit(report, args, _rank_table)
        elif args.command == "classify":
            report = reports.classify_report(
                ws, args.model, _horizon(args), minorities=args.minorities)
            _emit(report, args, _classify_table)
        elif args.command == "gap":
            report = reports.gap_report(
                ws, args.model, args.class_id, args.profile, _horizon(args))
            _emit(report, args, _gap_table)
        elif args.command == "team":
            report = reports.team_report(
                ws, ws.capacity(args.capacity), args.k, _horizon(args),
                combine=args.combine, method=args.method,
                capacity_name=args.capacity)
            _emit(report, args, _team_table)
        elif args.command == "device":
            report = reports.device_report(
                ws, args.device, _horizon(args), min_coverage=args.min_coverage)
            _emit(report, args, _device_table)
        elif args.command == "serve":
            from pathlib import Path

            from .service import run_server
            host, _, port = args.addr.rpartition(":")
            if not host or not port.isdigit():
                parser.error(f"bad --addr {args.addr!r}, expected HOST:PORT")
            static = Path("frontend/dist")
            run_server(ws, host, int(port), cors_origins=args.cors_origin,
                       static_dir=str(static) if static.is_dir() else None)
        return 0
    except (WorkspaceError, InvalidCapacityError, ModelError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
