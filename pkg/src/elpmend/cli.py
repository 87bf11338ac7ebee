"""Command-line interface.

Subcommands: analyze (conflict report), graph (solution graph export),
resolve (scripted or prompt-driven repair), serve (local HTTP service).
Program input arguments accept a file path or ``-`` for stdin.

Exit codes: 0 success or conflict-free, 1 conflicts remain, 2 every conflict
is unresolvable, 3 parse error, 4 invalid resolve step, 5 bind failure.
"""

from __future__ import annotations

import argparse
import json
import socket
import sys

from .model import DuplicateRuleIdError, ProgramSyntaxError
from .lambda_graph import export_graph
from .ordering import order_extensions
from .session import (
    BadChoiceIndexError,
    EmptyHistoryError,
    InvalidTargetError,
    Session,
    StaleExtensionError,
)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _open_session(path: str, cover: int | None, clique: int | None = None) -> Session | int:
    """A session over the given input, or an exit code on failure."""
    try:
        text = _read_input(path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    try:
        return Session(
            text,
            cover_choice="auto" if cover is None else cover,
            clique_choice="auto" if clique is None else clique,
        )
    except (ProgramSyntaxError, DuplicateRuleIdError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BadChoiceIndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def _status_exit(session: Session) -> int:
    if session.status == "clean":
        return 0
    if session.status == "blocked":
        return 2
    return 1


def _pairs_text(pairs) -> str:
    return ",".join("{" + ",".join(pair) + "}" for pair in pairs)


def _analyze_json(session: Session) -> dict:
    state = session.state_payload()
    groups = [
        {
            "anchor": g["anchor"],
            "representative": g["representative"],
            "conflicts": g["conflicts"],
            "size": g["size"],
            "extensions": [ext["key"] for ext in g["extensions"]],
        }
        for g in state["groups"]
        if not g["resolved"]
    ]
    return {
        "status": state["status"],
        "conflicts": state["conflicts"],
        "groups": groups,
        "covers": state["covers"],
        "cover_index": state["cover_index"],
        "unresolvable": state["unresolvable"],
    }


def _analyze_text(session: Session) -> str:
    state = session.state_payload()
    lines = [f"status: {state['status']}"]
    conflicts = state["conflicts"]
    lines.append(f"conflicts ({len(conflicts)}): " + " ".join("{" + ",".join(c) + "}" for c in conflicts))
    if state["unresolvable"]:
        lines.append(
            f"unresolvable ({len(state['unresolvable'])}): "
            + " ".join("{" + ",".join(c) + "}" for c in state["unresolvable"])
        )
    lines.append(f"cover {state['cover_index'] + 1} of {len(state['covers'])}")
    lines.append("Group | Representative | Conflicts | Extensions")
    for g in state["groups"]:
        if g["resolved"]:
            continue
        exts = " ; ".join(ext["key"] for ext in g["extensions"])
        lines.append(
            f"cgr({g['id']}) | {g['representative']} | {_pairs_text(g['conflicts'])} | {exts}"
        )
    return "\n".join(lines) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    session = _open_session(args.program, args.cover)
    if isinstance(session, int):
        return session
    if args.json:
        sys.stdout.write(json.dumps(_analyze_json(session), indent=2) + "\n")
    else:
        sys.stdout.write(_analyze_text(session))
    return _status_exit(session)


def cmd_graph(args: argparse.Namespace) -> int:
    session = _open_session(args.program, args.cover)
    if isinstance(session, int):
        return session
    fmt = "dot" if args.dot else "json"
    sys.stdout.write(export_graph(session.graph, fmt))
    return 0


def _interactive(session: Session) -> int:
    out = sys.stdout
    while True:
        state = session.state_payload()
        out.write(f"status: {state['status']}  conflicts: {len(state['conflicts'])}\n")
        if session.status == "clean":
            out.write(state["program"])
            return 0
        if session.status == "blocked":
            out.write("all remaining conflicts are unresolvable\n")
            return 2
        for gid in session.group_order():
            menu = " ".join(
                f"{rank.key}({rank.weight})" for rank in order_extensions(session.graph, gid)
            )
            out.write(f"  cgr({gid}): {menu}\n")
        out.write("commands: KEY TARGET [TARGET...] | undo | quit\n")
        try:
            line = input("choose> ").strip()
        except EOFError:
            return _status_exit(session)
        if not line:
            continue
        if line in ("quit", "q"):
            return _status_exit(session)
        if line in ("undo", "u"):
            try:
                session.undo()
            except EmptyHistoryError as exc:
                out.write(f"error: {exc}\n")
            continue
        parts = line.split()
        try:
            result = session.choose(parts[0], parts[1:])
        except (InvalidTargetError, StaleExtensionError) as exc:
            out.write(f"error: {exc}\n")
            continue
        resolved = " ".join("{" + ",".join(pair) + "}" for pair in result.resolved_now)
        out.write(f"resolved: {resolved or '(nothing)'}\n")


def cmd_resolve(args: argparse.Namespace) -> int:
    session = _open_session(args.program, args.cover)
    if isinstance(session, int):
        return session
    if args.interactive_tty:
        return _interactive(session)
    try:
        script = json.loads(_read_input(args.script))
        steps = [(step["extension"], list(step["targets"])) for step in script]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: bad script: {exc}", file=sys.stderr)
        return 4
    for index, (key, targets) in enumerate(steps):
        try:
            session.choose(key, targets)
        except (InvalidTargetError, StaleExtensionError) as exc:
            print(f"step {index}: {exc}", file=sys.stderr)
            return 4
    if args.save:
        session.save(args.save)
    sys.stdout.write(session.state_payload()["program"])
    return 0 if session.status == "clean" else 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import SessionStore, create_app

    store = SessionStore()
    preload_id = None
    if args.session:
        try:
            preload_id = store.add(Session.load(args.session))
        except (OSError, ValueError, KeyError) as exc:
            print(f"error: cannot load session: {exc}", file=sys.stderr)
            return 3
    app = create_app(store=store, static_dir=args.static_dir)
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, args.port))
    except OSError as exc:
        print(f"error: cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        sock.close()
        return 5
    port = sock.getsockname()[1]
    print(port, flush=True)
    if preload_id is not None:
        print(f"session {preload_id}", flush=True)
    config = uvicorn.Config(app, log_level="warning")
    server = uvicorn.Server(config)
    server.run(sockets=[sock])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="elpmend", description="Workbench for repairing conflicting rule programs.")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="report conflicts, groups, and covers")
    analyze.add_argument("program", help="program file, or - for stdin")
    fmt = analyze.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable report")
    fmt.add_argument("--text", action="store_true", help="plain-text table (default)")
    analyze.add_argument("--cover", type=int, default=None, help="cover index to select")
    analyze.set_defaults(func=cmd_analyze)

    graph = sub.add_parser("graph", help="export the solution graph")
    graph.add_argument("program", help="program file, or - for stdin")
    gfmt = graph.add_mutually_exclusive_group()
    gfmt.add_argument("--json", action="store_true", help="JSON export (default)")
    gfmt.add_argument("--dot", action="store_true", help="Graphviz DOT export")
    graph.add_argument("--cover", type=int, default=None, help="cover index to select")
    graph.set_defaults(func=cmd_graph)

    resolve = sub.add_parser("resolve", help="apply extensions from a script or prompt")
    resolve.add_argument("program", help="program file, or - for stdin")
    resolve.add_argument("--script", help="JSON list of {extension, targets} steps")
    resolve.add_argument("--interactive-tty", action="store_true", help="prompt-driven loop")
    resolve.add_argument("--cover", type=int, default=None, help="cover index to select")
    resolve.add_argument("--save", help="write the session file here when done")
    resolve.set_defaults(func=cmd_resolve)

    serve = sub.add_parser("serve", help="run the local HTTP service")
    serve.add_argument("--host", default="127.0.0.1", help="bind address (default 127.0.0.1)")
    serve.add_argument("--port", type=int, default=8787, help="port, 0 for OS-assigned")
    serve.add_argument("--static-dir", default=None, help="serve this directory at /")
    serve.add_argument("--session", default=None, help="preload a saved session file")
    serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "resolve" and not args.interactive_tty and not args.script:
        parser.error("resolve needs --script or --interactive-tty")
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
