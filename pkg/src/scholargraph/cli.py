"""Operator command line: build, query, profile, dump, serve.

Exit codes: 0 success, 1 usage error, 2 unreadable or unwritable files,
3 unsupported query, 4 entity not found.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional

from scholargraph.errors import (
    ConfigError,
    CorpusError,
    EntityNotFoundError,
    GraphBuildError,
    KindError,
    NotFoundError,
    UnsupportedQueryError,
)
from scholargraph.graph import EntityKind, KnowledgeGraph, build_from_files
from scholargraph.nlq import Answer, answer_nlq
from scholargraph.profiles import author_profile, paper_profile, venue_profile
from scholargraph.storage import dump_text, load_graph, save_graph
from scholargraph.textutil import normalize_name

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_UNSUPPORTED = 3
EXIT_NOT_FOUND = 4

log = logging.getLogger(__name__)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scholargraph",
        description="Build and query a scholarly knowledge graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a graph file from a corpus")
    b.add_argument("--corpus", required=True, help="publication records, one JSON object per line")
    b.add_argument("--venues", help="JSON venue unification table (raw name -> unified id)")
    b.add_argument("--fields", help="JSON field vocabulary (field -> keyword list)")
    b.add_argument("--out", required=True, help="output graph file")
    b.set_defaults(func=_cmd_build)

    q = sub.add_parser("query", help="answer one natural-language query")
    q.add_argument("graph", help="graph file produced by build")
    q.add_argument("text", help="the query")
    q.add_argument("--format", choices=("text", "structured"), default="text")
    q.set_defaults(func=_cmd_query)

    p = sub.add_parser("profile", help="print an entity profile")
    p.add_argument("graph", help="graph file produced by build")
    p.add_argument("kind", choices=("paper", "author", "venue"))
    p.add_argument("entity", help="entity id or exact name")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=_cmd_profile)

    d = sub.add_parser("dump", help="write the plain-text node/edge dump")
    d.add_argument("graph", help="graph file produced by build")
    d.add_argument("--out", help="destination file (default: standard output)")
    d.set_defaults(func=_cmd_dump)

    s = sub.add_parser("serve", help="run the REST service")
    s.add_argument("graph", help="graph file produced by build")
    s.add_argument("--address", default="127.0.0.1:8765", help="host:port to bind")
    s.add_argument("--static", help="directory of web UI files to serve at /")
    s.set_defaults(func=_cmd_serve)

    return parser


def _cmd_build(args: argparse.Namespace) -> int:
    g, skipped = build_from_files(args.corpus, args.venues, args.fields)
    save_graph(g, args.out)
    if skipped:
        print(f"skipped {skipped} malformed record(s)", file=sys.stderr)
    print(f"wrote {args.out}: {g.node_count()} nodes, {g.edge_count()} edges")
    return EXIT_OK


def _answer_text(answer: Answer) -> str:
    if answer.shape == "yesno":
        return "yes" if answer.yes else "no"
    if answer.shape == "count":
        return str(answer.count)
    if answer.shape == "series":
        pairs = answer.series.to_pairs() if answer.series else []
        return "\n".join(f"{year}\t{count}" for year, count in pairs)
    if answer.shape == "comparison":
        return "\n".join(f"{disp}\t{count}" for _, disp, count in answer.per_entity)
    return "\n".join(f"{p.paper_id}\t{p.title}" for p in answer.papers)


def _cmd_query(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    answer = answer_nlq(g, args.text)
    if args.format == "structured":
        print(json.dumps(answer.to_dict(), ensure_ascii=False, sort_keys=True, indent=2))
    else:
        print(_answer_text(answer))
    return EXIT_OK


_PROFILE_KINDS = {
    "paper": (EntityKind.PAPER, paper_profile),
    "author": (EntityKind.AUTHOR, author_profile),
    "venue": (EntityKind.VENUE, venue_profile),
}


def _resolve_entity(g: KnowledgeGraph, kind: EntityKind, token: str) -> str:
    try:
        node = g.node(token)
    except NotFoundError:
        node = None
    if node is not None and node.kind is kind:
        return node.node_id
    want = normalize_name(token)
    matches = sorted(
        n.node_id for n in g.nodes(kind) if normalize_name(n.display) == want
    )
    if matches:
        return matches[0]
    raise NotFoundError(f"no {kind.value} with id or name {token!r}")


def _cmd_profile(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    kind, build_profile = _PROFILE_KINDS[args.kind]
    entity_id = _resolve_entity(g, kind, args.entity)
    payload = build_profile(g, entity_id).to_dict()
    if args.format == "structured":
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2))
    else:
        for key, value in payload.items():
            if value is None or isinstance(value, (str, int, float)):
                print(f"{key}: {value}")
            else:
                print(f"{key}: {json.dumps(value, ensure_ascii=False)}")
    return EXIT_OK


def _cmd_dump(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    text = dump_text(g)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise CorpusError(f"cannot write dump to {args.out}: {exc}") from exc
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    from scholargraph.service import serve

    g = load_graph(args.graph)
    serve(g, bind_address=args.address, static_dir=args.static)
    return EXIT_OK


def run(argv: Optional[list[str]] = None) -> int:
    """Parse *argv* and execute one command, returning the exit code."""
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UnsupportedQueryError as exc:
        print(f"unsupported query: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (NotFoundError, EntityNotFoundError, KindError) as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except (CorpusError, ConfigError, GraphBuildError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
