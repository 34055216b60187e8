#!/usr/bin/env python3
"""
AltSearch - white-box best-first proof search

Command-line entry point and FastAPI application.

    python main.py prove --goal "A |- (B -> C) | (A & A)" --trace
    python main.py clusters --goal "?x & ?y; ?v; ?y & ?z; ?z"
    python main.py serve --port 8000

Exit codes of `prove`: 0 proved, 1 stuck, 2 budget exhausted, 3 usage error.
"""
import argparse
import logging
import sys
from typing import List, Optional

from fastapi import FastAPI

from config import APP_VERSION, DEFAULT_MAX_STEPS, DEFAULT_PORT, DEFAULT_RULES_PATH, LOG_LEVEL
from routes import cluster_report, setup_prove_routes
from search_engine.config import DEFAULT_RULES, SearchConfig
from search_engine.engine import Status, prove
from search_engine.logic import GoalSyntaxError
from utils.inputs import RuleTableError, load_rules, parse_goals
from utils.tree_export import dump_result, export_dot, export_json

# Logging setup
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

EXIT_CODES = {
    Status.PROVED: 0,
    Status.STUCK: 1,
    Status.BUDGET_EXHAUSTED: 2,
}
EXIT_USAGE = 3


class UsageError(Exception):
    pass


class CliParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 3"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> CliParser:
    parser = CliParser(prog="altsearch", description="AltSearch - white-box best-first proof search")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    prove_cmd = sub.add_parser("prove", help="Run best-first search on a goal")
    prove_cmd.add_argument("--goal", action="append", required=True,
                           help="Goal text; repeat or separate with ';' for several goals")
    prove_cmd.add_argument("--rules", default=DEFAULT_RULES_PATH,
                           help="Rule table (YAML or JSON list of {rule, priority, name})")
    prove_cmd.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS,
                           help=f"Step budget (default {DEFAULT_MAX_STEPS})")
    prove_cmd.add_argument("--dump-tree", metavar="FILE", help="Write the final tree as JSON")
    prove_cmd.add_argument("--dump-dot", metavar="FILE", help="Write the final tree as Graphviz DOT")
    prove_cmd.add_argument("--trace", action="store_true", help="Print every selection")
    prove_cmd.add_argument("--clusters", choices=("on", "off"), default="on",
                           help="Search goal clusters independently")
    prove_cmd.add_argument("--no-prune", action="store_true",
                           help="Create action nodes for rules that do not apply")

    clusters_cmd = sub.add_parser("clusters", help="Print the goal clusters of a goal state")
    clusters_cmd.add_argument("--goal", action="append", required=True,
                              help="Goal text; repeat or separate with ';' for several goals")

    serve_cmd = sub.add_parser("serve", help="Run the HTTP service")
    serve_cmd.add_argument("--host", default="0.0.0.0")
    serve_cmd.add_argument("--port", type=int, default=DEFAULT_PORT)
    serve_cmd.add_argument("--rules", default=DEFAULT_RULES_PATH)
    return parser


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def run_prove(args) -> int:
    if args.max_steps < 0:
        raise UsageError(f"--max-steps must be non-negative, got {args.max_steps}")
    goal_state = parse_goals(args.goal)
    config = SearchConfig(
        rules=load_rules(args.rules),
        clustering=args.clusters == "on",
        prune_inapplicable=not args.no_prune,
        max_steps=args.max_steps,
    )
    result = prove(goal_state, config)

    if args.trace:
        for step in result.trace:
            print(f"step {step.step}: {step.rule} ({step.priority}) node {step.node_id} at {step.position.to_json()}")
    print(f"{result.status.value} after {result.steps} steps")
    if result.failure:
        print(f"last step failed: {result.failure}", file=sys.stderr)

    if args.dump_tree or args.dump_dot:
        dump = dump_result(result, str(goal_state))
        if args.dump_tree:
            _write(args.dump_tree, export_json(dump))
        if args.dump_dot:
            _write(args.dump_dot, export_dot(dump))
    return EXIT_CODES[result.status]


def run_clusters(args) -> int:
    goal_state = parse_goals(args.goal)
    for entry in cluster_report(goal_state):
        numbers = ", ".join(str(n) for n in entry["goals"])
        verdict = "" if entry["valid"] is None else ("  valid" if entry["valid"] else "  not valid")
        print(f"{{{numbers}}}: {'; '.join(entry['text'])}{verdict}")
    return 0


def _server_rules(path: str):
    try:
        return load_rules(path)
    except RuleTableError as e:
        logging.warning(f"Rules: {e}; using the built-in table")
        return list(DEFAULT_RULES)


def create_app(rules_path: str = DEFAULT_RULES_PATH) -> FastAPI:
    app = FastAPI(
        title="AltSearch",
        description="White-box best-first proof search over alternating zippers",
        version=APP_VERSION,
    )
    app.include_router(setup_prove_routes(_server_rules(rules_path), DEFAULT_MAX_STEPS))

    @app.get("/health")
    def health_check():
        return {"status": "ok", "version": APP_VERSION}

    return app


def run_serve(args) -> int:
    import uvicorn

    uvicorn.run(create_app(args.rules), host=args.host, port=args.port, log_level=LOG_LEVEL.lower())
    return 0


COMMANDS = {
    "prove": run_prove,
    "clusters": run_clusters,
    "serve": run_serve,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except GoalSyntaxError as e:
        logging.error(f"Goal: {e}")
    except RuleTableError as e:
        logging.error(f"Rules: {e}")
    except (UsageError, ValueError) as e:
        logging.error(f"Usage: {e}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
