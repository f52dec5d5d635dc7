import os
import sys
import logging
import argparse
from typing import List, Optional

from pydantic import BaseModel

from utils.config import CONFIG_PATH, Settings, generate_config_file, load_settings, read_config
from utils.parser import ParseError, format_element, parse
from utils.reports import VerificationRun, render_json, render_text
from utils.rewrite import RewriteError, normalize
from utils.rules import NAMED_SETS, rule_set
from utils.scalars import Scalar
from utils.supermatrix import rhat_table
from suites import calculus, catalog, hopf, lie, rewrite, rmatrix  # noqa: F401  (registers the suites)
from suites.registry import SuiteContext, SuiteNotFoundError, registry, run_suites

logger = logging.getLogger("glpq")

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


class RuleRecord(BaseModel):
    id: str
    lhs: str
    rhs: str


class RuleTable(BaseModel):
    name: str
    rank: List[str]
    rules: List[RuleRecord]


class RuleTables(BaseModel):
    tables: List[RuleTable]


class RhatTable(BaseModel):
    rows: List[List[str]]


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="glpq-verify",
        description="Exact symbolic checks for the quantum supergroup GL_{p,q}(1|1) and its differential calculi.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="Output format")
    common.add_argument("--log-level", default=None, help="Overrides GLPQ_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    normalize_cmd = commands.add_parser("normalize", parents=[common], help="Print the normal form of an expression")
    normalize_cmd.add_argument("--rules", default="functions", help="Rule set name")
    normalize_cmd.add_argument("expression")

    verify_cmd = commands.add_parser("verify", parents=[common], help="Run verification suites")
    verify_cmd.add_argument("selector", nargs="?", default="all", help="Suite id, area prefix, or 'all'")
    verify_cmd.add_argument("--list", action="store_true", help="List the registered suites and exit")

    rules_cmd = commands.add_parser("rules", help="Inspect rule tables")
    rules_sub = rules_cmd.add_subparsers(dest="rules_command", required=True)
    list_cmd = rules_sub.add_parser("list", parents=[common], help="Dump rule tables")
    list_cmd.add_argument("--set", dest="rule_set", default=None, help="Only this rule set")

    limit_cmd = commands.add_parser("limit", parents=[common], help="Normalize, then substitute p := 1, q := 1")
    limit_cmd.add_argument("--rules", default="functions", help="Rule set name")
    limit_cmd.add_argument("expression")

    commands.add_parser("rhat", parents=[common], help="Print the R̂ matrix")
    return parser.parse_args(argv)


def configure_logging(settings: Settings, override: Optional[str]) -> None:
    level = (override or settings.log_level).upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")


def cmd_normalize(args: argparse.Namespace, settings: Settings) -> int:
    rs = rule_set(args.rules)
    result = normalize(parse(args.expression), rs, settings.step_limit)
    print(format_element(result))
    return EXIT_OK


def cmd_limit(args: argparse.Namespace, settings: Settings) -> int:
    rs = rule_set(args.rules)
    result = normalize(parse(args.expression), rs, settings.step_limit)
    print(format_element(result.map_coefficients(Scalar.classical_limit)))
    return EXIT_OK


def cmd_rules(args: argparse.Namespace, output_format: str) -> int:
    names = [args.rule_set] if args.rule_set else list(NAMED_SETS)
    tables = [rule_set(name) for name in names]
    if output_format == "json":
        payload = [
            RuleTable(
                name=rs.name,
                rank=list(rs.rank_order),
                rules=[RuleRecord(id=r.id, lhs="*".join(r.lhs), rhs=format_element(r.rhs)) for r in rs.rules],
            )
            for rs in tables
        ]
        print(RuleTables(tables=payload).model_dump_json(indent=2))
    else:
        print("\n".join(rs.to_text() for rs in tables), end="")
    return EXIT_OK


def cmd_rhat(output_format: str) -> int:
    table = rhat_table()
    if output_format == "json":
        print(RhatTable(rows=table).model_dump_json(indent=2))
    else:
        width = max(len(entry) for row in table for entry in row)
        for row in table:
            print("  ".join(entry.rjust(width) for entry in row))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings, output_format: str) -> int:
    if args.list:
        for suite in registry.list():
            print(f"{suite.name}\t{suite.description}")
        return EXIT_OK
    context = SuiteContext(settings=settings, config=read_config())
    run = VerificationRun(results=run_suites(args.selector, context))
    print(render_json(run) if output_format == "json" else render_text(run), end="")
    return EXIT_OK if run.passed else EXIT_FAILURE


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    settings = load_settings()
    configure_logging(settings, args.log_level)

    # If verify.config.json doesn't exist, create it
    if not os.path.exists(CONFIG_PATH):
        generate_config_file()

    try:
        if args.command == "normalize":
            return cmd_normalize(args, settings)
        if args.command == "limit":
            return cmd_limit(args, settings)
        if args.command == "rules":
            return cmd_rules(args, args.format)
        if args.command == "rhat":
            return cmd_rhat(args.format)
        return cmd_verify(args, settings, args.format)
    except ParseError as e:
        logger.error(f"Parse error at position {e.position}: {e}")
        return EXIT_USAGE
    except (KeyError, SuiteNotFoundError) as e:
        logger.error(str(e).strip("'\""))
        return EXIT_USAGE
    except RewriteError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
