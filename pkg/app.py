"""
Type-A cluster algebra toolkit
Commands: enumerate, graph, cluster-vars, cycles, homology, relations, verify, recurrence
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv

from cluster import VERSION
from cluster.base import AssocError, ResourceLimit
from utils import cleanup_stale_artifacts, output_dir
from commands import (
    ClusterVarsCommand,
    CyclesCommand,
    EnumerateCommand,
    GraphCommand,
    HomologyCommand,
    RecurrenceCommand,
    RelationsCommand,
    RunConfig,
    UsageError,
    VerifyCommand,
)


# ---------------------------------------------------------
# ENV
# ---------------------------------------------------------
load_dotenv(".env", override=True)


# ---------------------------------------------------------
# LOGGING
# ---------------------------------------------------------
log = logging.getLogger("assoc")


def setup_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else os.getenv("ASSOC_LOG_LEVEL", "INFO").upper()
    logging.basicConfig(
        level=level,
        format="%(asctime)s | %(levelname)-8s | %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
        force=True,
    )
    log.setLevel(level)


# ---------------------------------------------------------
# EXIT CODES
# ---------------------------------------------------------
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


# ---------------------------------------------------------
# COMMANDS
# ---------------------------------------------------------
COMMANDS = [
    EnumerateCommand(),
    GraphCommand(),
    ClusterVarsCommand(),
    CyclesCommand(),
    HomologyCommand(),
    RelationsCommand(),
    VerifyCommand(),
    RecurrenceCommand(),
]


def get_command(name: str):
    """Get the command object answering to `name`"""
    for command in COMMANDS:
        if command.can_handle(name):
            log.debug(f"✅ Using {command.__class__.__name__}")
            return command
    log.warning(f"❌ No command named: {name}")
    return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="assoc", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"assoc {VERSION}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    for command in COMMANDS:
        command.add_arguments(sub.add_parser(command.NAME, help=command.HELP))
    return parser


# ---------------------------------------------------------
# MAIN
# ---------------------------------------------------------
def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    setup_logging(args.verbose)
    max_age = os.getenv("ASSOC_ARTIFACT_MAX_AGE")
    if max_age and not os.getenv("ASSOC_OUTPUT_DIR"):
        log.warning("⚠️ ASSOC_ARTIFACT_MAX_AGE is set but ASSOC_OUTPUT_DIR is not; skipping cleanup")
    elif max_age:
        cleanup_stale_artifacts(output_dir(), int(max_age))

    config = RunConfig.from_args(args)
    command = get_command(config.command)
    if command is None:
        return EXIT_USAGE

    try:
        command.check_limits(config)
        command.validate(config)
        log.info(f"🚀 {command.NAME} n={config.n}" if command.TAKES_N else f"🚀 {command.NAME}")
        return command.run(config)
    except UsageError as e:
        log.error(f"❌ {e}")
        return EXIT_USAGE
    except ResourceLimit as e:
        log.error(f"⛔ {e}")
        return EXIT_RESOURCE
    except AssocError as e:
        log.error(f"❌ {type(e).__name__}: {e}")
        log.debug("details", exc_info=True)
        return EXIT_FAILED


run = main


if __name__ == "__main__":
    sys.exit(main())
