"""Base command class and run configuration"""

import argparse
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

from cluster.base import ResourceLimit, check_node_bound, max_n, max_nodes
from utils import write_artifact

log = logging.getLogger("assoc")

FORMATS = ("text", "json", "csv", "dot")


class UsageError(Exception):
    """Arguments that parse but make no sense for the request"""


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int = 2
    fmt: str = "text"
    max_nodes: int = 0
    output: Optional[str] = None
    theorem: str = "all"
    diagonal: Optional[str] = None
    seed: int = 0
    verbose: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            n=getattr(args, "n", 2),
            fmt=getattr(args, "format", None) or "text",
            max_nodes=getattr(args, "max_nodes", None) or max_nodes(),
            output=getattr(args, "output", None),
            theorem=getattr(args, "theorem", "all"),
            diagonal=getattr(args, "diagonal", None),
            seed=getattr(args, "seed", 0),
            verbose=getattr(args, "verbose", False),
        )


class BaseCommand(ABC):
    """Base class for all subcommands"""

    NAME: str = ""
    HELP: str = ""
    FORMATS = ("text", "json")
    TAKES_N = True
    HEAVY = False  # bounded by ASSOC_MAX_N as well as the node bound

    @classmethod
    def can_handle(cls, name: str) -> bool:
        """Check if this command answers to `name`"""
        return name == cls.NAME

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        if self.TAKES_N:
            parser.add_argument("--n", type=int, required=True, help="polygon has n+3 vertices")
            parser.add_argument("--max-nodes", type=int, default=None,
                                help="node bound (default ASSOC_MAX_NODES)")
        parser.add_argument("--format", choices=self.FORMATS, default=self.FORMATS[0])
        parser.add_argument("--output", default=None, help="write here instead of stdout")

    def validate(self, config: RunConfig) -> None:
        """Raise UsageError for option values the parser cannot judge on its own"""

    def check_limits(self, config: RunConfig) -> None:
        """Reject n outside the configured bounds before doing any work"""
        if not self.TAKES_N:
            return
        if config.n < 1:
            raise ResourceLimit(f"n must be >= 1, got {config.n}")
        check_node_bound(config.n, config.max_nodes)
        if self.HEAVY and config.n > max_n():
            raise ResourceLimit(f"{self.NAME} is limited to n <= {max_n()} (ASSOC_MAX_N), got n={config.n}")

    def header(self, config: RunConfig) -> str:
        from cluster import VERSION
        return f"# assoc {VERSION} {self.NAME} n={config.n}" if self.TAKES_N else f"# assoc {VERSION} {self.NAME}"

    def emit(self, config: RunConfig, text: str) -> None:
        write_artifact(text, config.output)

    @abstractmethod
    def run(self, config: RunConfig) -> int:
        """
        Execute the command

        Returns:
            int: exit code (0 ok, 1 verification failure)
        """
        pass
