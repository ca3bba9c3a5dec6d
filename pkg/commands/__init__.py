"""Subcommands of the command-line front end"""

from .base import BaseCommand, RunConfig, UsageError
from .enumerate import EnumerateCommand
from .graph import GraphCommand
from .clustervars import ClusterVarsCommand
from .cycles import CyclesCommand
from .homology import HomologyCommand
from .relations import RelationsCommand
from .verify import VerifyCommand
from .recurrence import RecurrenceCommand

__all__ = [
    'BaseCommand', 'RunConfig', 'UsageError', 'EnumerateCommand', 'GraphCommand', 'ClusterVarsCommand',
    'CyclesCommand', 'HomologyCommand', 'RelationsCommand', 'VerifyCommand', 'RecurrenceCommand',
]
