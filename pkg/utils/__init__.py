"""Utility functions"""

from .export import graph_to_dict, graph_to_dot, rows_to_csv, to_json
from .output import cleanup_stale_artifacts, output_dir, read_manifest, resolve_output, write_artifact
from .progress import logging_progress, make_bar

__all__ = [
    'graph_to_dict', 'graph_to_dot', 'rows_to_csv', 'to_json',
    'cleanup_stale_artifacts', 'output_dir', 'read_manifest', 'resolve_output', 'write_artifact',
    'logging_progress', 'make_bar',
]
