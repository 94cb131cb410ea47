"""
Configuration package: run configuration, defaults and argument parsing helpers.
"""

from .run_config import RunConfig, parse_q, TOOL_VERSION

__all__ = [
    'RunConfig',
    'parse_q',
    'TOOL_VERSION'
]
