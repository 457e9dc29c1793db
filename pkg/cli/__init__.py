"""
Command-line interface: argparse subcommands over every package.
"""

from cli.main import build_parser, run

__all__ = ["build_parser", "run"]

__version__ = "1.0.0"
