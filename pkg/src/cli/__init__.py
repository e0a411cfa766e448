"""
CLI package
Command-line front end: single-point evaluations, sweeps and model comparisons
"""

from cli.app import run, build_parser, EXIT_OK, EXIT_DOMAIN, EXIT_CONVERGENCE, EXIT_USAGE

__all__ = ['run', 'build_parser', 'EXIT_OK', 'EXIT_DOMAIN', 'EXIT_CONVERGENCE', 'EXIT_USAGE']
