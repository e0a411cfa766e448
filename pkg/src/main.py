#!/usr/bin/env python3
"""
casimir-kit command line
Usage: python src/main.py COMMAND [options]
"""

import os
import sys

# Add src to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli.app import run


def main() -> int:
    """Main entry point"""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
