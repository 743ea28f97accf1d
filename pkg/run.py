#!/usr/bin/env python3
"""
Main entry point for sqpow

Usage:
    python run.py generate --family thm1 --k 3 --limit 100000
    python run.py verify --n 2197 --k 3 --z-class 6/12 --z-min -30 --z-max 13
    python run.py local --n 2197 --k 3 --z-class 6/12
    python run.py help
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))


def show_help():
    """Show help message"""
    print("""
sqpow - sums of two squares and a power
=======================================

Usage:
    python run.py <command> [options]

Commands:
    generate        List THM1 / THM2 / THM3 family targets
    verify          Exhaustive search for x^2 + y^2 + z^k = n over a z window
    witness         Certificate that one z fails for one target
    local           Hensel-lifting check for congruence obstructions
    count           Family counts against the predicted density
    twosquares      Sum-of-two-squares classification
    landau          Counts of integers built from primes 1 mod 4
    sweep           Search, witness and local-check a whole family
    help            Show this help message

Environment:
    SQPOW_THREADS         worker threads (default 1)
    SQPOW_OUTPUT_BUFFER   output buffer size in characters (default 65536)

More Info:
    python run.py <command> --help, or see README.md
    """)


def main():
    if len(sys.argv) < 2 or sys.argv[1].lower() == "help":
        show_help()
        return 0

    from src.cli.main import run
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
