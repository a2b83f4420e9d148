"""
Точка входа CLI.

    python main.py pipeline graph.txt -o out.seg --svg out.svg
"""

import asyncio
import sys

from core.console import run_cli


def main() -> int:
    return asyncio.run(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    sys.exit(main())
