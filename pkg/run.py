#!/usr/bin/env python3
"""Run the command-line tool."""
import sys

from wildcover.main import main

if __name__ == "__main__":
    sys.exit(main())
