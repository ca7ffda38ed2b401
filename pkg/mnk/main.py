"""Main entry point for the mnk command."""

import sys

from mnk.cli import main

if __name__ == "__main__":
    sys.exit(main())
