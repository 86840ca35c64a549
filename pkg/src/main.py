"""fdea - run the command-line tool from a source checkout (python -m src.main)."""

import sys

from src.modules.frontend.cli import main

if __name__ == "__main__":
    sys.exit(main())
