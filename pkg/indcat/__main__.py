"""python -m indcat"""

import sys

from indcat.ui.cli import run

if __name__ == "__main__":
    sys.exit(run())
