"""
Entry point for python -m kahler_qm.
"""

import sys
from .cli.main import main

if __name__ == "__main__":
    sys.exit(main())
