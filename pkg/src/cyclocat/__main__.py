import sys

from cyclocat.cli import main

sys.exit(main())
