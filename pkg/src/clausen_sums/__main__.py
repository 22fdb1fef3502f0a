import sys

from clausen_sums.cli import main

sys.exit(main())
