import sys

from oligosim.cli import main

sys.exit(main())
